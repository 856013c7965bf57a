# Core sets — naturals, pairing, membership oracles
