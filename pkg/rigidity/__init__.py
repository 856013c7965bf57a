# Proof audits — autoreduction extraction, dichotomy refuters, rigidity probes
