# Set constructions — thickenings, domains, canonical bijections, pullbacks
