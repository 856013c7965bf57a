# Finite universes — exhaustive ground truth for the class algebra
