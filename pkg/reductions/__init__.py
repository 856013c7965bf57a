# Reduction witnesses, classes and window verdicts
