# Console output and report writers
