# Spec mini-language parsers (sets, domains, candidate generators)
