# CLI commands — each builds a Report from specs and flags
