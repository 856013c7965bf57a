"""
Generator Spec Parser — candidate-family specs, joined with '+'.

Example:
    "affine:amax=3,bmax=2+inj:seed=1,range=100,count=5+adversary:k=2"
"""

from core.errors import SpecParseError
from parsers.set_spec_parser import parse_spec


def split_specs(text):
    """
    Split on top-level '+' (outside parentheses and brackets).

    Returns:
        list of (offset, piece)
    """
    pieces, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in '([':
            depth += 1
        elif ch in ')]':
            depth -= 1
        elif ch == '+' and depth == 0:
            pieces.append((start, text[start:i]))
            start = i + 1
    pieces.append((start, text[start:]))
    return pieces


def parse_generator_specs(text):
    """
    Parse each '+'-separated generator spec.

    Returns:
        list of SpecNode

    Raises:
        SpecParseError: empty piece or malformed spec, positioned in the full text
    """
    nodes = []
    for offset, piece in split_specs(text.strip()):
        if not piece.strip():
            raise SpecParseError("empty generator spec", text, offset)
        try:
            nodes.append(parse_spec(piece))
        except SpecParseError as e:
            raise SpecParseError(e.message, text, offset + e.position) from None
    return nodes
