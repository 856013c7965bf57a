"""
Set Spec Parser — the mini-language the CLI uses to name sets and domains.

Grammar:
    spec  := name [ '(' spec ')' ] [ ':' args ]
    args  := '[' ints ']' | arg (',' arg)*
    arg   := key '=' value
    value := int | '[' ints ']' | '(' spec ')' | spec   (keys 'of', 'domain')
           | token                                      (any other key)

A nested spec with its own key list takes every remaining key, so
    thicken:k=3,of=random:seed=7
reads as thicken(k=3, of=random(seed=7)); wrap a nested spec in
parentheses to close it early:
    pullback:domain=bounded(evens),of=(random:seed=9)

Set builders:   evens odds primes empty full random:seed=<n>
                explicit:[a,b,...] complement:of=<spec> thicken:k=<n>,of=<spec>
                pullback:domain=<domainspec>,of=<spec> column:k=<n>
Domain specs:   pyramid full calibrated(<spec>) bounded(<spec>)
"""

import re
from dataclasses import dataclass, field

from constructions.domains import (
    bounded_calibrated_domain, calibrated_domain, full_domain, pyramid_domain,
)
from constructions.families import disjoint_family
from constructions.pullback import pullback
from constructions.thickening import thicken
from core.builtin_sets import BUILTIN_SETS, finite_set
from core.errors import SpecParseError, UnknownBuilderError
from core.omega_set import complement, seeded_random_set

_NAME_RE = re.compile(r'[a-z][a-z0-9_-]*')
_INT_RE = re.compile(r'\d+')

# Keys whose values are nested specs
SPEC_KEYS = frozenset({'of', 'domain'})


@dataclass
class SpecNode:
    """One parsed builder call."""
    name: str
    position: int
    args: dict = field(default_factory=dict)
    inner: 'SpecNode | None' = None


class _Parser:

    def __init__(self, text):
        self.text = text
        self.pos = 0

    def fail(self, message, position=None):
        raise SpecParseError(message, self.text, self.pos if position is None else position)

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ''

    def expect(self, ch):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else 'end of spec'
            self.fail(f"expected {ch!r}, found {found}")
        self.pos += 1

    def name(self, what='builder name'):
        m = _NAME_RE.match(self.text, self.pos)
        if not m:
            self.fail(f"expected {what}")
        self.pos = m.end()
        return m.group(0)

    def integer(self):
        m = _INT_RE.match(self.text, self.pos)
        if not m:
            self.fail("expected a natural number")
        self.pos = m.end()
        return int(m.group(0))

    def int_list(self):
        self.expect('[')
        values = []
        if self.peek() != ']':
            values.append(self.integer())
            while self.peek() == ',':
                self.pos += 1
                values.append(self.integer())
        self.expect(']')
        return values

    def token(self):
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in ',()':
            self.pos += 1
        if self.pos == start:
            self.fail("expected a value")
        return self.text[start:self.pos]

    def spec(self):
        start = self.pos
        node = SpecNode(self.name(), start)
        if self.peek() == '(':
            self.pos += 1
            node.inner = self.spec()
            self.expect(')')
        if self.peek() == ':':
            self.pos += 1
            if self.peek() == '[':
                node.args['members'] = self.int_list()
            else:
                self.arg(node)
                while self.peek() == ',':
                    self.pos += 1
                    self.arg(node)
        return node

    def arg(self, node):
        key_pos = self.pos
        key = self.name('key')
        if key in node.args:
            self.fail(f"duplicate key {key!r}", key_pos)
        self.expect('=')
        ch = self.peek()
        if ch.isdigit():
            node.args[key] = self.integer()
        elif ch == '[':
            node.args[key] = self.int_list()
        elif ch == '(':
            self.pos += 1
            node.args[key] = self.spec()
            self.expect(')')
        elif key in SPEC_KEYS:
            node.args[key] = self.spec()
        else:
            node.args[key] = self.token()


def parse_spec(text):
    """
    Parse a spec string into a SpecNode tree.

    Raises:
        SpecParseError: with the offending position
    """
    text = text.strip()
    parser = _Parser(text)
    node = parser.spec()
    if parser.pos != len(text):
        parser.fail(f"unexpected {text[parser.pos]!r}")
    return node


# =============================================================================
# BUILDERS
# =============================================================================

def _arg(node, key, kind=int, default=None, required=True):
    if key not in node.args:
        if default is not None or not required:
            return default
        raise SpecParseError(f"{node.name} needs {key}=", '', node.position)
    value = node.args[key]
    if kind is int and not isinstance(value, int):
        raise SpecParseError(f"{node.name}: {key} must be a natural, got {value!r}", '', node.position)
    if kind is SpecNode and not isinstance(value, SpecNode):
        raise SpecParseError(f"{node.name}: {key} must be a spec, got {value!r}", '', node.position)
    return value


def _check_keys(node, allowed):
    extra = set(node.args) - set(allowed)
    if extra:
        raise SpecParseError(f"{node.name}: unexpected key(s) {', '.join(sorted(extra))}", '', node.position)
    if node.inner is not None and node.name not in ('calibrated', 'bounded'):
        raise SpecParseError(f"{node.name} takes no parenthesized argument", '', node.position)


def build_set(node, default_seed=None):
    """Turn a SpecNode into an OmegaSet."""
    name = node.name
    if name in BUILTIN_SETS:
        _check_keys(node, ())
        return BUILTIN_SETS[name]()
    if name == 'random':
        _check_keys(node, ('seed',))
        return seeded_random_set(_arg(node, 'seed', default=default_seed))
    if name == 'explicit':
        _check_keys(node, ('members',))
        return finite_set(_arg(node, 'members', kind=list))
    if name == 'complement':
        _check_keys(node, ('of',))
        return complement(build_set(_arg(node, 'of', kind=SpecNode), default_seed))
    if name == 'thicken':
        _check_keys(node, ('k', 'of'))
        return thicken(build_set(_arg(node, 'of', kind=SpecNode), default_seed), _arg(node, 'k'))
    if name == 'pullback':
        _check_keys(node, ('domain', 'of'))
        domain = build_domain(_arg(node, 'domain', kind=SpecNode), default_seed)
        return pullback(domain, build_set(_arg(node, 'of', kind=SpecNode), default_seed))
    if name == 'column':
        _check_keys(node, ('k',))
        return disjoint_family(_arg(node, 'k'))
    raise UnknownBuilderError(f"unknown set builder {name!r}", '', node.position)


def build_domain(node, default_seed=None):
    """Turn a SpecNode into a ComputableDomain."""
    name = node.name
    if name == 'pyramid':
        _check_keys(node, ())
        return pyramid_domain()
    if name == 'full':
        _check_keys(node, ())
        return full_domain()
    if name in ('calibrated', 'bounded'):
        _check_keys(node, ('of',))
        inner = node.inner if node.inner is not None else _arg(node, 'of', kind=SpecNode)
        S = build_set(inner, default_seed)
        return calibrated_domain(S) if name == 'calibrated' else bounded_calibrated_domain(S)
    raise UnknownBuilderError(f"unknown domain builder {name!r}", '', node.position)


def _with_text(error, text):
    """Re-raise builder errors against the full spec text."""
    return type(error)(error.message, text, error.position)


def parse_set_spec(text, default_seed=None):
    """
    Build the OmegaSet described by text.

    Example:
        parse_set_spec("thicken:k=3,of=random:seed=7") → Thickening of random:seed=7

    Raises:
        SpecParseError, UnknownBuilderError
    """
    node = parse_spec(text)
    try:
        return build_set(node, default_seed)
    except SpecParseError as e:
        raise _with_text(e, text.strip()) from None


def parse_domain_spec(text, default_seed=None):
    """Build the ComputableDomain described by text."""
    node = parse_spec(text)
    try:
        return build_domain(node, default_seed)
    except SpecParseError as e:
        raise _with_text(e, text.strip()) from None
