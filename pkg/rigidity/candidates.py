"""
Candidate Maps — finite stand-ins for "every total computable function".

Families:
  - Affine(a, b)              x ↦ a·x + b  (a, b natural)
  - Table                     explicit pairs, identity elsewhere
  - SeededInjection(s, R)     x < R shuffled into [0, 2R); x >= R ↦ x + R
  - Adversary(k)              keeps every f_j(y) = y, forcing the pigeonhole collision
  - Custom                    any total rule (code-level builtins, extracted maps)

Code-level builtins act on pairing codes: identity, projection, collapse,
constant, and the π₁-preserving column shuffle.
"""

import json
import os
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

import numpy as np

import config
from constructions.domains import sigma, sigma_inv
from core.errors import (
    NotInDomainError, PreconditionError, RangeViolation, SpecParseError, UnknownBuilderError,
)
from core.naturals import ensure_natural
from core.pairing import pair, pi1, unpair
from parsers.generator_spec_parser import parse_generator_specs
from reductions.reduction import Reduction, ReductionClass


class CandidateMode(str, Enum):
    AFFINE = 'affine'
    TABLE = 'table'
    SEEDED_INJECTION = 'inj'
    ADVERSARY = 'adversary'
    CUSTOM = 'custom'


@dataclass(frozen=True)
class CandidateMap:
    """A named total map on naturals."""
    mode: CandidateMode
    name: str
    rule: Callable[[int], int] = field(repr=False, compare=False)
    params: tuple = ()

    def __call__(self, x):
        image = self.rule(ensure_natural(x, 'x'))
        if type(image) is int and 0 <= image <= config.MAX_NATURAL:
            return image
        return ensure_natural(image, f"{self.name}({x})")

    def __str__(self):
        return self.name


# =============================================================================
# FAMILIES
# =============================================================================

def affine(a, b):
    ensure_natural(a, 'a')
    ensure_natural(b, 'b')
    return CandidateMap(CandidateMode.AFFINE, f"affine[a={a},b={b}]",
                        lambda x: a * x + b, (('a', a), ('b', b)))


def table(pairs, name=None):
    """
    Explicit map given by (input, output) pairs; identity outside the table.

    Example:
        table([(0, 5)]) sends 0 to 5 and fixes everything else
    """
    mapping = {ensure_natural(x, 'input'): ensure_natural(y, 'output') for x, y in pairs}
    label = name or 'table{' + ','.join(f"{x}:{y}" for x, y in sorted(mapping.items())) + '}'
    return CandidateMap(CandidateMode.TABLE, label, lambda x: mapping.get(x, x),
                        (('size', len(mapping)),))


def _injection_values(seed, size):
    return np.random.default_rng(seed).permutation(2 * size)[:size]


def seeded_injection(seed, size):
    """Injective on all of ω: the first `size` inputs land shuffled in [0, 2·size)."""
    ensure_natural(seed, 'seed')
    ensure_natural(size, 'range')
    values = _injection_values(seed, size).tolist()

    def rule(x):
        return values[x] if x < size else x + size

    return CandidateMap(CandidateMode.SEEDED_INJECTION, f"inj[seed={seed},range={size}]",
                        rule, (('seed', seed), ('range', size)))


def adversary(k):
    """
    h((k+1)y + j) = ky + (j mod k).

    Every value stays in V_y = {ky..ky+k-1}, so no f_j deviates and inputs
    j = 0 and j = k collide.
    """
    ensure_natural(k, 'k')
    if k < 1:
        raise PreconditionError(f"adversary needs k >= 1, got {k}")

    def rule(x):
        y, j = divmod(x, k + 1)
        return k * y + j % k

    return CandidateMap(CandidateMode.ADVERSARY, f"adversary[k={k}]", rule, (('k', k),))


def custom(name, rule):
    return CandidateMap(CandidateMode.CUSTOM, name, rule)


# =============================================================================
# CODE-LEVEL BUILTINS
# =============================================================================

def identity_map():
    return custom('identity', lambda z: z)


def projection_map():
    """z ↦ π₁(z)."""
    return custom('projection', pi1)


def collapse_map():
    """<x,i> ↦ <x,0>."""
    return custom('collapse', lambda z: pair(pi1(z), 0))


def constant_map(value):
    ensure_natural(value, 'value')
    return custom(f"constant[{value}]", lambda z: value)


def column_shuffle(seed, width):
    """<x,i> ↦ <x, s(i)> with s a seeded injection; injective and π₁-preserving."""
    inner = seeded_injection(seed, width)

    def rule(z):
        x, i = unpair(z)
        return pair(x, inner.rule(i))

    return custom(f"shuffle[seed={seed},width={width}]", rule)


# =============================================================================
# DOMAIN LIFTS
# =============================================================================

def lift_through_domain(h, d):
    """f(z) = h(σ_d⁻¹(z)) on the codes of d."""
    return custom(f"{h.name}∘σ⁻¹[{d.descriptor}]", lambda z: h(sigma_inv(d, z)))


def induced_domain_map(h, source, target):
    """
    f(z) = σ_target(h(σ_source⁻¹(z))).

    A candidate reduction between the pullbacks over source and target seen
    as a map between the domains; its images are always target members.
    """
    return custom(
        f"σ[{target.descriptor}]∘{h.name}∘σ⁻¹[{source.descriptor}]",
        lambda z: sigma(target, h(sigma_inv(source, z))),
    )


def reduction_from_domain_map(f, source, target, source_set, target_set):
    """
    Push a code map f: source → target back to pullback indices:
    n ↦ σ_target⁻¹(f(σ_source(n))).

    Raises (when evaluated):
        RangeViolation: f leaves the target domain
    """
    def rule(n):
        z = sigma(source, n)
        image = f(z)
        try:
            return sigma_inv(target, image)
        except NotInDomainError:
            raise RangeViolation(z, image, target.descriptor) from None

    return Reduction(rule, ReductionClass.many_one(), source_set.descriptor,
                     target_set.descriptor, f"pushdown[{f.name}]")


# =============================================================================
# GENERATOR SPECS
# =============================================================================

def _is_pair(p):
    return (isinstance(p, list) and len(p) == 2
            and all(isinstance(v, int) and not isinstance(v, bool) for v in p))


def load_table_corpus(path):
    """
    Read a JSON table file: one table ([[in, out], ...]) or a list of tables.

    Returns:
        list of CandidateMap

    Raises:
        SpecParseError: missing file, invalid JSON, or an entry that is not an [in, out] pair
    """
    if not os.path.exists(path):
        raise SpecParseError(f"table file not found: {path}")
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise SpecParseError(f"table file {path} is not valid JSON: {e.msg} (line {e.lineno})") from None
    if not isinstance(data, list):
        raise SpecParseError(f"table file must hold a JSON list: {path}")
    tables = [data] if all(_is_pair(p) for p in data) else data
    base = os.path.basename(path)
    corpus = []
    for i, t in enumerate(tables):
        if not isinstance(t, list) or not all(_is_pair(p) for p in t):
            raise SpecParseError(f"table {i} in {path} must be a list of [in, out] integer pairs")
        try:
            corpus.append(table([tuple(p) for p in t], name=f"table[{base}#{i}]"))
        except ValueError as e:
            raise SpecParseError(f"table {i} in {path}: {e}") from None
    return corpus


def _node_int(node, key, default):
    value = node.args.get(key, default)
    if not isinstance(value, int):
        raise SpecParseError(f"{node.name}: {key} must be a natural, got {value!r}", '', node.position)
    return value


def _build_family(node, N, seed):
    name = node.name
    if name == 'affine':
        amin, amax = _node_int(node, 'amin', 1), _node_int(node, 'amax', 3)
        bmin, bmax = _node_int(node, 'bmin', 0), _node_int(node, 'bmax', 2)
        return [affine(a, b) for a in range(amin, amax + 1) for b in range(bmin, bmax + 1)]
    if name == 'inj':
        first = _node_int(node, 'seed', seed)
        size = _node_int(node, 'range', N)
        count = _node_int(node, 'count', 1)
        return [seeded_injection(s, size) for s in range(first, first + count)]
    if name == 'adversary':
        return [adversary(_node_int(node, 'k', 2))]
    if name == 'table':
        path = node.args.get('file')
        if not isinstance(path, str):
            raise SpecParseError("table needs file=<path>", '', node.position)
        return load_table_corpus(path)
    if name == 'identity':
        return [identity_map()]
    if name == 'projection':
        return [projection_map()]
    if name == 'collapse':
        return [collapse_map()]
    if name == 'constant':
        return [constant_map(_node_int(node, 'value', 0))]
    if name == 'shuffle':
        return [column_shuffle(_node_int(node, 'seed', seed), _node_int(node, 'width', N))]
    raise UnknownBuilderError(f"unknown generator {name!r}", '', node.position)


def generate_candidates(spec, N, seed=None):
    """
    Deterministic candidate list for a '+'-joined generator spec.

    Args:
        spec: e.g. "affine:amax=3,bmax=2+adversary:k=2"
        N: Window; default range/width of injections and shuffles
        seed: Default seed when a family gives none

    Example:
        generate_candidates("affine:amax=3,bmax=2", 100) → 9 candidates
    """
    seed = config.DEFAULT_SEED if seed is None else seed
    candidates = []
    for node in parse_generator_specs(spec):
        try:
            candidates.extend(_build_family(node, N, seed))
        except SpecParseError as e:
            raise type(e)(e.message, spec, e.position) from None
    return candidates
