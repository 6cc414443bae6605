"""Small-bias sets of bit strings built from GF(2^r) arithmetic.

The construction indexes a set of bit strings by pairs (x, y) of field
elements: entry (i, j) of the string for (x, y) is the GF(2) scalar
product <e_i * x^j, y>, laid out column-major (powers j outer, basis
index i inner).  Over all 2^(2r) pairs this yields a set whose bias
against every nonzero linear test is at most (s-1)/2^r, which is the
engine behind the approximate Pauli one-time pad: a key of 2r bits
selects one member, and the member's 2n bits name a Pauli operator.

All bias computations here are exact, over integer counts and
`fractions.Fraction`; floats appear only in the certified epsilon for
odd qubit counts, where 2^(n/2) is irrational.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .gf2 import GF2Field, find_irreducible, is_irreducible, poly_degree

__all__ = [
    "SchemeParams",
    "BiasedSet",
    "choose_params",
    "aghp_string",
    "build_set",
    "build_full_set",
    "expand_key",
    "bias_of",
    "max_bias",
    "certified_epsilon",
]

EXHAUSTIVE_BIAS_CAP = 24  # bits; 2^24 - 1 linear tests is the desk limit
BUILD_CAP = 28  # bits of key; 2^28 members is the enumeration limit


@dataclass(frozen=True)
class SchemeParams:
    """Parameters of one randomizing scheme: n qubits, field degree r,
    power count s, and the shared irreducible modulus of degree r.

    The key length is 2r bits; the r*s >= 2n slack is resolved by
    truncating member strings to their first 2n bits.
    """

    n: int
    r: int
    s: int
    modulus: int

    def __post_init__(self):
        if self.n < 1 or self.r < 1 or self.s < 1:
            raise ValueError("n, r, s must be positive")
        if self.r * self.s < 2 * self.n:
            raise ValueError("r*s must cover the 2n descriptor bits")
        if poly_degree(self.modulus) != self.r:
            raise ValueError("modulus degree must equal r")
        if not is_irreducible(self.modulus):
            raise ValueError("modulus must be irreducible")

    @property
    def key_len(self):
        return 2 * self.r

    @property
    def field(self):
        return GF2Field(self.r, self.modulus)


def choose_params(n, epsilon):
    """Parameters achieving trace-distance epsilon on n qubits.

    The key length is the smallest even 2r with
    2r >= ceil(n + 2*log2(1/epsilon) + 4), and s = ceil(2n/r).  The
    required inequality s/2^r <= epsilon * 2^(-n/2) is then re-checked
    exactly (in rational arithmetic); a failure would mean the
    arithmetic above is broken, never a legitimate outcome.
    """
    if n < 1:
        raise ValueError("n must be positive")
    eps = Fraction(epsilon)
    if not 0 < eps <= 2:
        raise ValueError("epsilon must lie in (0, 2]")
    if eps * eps * (1 << n) < 1:
        raise ValueError("epsilon below 2^(-n/2); use the full Pauli set instead")
    two_r = math.ceil(n + 2 * math.log2(1 / float(eps)) + 4)
    if two_r % 2:
        two_r += 1
    r = two_r // 2
    s = -(-2 * n // r)
    if Fraction(s * s, 1) * (1 << n) > eps * eps * (1 << (2 * r)):
        raise ArithmeticError("parameter check s/2^r <= eps*2^(-n/2) failed")
    return SchemeParams(n=n, r=r, s=s, modulus=find_irreducible(r))


@dataclass(frozen=True)
class BiasedSet:
    """An ordered multiset of `nbits`-wide bit strings (as ints), in
    (x, y)-lexicographic order of the indexing field-element pairs.

    `n` is set when the members were truncated to 2n descriptor bits
    for a qubit scheme, and None for a raw full-width set.
    """

    members: tuple
    nbits: int
    r: int = None
    s: int = None
    modulus: int = None
    n: int = None

    def __post_init__(self):
        if not self.members:
            raise ValueError("a biased set needs at least one member")
        if any(not 0 <= w < (1 << self.nbits) for w in self.members):
            raise ValueError("member exceeds the declared bit width")


def _mulx(v, modulus, r):
    # multiply by x and reduce once; modulus has degree exactly r
    v <<= 1
    if v >> r & 1:
        v ^= modulus
    return v


def _member_masks(x, r, s, modulus, nbits, field):
    """The first nbits field elements e_i * x^j, column-major in (j, i)."""
    masks = []
    t = 1
    for _ in range(s):
        u = t
        for _ in range(r):
            masks.append(u)
            if len(masks) == nbits:
                return masks
            u = _mulx(u, modulus, r)
        t = field.mul(t, x)
    return masks


def _member(masks, y):
    w = 0
    for m in masks:
        w = (w << 1) | ((m & y).bit_count() & 1)
    return w


def aghp_string(x, y, params):
    """Member string for field elements (x, y), truncated to 2n bits.

    Bit (i, j) of the underlying r-by-s array is <e_i * x^j, y>; the
    array is flattened column-major (j outer) and the first 2n bits are
    kept.  Packed big-endian: the first bit is the most significant.
    """
    field = params.field
    if x.field != field or y.field != field:
        raise ValueError("x, y must live in the params field")
    masks = _member_masks(x.value, params.r, params.s, params.modulus,
                          2 * params.n, field)
    return _member(masks, y.value)


def _enumerate_members(r, s, modulus, nbits):
    field = GF2Field(r, modulus)
    members = []
    for x in range(1 << r):
        masks = _member_masks(x, r, s, modulus, nbits, field)
        for y in range(1 << r):
            members.append(_member(masks, y))
    return tuple(members)


def build_set(params):
    """All 2^(2r) member strings of a scheme, truncated to 2n bits."""
    if params.key_len > BUILD_CAP:
        raise ValueError(f"enumeration capped at 2r <= {BUILD_CAP}")
    members = _enumerate_members(params.r, params.s, params.modulus,
                                 2 * params.n)
    return BiasedSet(members=members, nbits=2 * params.n, r=params.r,
                     s=params.s, modulus=params.modulus, n=params.n)


def build_full_set(r, s, modulus=None):
    """The untruncated set: 2^(2r) members of the full r*s bits."""
    if 2 * r > BUILD_CAP:
        raise ValueError(f"enumeration capped at 2r <= {BUILD_CAP}")
    if modulus is None:
        modulus = find_irreducible(r)
    members = _enumerate_members(r, s, modulus, r * s)
    return BiasedSet(members=members, nbits=r * s, r=r, s=s, modulus=modulus)


def expand_key(key, params):
    """Map a 2r-bit key to its 2n-bit Pauli descriptor.

    The high r bits of the key are x, the low r bits are y.  Pure and
    deterministic; distinct keys may collide on the same descriptor.
    """
    if not 0 <= key < (1 << params.key_len):
        raise ValueError("key does not fit in 2r bits")
    field = params.field
    x = key >> params.r
    y = key & ((1 << params.r) - 1)
    masks = _member_masks(x, params.r, params.s, params.modulus,
                          2 * params.n, field)
    return _member(masks, y)


def bias_of(weights, u):
    """|E (-1)^<u, W>| for W distributed per `weights`, exactly.

    `weights` maps bit strings (ints) to nonnegative rationals that must
    sum to exactly 1.
    """
    if not weights:
        raise ValueError("empty weight map")
    total = Fraction(0)
    acc = Fraction(0)
    for w, p in weights.items():
        p = Fraction(p)
        if p < 0:
            raise ValueError("negative weight")
        total += p
        acc += -p if (w & u).bit_count() & 1 else p
    if total != 1:
        raise ValueError("weights must sum to exactly 1")
    return abs(acc)


def _uniform_counts(members):
    counts = Counter(members)
    return list(counts.items()), len(members)


def max_bias(bset, mode="exhaustive", samples=None, seed=None):
    """Largest bias of the set against nonzero linear tests.

    mode="exhaustive" scans all 2^nbits - 1 nonzero strings and returns
    the exact maximum as a Fraction (requires nbits <= 24).
    mode="sampled" scans `samples` uniformly random nonzero strings,
    a lower estimate of the true maximum.
    """
    items, total = _uniform_counts(bset.members)
    if mode == "exhaustive":
        if bset.nbits > EXHAUSTIVE_BIAS_CAP:
            raise ValueError(
                f"exhaustive scan capped at {EXHAUSTIVE_BIAS_CAP} bits")
        tests = range(1, 1 << bset.nbits)
    elif mode == "sampled":
        if not samples or samples < 1:
            raise ValueError("sampled mode needs a positive sample count")
        rng = np.random.default_rng(seed)
        tests = (int(rng.integers(1, 1 << bset.nbits)) for _ in range(samples))
    else:
        raise ValueError(f"unknown mode {mode!r}")

    best = 0
    for u in tests:
        acc = 0
        for w, c in items:
            acc += -c if (w & u).bit_count() & 1 else c
        acc = abs(acc)
        if acc > best:
            best = acc
    return Fraction(best, total)


def certified_epsilon(bset):
    """2^(n/2) times the exhaustive max bias: a proven upper bound on the
    trace distance of every randomized state from the maximally mixed
    state, computed without touching any quantum state.

    Exact (a Fraction) for even n; a float for odd n.
    """
    if bset.n is None:
        raise ValueError("set carries no qubit count; built raw?")
    mb = max_bias(bset, mode="exhaustive")
    if bset.n % 2 == 0:
        return Fraction(1 << (bset.n // 2)) * mb
    return math.sqrt(2.0**bset.n) * float(mb)
