"""Key generation, encryption, and the randomizing channel.

A scheme is an ordered multiset of unitaries: either the full
small-bias family indexed by every 2r-bit key ("aghp"), an explicit
list of Pauli descriptors ("explicit-pauli"), or dense Haar-sampled
matrices ("haar").  Averaging conjugation over the multiset gives the
channel an eavesdropper sees when the key is unknown; the audit
machinery measures how close that channel pushes states to the
maximally mixed state.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .pauli import PauliKey, _parities, apply_pauli, apply_pauli_inverse
from .qstate import (
    DensityMatrix,
    random_pure_state,
    trace_distance_from_mixed,
)
from .smallbias import build_set, expand_key

__all__ = [
    "Scheme",
    "AuditReport",
    "aghp_scheme",
    "explicit_pauli_scheme",
    "haar_scheme",
    "full_pauli_scheme",
    "keygen",
    "encrypt",
    "decrypt",
    "channel_apply",
    "random_scheme_size",
    "sample_random_scheme",
    "audit_epsilon_empirical",
    "expected_distance_bound",
]

MAX_PAULI_CHANNEL_DIM = 256
MAX_HAAR_DIM = 64
UNITARITY_TOL = 1e-10


@dataclass(frozen=True)
class Scheme:
    """n qubits plus the operator multiset defining the channel."""

    n: int
    kind: str
    descriptors: tuple = None
    unitaries: tuple = None
    params: object = None

    def __post_init__(self):
        if self.kind in ("aghp", "explicit-pauli"):
            if not self.descriptors:
                raise ValueError("a scheme needs at least one operator")
            lim = 1 << (2 * self.n)
            if any(not 0 <= w < lim for w in self.descriptors):
                raise ValueError("descriptor exceeds 2n bits")
            if self.kind == "aghp" and self.params is None:
                raise ValueError("aghp scheme requires its params")
        elif self.kind == "haar":
            if not self.unitaries:
                raise ValueError("a scheme needs at least one operator")
            d = 1 << self.n
            if d > MAX_HAAR_DIM:
                raise ValueError(f"haar schemes capped at dimension {MAX_HAAR_DIM}")
            eye = np.eye(d)
            frozen = []
            for u in self.unitaries:
                u = np.asarray(u, dtype=complex)
                if u.shape != (d, d):
                    raise ValueError("unitary has wrong dimension")
                if np.abs(u.conj().T @ u - eye).max() > UNITARITY_TOL:
                    raise ValueError("operator is not unitary")
                u = u.copy()
                u.setflags(write=False)
                frozen.append(u)
            object.__setattr__(self, "unitaries", tuple(frozen))
        else:
            raise ValueError(f"unknown scheme kind {self.kind!r}")

    @property
    def m(self):
        if self.kind == "haar":
            return len(self.unitaries)
        return len(self.descriptors)

    @property
    def pauli_keys(self):
        if self.descriptors is None:
            raise ValueError("haar schemes carry no Pauli keys")
        return tuple(PauliKey.from_descriptor(w, self.n)
                     for w in self.descriptors)


@dataclass(frozen=True)
class AuditReport:
    """Outcome of an empirical randomization audit."""

    epsilon_target: float
    max_distance: float
    mean_distance: float
    trials: int
    distances: tuple
    passed: bool

    def to_dict(self):
        return {
            "epsilon_target": self.epsilon_target,
            "max_distance": self.max_distance,
            "mean_distance": self.mean_distance,
            "trials": self.trials,
            "distances": list(self.distances),
            "passed": self.passed,
        }


def aghp_scheme(params):
    """The scheme whose operators are the small-bias members, one per
    2r-bit key (m = 2^2r, duplicates included)."""
    members = build_set(params).members
    return Scheme(n=params.n, kind="aghp", descriptors=members, params=params)


def explicit_pauli_scheme(n, keys):
    """Scheme from an explicit list of Pauli keys or 2n-bit descriptors."""
    descriptors = tuple(
        k.descriptor if isinstance(k, PauliKey) else int(k) for k in keys)
    return Scheme(n=n, kind="explicit-pauli", descriptors=descriptors)


def haar_scheme(n, unitaries):
    """Scheme from an explicit list of dense unitaries."""
    return Scheme(n=n, kind="haar", unitaries=tuple(unitaries))


def full_pauli_scheme(n):
    """All 2^2n Pauli operators: the completely randomizing baseline."""
    return explicit_pauli_scheme(n, range(1 << (2 * n)))


def _as_seed_sequence(seed):
    if isinstance(seed, np.random.SeedSequence):
        return seed
    return np.random.SeedSequence(seed)


def keygen(params, entropy):
    """A uniform 2r-bit key; deterministic given a seeded source.

    `entropy` is an int seed, SeedSequence, or Generator.
    """
    rng = entropy if isinstance(entropy, np.random.Generator) \
        else np.random.default_rng(entropy)
    nbits = params.key_len
    raw = rng.bytes((nbits + 7) // 8)
    return int.from_bytes(raw, "big") & ((1 << nbits) - 1)


def encrypt(psi, key, params):
    """Apply the Pauli operator selected by the key."""
    if psi.n != params.n:
        raise ValueError("state and params disagree on qubit count")
    w = expand_key(key, params)
    return apply_pauli(PauliKey.from_descriptor(w, params.n), psi)


def decrypt(psi, key, params):
    """Invert encrypt for the same key (exact up to global phase)."""
    if psi.n != params.n:
        raise ValueError("state and params disagree on qubit count")
    w = expand_key(key, params)
    return apply_pauli_inverse(PauliKey.from_descriptor(w, params.n), psi)


def channel_apply(scheme, rho):
    """The key-averaged channel: (1/m) sum_i U_i rho U_i^dagger.

    Pauli conjugations never materialize operator matrices; duplicate
    descriptors are aggregated, so the cost scales with the number of
    distinct operators.
    """
    if rho.n != scheme.n:
        raise ValueError("state and scheme disagree on qubit count")
    d = rho.dim
    if scheme.kind == "haar":
        out = np.zeros((d, d), dtype=complex)
        for u in scheme.unitaries:
            out += u @ rho.entries @ u.conj().T
        return DensityMatrix(out / scheme.m)
    if d > MAX_PAULI_CHANNEL_DIM:
        raise ValueError(
            f"pauli channels capped at dimension {MAX_PAULI_CHANNEL_DIM}")
    n = scheme.n
    mask = (1 << n) - 1
    idx = np.arange(d)
    out = np.zeros((d, d), dtype=complex)
    for w, count in Counter(scheme.descriptors).items():
        a, b = w >> n, w & mask
        perm = idx ^ a
        sign = 1.0 - 2.0 * _parities(idx, b)
        out += (count * sign[:, None] * sign[None, :]) \
            * rho.entries[np.ix_(perm, perm)]
    return DensityMatrix(out / scheme.m)


def random_scheme_size(n, epsilon):
    """ceil(37 * 2^n / eps^2 * ln(15/eps)): the operator count at which
    an i.i.d. sample from any completely randomizing distribution is
    epsilon-randomizing with overwhelming probability."""
    if not 0 < epsilon <= 2:
        raise ValueError("epsilon must lie in (0, 2]")
    return math.ceil(37 * 2**n / epsilon**2 * math.log(15 / epsilon))


def _haar_unitary(d, rng):
    """Haar-distributed unitary: Gram-Schmidt orthonormalization of a
    complex Gaussian matrix (the positive-diagonal convention fixes the
    column phases, which makes the output rotation invariant)."""
    z = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q = np.empty_like(z)
    for k in range(d):
        v = z[:, k]
        for _ in range(2):  # re-orthogonalize once for stability
            for j in range(k):
                v = v - (q[:, j].conj() @ v) * q[:, j]
        q[:, k] = v / np.sqrt((np.abs(v) ** 2).sum())
    return q


def sample_random_scheme(n, epsilon, source="pauli-uniform", seed=None):
    """m i.i.d. operators from a completely randomizing distribution:
    uniform Pauli descriptors, or Haar unitaries (n <= 6)."""
    m = random_scheme_size(n, epsilon)
    rng = np.random.default_rng(seed)
    if source == "pauli-uniform":
        descriptors = tuple(int(w) for w in rng.integers(0, 1 << (2 * n),
                                                         size=m))
        return Scheme(n=n, kind="explicit-pauli", descriptors=descriptors)
    if source == "haar":
        if (1 << n) > MAX_HAAR_DIM:
            raise ValueError("haar sampling capped at n <= 6")
        d = 1 << n
        return Scheme(n=n, kind="haar",
                      unitaries=tuple(_haar_unitary(d, rng) for _ in range(m)))
    raise ValueError(f"unknown source {source!r}")


def audit_epsilon_empirical(scheme, epsilon_target, trials, seed):
    """Randomize `trials` seeded Haar-random pure states through the
    scheme's channel and measure each exact trace distance from I/d.

    Per-trial seeds are split from the master seed, so any evaluation
    order gives identical results.
    """
    children = _as_seed_sequence(seed).spawn(trials)
    distances = []
    for child in children:
        psi = random_pure_state(scheme.n, seed=child)
        out = channel_apply(scheme, DensityMatrix.from_pure(psi))
        distances.append(trace_distance_from_mixed(out))
    max_d = max(distances)
    return AuditReport(
        epsilon_target=float(epsilon_target),
        max_distance=max_d,
        mean_distance=sum(distances) / len(distances),
        trials=trials,
        distances=tuple(distances),
        passed=max_d <= epsilon_target,
    )


def expected_distance_bound(n, m):
    """sqrt(d/m): the expected trace distance from I/d when m operators
    are drawn from a completely randomizing distribution."""
    if m < 1:
        raise ValueError("m must be positive")
    return math.sqrt(2**n / m)
