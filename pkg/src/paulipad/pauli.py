"""Pauli operators as 2n-bit strings, applied to states in O(2^n).

A pair (a, b) of n-bit strings names the operator X^a Z^b (the global
phase i^|a AND b| that would make the Y factors exact is dropped
throughout: states are compared phase-insensitively, and it cancels in
density-matrix conjugation).  Bit order: qubit 1 is the most
significant bit of a, b, and of basis indices, so X-parts xor directly
onto indices.  A 2n-bit descriptor packs a in the high n bits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .qstate import StateVector

__all__ = [
    "PauliKey",
    "symplectic_ip",
    "apply_pauli",
    "apply_pauli_inverse",
    "pauli_conjugate_sign",
]


@dataclass(frozen=True)
class PauliKey:
    """X-part a and Z-part b of an n-qubit Pauli operator."""

    n: int
    a: int
    b: int

    def __post_init__(self):
        if not (0 <= self.a < (1 << self.n) and 0 <= self.b < (1 << self.n)):
            raise ValueError("a, b must be n-bit strings")

    @classmethod
    def from_descriptor(cls, w, n):
        if not 0 <= w < (1 << (2 * n)):
            raise ValueError("descriptor must be a 2n-bit string")
        return cls(n=n, a=w >> n, b=w & ((1 << n) - 1))

    @property
    def descriptor(self):
        return (self.a << self.n) | self.b


def symplectic_ip(w1, w2, n):
    """Symplectic inner product of two 2n-bit strings (a,b), (c,d):
    <a,d> + <b,c> mod 2.  Zero exactly when the operators commute."""
    lim = 1 << (2 * n)
    if not (0 <= w1 < lim and 0 <= w2 < lim):
        raise ValueError("inputs must be 2n-bit strings")
    mask = (1 << n) - 1
    a, b = w1 >> n, w1 & mask
    c, d = w2 >> n, w2 & mask
    return ((a & d).bit_count() + (b & c).bit_count()) & 1


def _parities(values, mask):
    return np.bitwise_count(values & mask) & 1


def apply_pauli(key, psi):
    """X^a Z^b |psi>: amplitude z |-> (-1)^<b,z> amplitude, moved to z^a."""
    if key.n != psi.n:
        raise ValueError("operator and state qubit counts differ")
    idx = np.arange(psi.dim)
    signs = 1.0 - 2.0 * _parities(idx, key.b)
    out = np.empty(psi.dim, dtype=complex)
    out[idx ^ key.a] = signs * psi.amps
    return StateVector(psi.n, out)


def apply_pauli_inverse(key, psi):
    """Z^b X^a |psi>, the inverse of apply_pauli up to global phase:
    amplitude at z moves to z^a and picks up (-1)^<b, z^a>."""
    if key.n != psi.n:
        raise ValueError("operator and state qubit counts differ")
    idx = np.arange(psi.dim)
    dest = idx ^ key.a
    signs = 1.0 - 2.0 * _parities(dest, key.b)
    out = np.empty(psi.dim, dtype=complex)
    out[dest] = signs * psi.amps
    return StateVector(psi.n, out)


def pauli_conjugate_sign(key, target):
    """Sign picked up when X^a Z^b conjugates the operator named by the
    2n-bit string `target`: +1 if they commute, -1 if they anticommute."""
    return 1 - 2 * symplectic_ip(key.descriptor, target, key.n)
