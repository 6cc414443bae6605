"""Dense state-vector and density-matrix numerics.

Everything here is deliberately self-contained: the Hermitian
eigensolver is a cyclic complex Jacobi iteration implemented in this
module (capped at 100 sweeps), so audit results are reproducible
bit-for-bit across platforms without depending on a LAPACK build.
numpy is used for array storage and vectorized arithmetic only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "StateVector",
    "DensityMatrix",
    "random_pure_state",
    "hermitian_eigenvalues",
    "trace_distance_from_mixed",
    "frobenius_trace_bound",
    "fidelity_phase_insensitive",
]

MAX_EIG_DIM = 256
MAX_RANDOM_STATE_QUBITS = 14
JACOBI_SWEEP_CAP = 100

NORM_TOL = 1e-10
HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-10


@dataclass(frozen=True)
class StateVector:
    """A pure n-qubit state: 2^n complex amplitudes of unit 2-norm.

    Basis index bit order: qubit 1 is the most significant bit of the
    index.  The amplitude array is frozen after construction.
    """

    n: int
    amps: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amps, dtype=complex)
        if amps.shape != (1 << self.n,):
            raise ValueError("amplitude count must be 2^n")
        if abs(float(np.abs(amps) @ np.abs(amps)) - 1.0) > NORM_TOL:
            raise ValueError("state vector is not normalized")
        amps = amps.copy()
        amps.setflags(write=False)
        object.__setattr__(self, "amps", amps)

    @property
    def dim(self):
        return 1 << self.n


@dataclass(frozen=True)
class DensityMatrix:
    """A d x d density operator: Hermitian, unit trace, d = 2^n."""

    entries: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("density matrix must be square")
        d = m.shape[0]
        if d & (d - 1) or d == 0:
            raise ValueError("dimension must be a power of 2")
        if np.abs(m - m.conj().T).max() > HERMITIAN_TOL:
            raise ValueError("density matrix is not Hermitian")
        if abs(complex(np.trace(m)).real - 1.0) > TRACE_TOL:
            raise ValueError("density matrix trace must be 1")
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)

    @property
    def dim(self):
        return self.entries.shape[0]

    @property
    def n(self):
        return self.dim.bit_length() - 1

    @classmethod
    def from_pure(cls, psi):
        return cls(np.outer(psi.amps, psi.amps.conj()))

    @classmethod
    def maximally_mixed(cls, n):
        d = 1 << n
        return cls(np.eye(d, dtype=complex) / d)


def random_pure_state(n, seed):
    """Haar-uniform pure state on n <= 14 qubits, deterministic per seed.

    Amplitudes are independent standard complex Gaussians, normalized;
    `seed` may be an int, a SeedSequence, or a Generator.
    """
    if n > MAX_RANDOM_STATE_QUBITS:
        raise ValueError(f"random states capped at n <= {MAX_RANDOM_STATE_QUBITS}")
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((2, 1 << n))
    amps = z[0] + 1j * z[1]
    return StateVector(n, amps / np.sqrt((np.abs(amps) ** 2).sum()))


def _frobenius(m):
    return math.sqrt(float((np.abs(m) ** 2).sum()))


def _jacobi_diagonalize(a, target_off):
    """Cyclic two-sided Jacobi rotations on a Hermitian array (in place).

    Returns the accumulated unitary; stops once the off-diagonal
    Frobenius norm drops to target_off, or raises after the sweep cap.
    """
    d = a.shape[0]
    v = np.eye(d, dtype=complex)
    di = np.arange(d)
    skip = target_off / (2 * d) if d else 0.0
    for _ in range(JACOBI_SWEEP_CAP):
        sq = np.abs(a) ** 2
        sq[di, di] = 0.0
        if math.sqrt(float(sq.sum())) <= target_off:
            return v
        for p in range(d - 1):
            for q in range(p + 1, d):
                beta = a[p, q]
                ab = abs(beta)
                if ab <= skip:
                    continue
                phase = beta / ab
                tau = (a[q, q].real - a[p, p].real) / (2 * ab)
                t = 1.0 if tau == 0 else math.copysign(1, tau) / (
                    abs(tau) + math.hypot(1, tau))
                c = 1 / math.hypot(1, t)
                s = t * c
                w = s * phase.conjugate()
                cw = c * phase.conjugate()
                cp = c * a[:, p] - w * a[:, q]
                cq = s * a[:, p] + cw * a[:, q]
                a[:, p], a[:, q] = cp, cq
                rp = c * a[p, :] - w.conjugate() * a[q, :]
                rq = s * a[p, :] + cw.conjugate() * a[q, :]
                a[p, :], a[q, :] = rp, rq
                vp = c * v[:, p] - w * v[:, q]
                vq = s * v[:, p] + cw * v[:, q]
                v[:, p], v[:, q] = vp, vq
    raise ArithmeticError(
        f"Jacobi iteration did not converge in {JACOBI_SWEEP_CAP} sweeps")


def hermitian_eigenvalues(matrix, tol=1e-10):
    """All eigenvalues of a Hermitian matrix, ascending.

    Every eigenpair satisfies ||M v - lambda v|| <= tol * ||M||_F; the
    residuals are verified before returning.  Accepts any array-like
    Hermitian matrix (within 1e-10 of its adjoint, relative to scale)
    of dimension at most 256.
    """
    m = np.asarray(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("matrix must be square")
    d = m.shape[0]
    if d > MAX_EIG_DIM:
        raise ValueError(f"eigensolver capped at dimension {MAX_EIG_DIM}")
    scale = max(1.0, float(np.abs(m).max()))
    if np.abs(m - m.conj().T).max() > 1e-10 * scale:
        raise ValueError("matrix is not Hermitian")
    frob = _frobenius(m)
    if frob == 0.0:
        return np.zeros(d)
    a = (m + m.conj().T) / 2
    v = _jacobi_diagonalize(a, 0.05 * tol * frob)
    lam = np.diag(a).real
    residual = m @ v - v * lam[None, :]
    worst = math.sqrt(float((np.abs(residual) ** 2).sum(axis=0).max()))
    if worst > tol * frob:
        raise ArithmeticError("eigenpair residual exceeds tolerance")
    return np.sort(lam)


def trace_distance_from_mixed(rho, tol=1e-10):
    """Trace distance ||rho - I/d||_1 = sum_i |lambda_i - 1/d|."""
    d = rho.dim
    lam = hermitian_eigenvalues(rho.entries, tol=tol)
    return float(np.abs(lam - 1.0 / d).sum())


def frobenius_trace_bound(rho):
    """sqrt(d ||rho||_F^2 - 1): an upper bound on the trace distance
    from the maximally mixed state, cheap and eigensolver-free."""
    d = rho.dim
    return math.sqrt(max(0.0, d * float((np.abs(rho.entries) ** 2).sum()) - 1.0))


def fidelity_phase_insensitive(psi, phi):
    """|<psi|phi>|^2; equals 1 for states differing by a global phase."""
    if psi.n != phi.n:
        raise ValueError("states act on different qubit counts")
    return float(abs(np.vdot(psi.amps, phi.amps)) ** 2)
