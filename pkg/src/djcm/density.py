"""Reduced density matrices, partial transpose, and a small Hermitian eigensolver.

The joint state is pure, so the atomic (9x9) and field marginals share
their nonzero spectrum.  The atomic marginal is always computed by a
generic partial trace over the assembled amplitude array; the slot-pairing
shortcut that skips the photon bookkeeping is kept to the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import JointState

__all__ = [
    "DensityMatrix",
    "rho_atoms",
    "rho_field",
    "partial_transpose_b",
    "jacobi_eigvalsh",
]


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian trace-one matrix with a label identifying the subsystem.

    Labels: ``"atoms"`` (9x9 two-atom marginal), ``"field"`` (photon
    marginal), ``"atoms_pt"`` (partial transpose of the atomic marginal,
    Hermitian but possibly indefinite).
    """

    entries: np.ndarray
    label: str

    def __post_init__(self):
        e = np.asarray(self.entries, dtype=complex)
        if e.ndim != 2 or e.shape[0] != e.shape[1]:
            raise ValueError("entries must be a square matrix")
        e.setflags(write=False)
        object.__setattr__(self, "entries", e)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def trace(self) -> float:
        return float(np.trace(self.entries).real)


def rho_atoms(state: JointState) -> DensityMatrix:
    """Two-atom marginal; atomic pairs flattened as ``k = 3(a-1) + (b-1)``."""
    amp = state.amplitudes
    rho = np.einsum("abm,cdm->abcd", amp, amp.conj()).reshape(9, 9)
    return DensityMatrix(rho, "atoms")


def rho_field(state: JointState) -> DensityMatrix:
    """Photon-number marginal of the field mode."""
    amp = state.amplitudes
    rho = np.einsum("abm,abn->mn", amp, amp.conj())
    return DensityMatrix(rho, "field")


def partial_transpose_b(rho: DensityMatrix) -> DensityMatrix:
    """Transpose the atom-B indices only: ``rho[(a,b),(a',b')] -> rho[(a,b'),(a',b)]``."""
    if rho.entries.shape != (9, 9):
        raise ValueError("partial transpose is defined on the 9x9 atomic matrix")
    pt = rho.entries.reshape(3, 3, 3, 3).transpose(0, 3, 2, 1).reshape(9, 9)
    return DensityMatrix(pt, "atoms_pt")


def jacobi_eigvalsh(a, tol=1e-13, max_sweeps=60) -> np.ndarray:
    """Eigenvalues of a small Hermitian matrix by cyclic Jacobi rotations.

    Sweeps complex Givens rotations until the off-diagonal Frobenius norm
    drops below ``tol``; returns the real eigenvalues in ascending order.
    Intended for the fixed 9x9 atomic blocks, where it converges in a
    handful of sweeps.
    """
    m = np.array(a, dtype=complex)
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError("matrix must be square")
    if n == 1:
        return np.array([m[0, 0].real])
    skip = tol / (2.0 * n)
    for _ in range(max_sweeps):
        # sum the off-diagonal magnitudes directly; subtracting the diagonal
        # from the total cancels catastrophically once converged
        od = np.abs(m) ** 2
        np.fill_diagonal(od, 0.0)
        if math.sqrt(float(od.sum())) < tol:
            return np.sort(np.diag(m).real)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = m[p, q]
                r = abs(apq)
                if r <= skip:
                    continue
                phase = apq / r
                tau = (m[q, q].real - m[p, p].real) / (2.0 * r)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.hypot(1.0, t)
                s = t * c
                w = phase.conjugate() * s  # e^{-i phi} s
                wc = phase.conjugate() * c  # e^{-i phi} c
                col_p = m[:, p].copy()
                col_q = m[:, q].copy()
                m[:, p] = c * col_p - w * col_q
                m[:, q] = s * col_p + wc * col_q
                row_p = m[p, :].copy()
                row_q = m[q, :].copy()
                m[p, :] = c * row_p - w.conjugate() * row_q
                m[q, :] = s * row_p + wc.conjugate() * row_q
    raise np.linalg.LinAlgError(
        f"Jacobi diagonalization did not converge in {max_sweeps} sweeps"
    )
