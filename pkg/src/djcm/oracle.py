"""Brute-force verification path.

Builds the resonant Hamiltonian (``H2``) and its driven counterpart
(``H1``) as explicit sparse matrices on the truncated product space,
integrates the Schrodinger equation with a fixed-step fourth-order scheme,
and applies the field displacement numerically.  Deliberately transparent
rather than fast: this module exists to check the closed forms, not to
replace them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
from scipy.linalg import expm

from .errors import IntegrationError, TruncationError
from .model import AtomicConfiguration, JointState, SystemParams

__all__ = [
    "HamiltonianMatrix",
    "build_h2",
    "build_h1",
    "evolve",
    "integrate",
    "displace",
    "state_vector",
    "vector_state",
]


@dataclass(frozen=True, eq=False)
class HamiltonianMatrix:
    """Sparse Hermitian matrix over the (atom A, atom B, field) product basis.

    ``frame`` is ``"H2"`` for the displaced (purely Jaynes-Cummings) form
    and ``"H1"`` for the driven form that adds the classical-field terms.
    """

    matrix: sp.csr_matrix
    frame: str
    config: AtomicConfiguration
    n_max: int

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def _lowering(pair) -> sp.csr_matrix:
    op = np.zeros((3, 3))
    op[pair[0] - 1, pair[1] - 1] = 1.0
    return sp.csr_matrix(op)


def _annihilation(dim) -> sp.csr_matrix:
    return sp.diags(np.sqrt(np.arange(1.0, dim)), 1).tocsr()


def build_h2(config: AtomicConfiguration, params: SystemParams, n_max=None) -> HamiltonianMatrix:
    """Resonant Hamiltonian g * sum_j (sigma1_j a + sigma2_j a + h.c.).

    ``n_max`` overrides ``params.n_max`` (useful for reduced oracle runs).
    The matrix element of ``a`` is ``<m-1|a|m> = sqrt(m)``.
    """
    n_max = params.n_max if n_max is None else int(n_max)
    a = _annihilation(n_max + 1)
    eye3 = sp.identity(3, format="csr")
    h = sp.csr_matrix((9 * (n_max + 1), 9 * (n_max + 1)))
    for pair in config.transition_pairs:
        s = _lowering(pair)
        for atoms in (sp.kron(s, eye3), sp.kron(eye3, s)):
            term = sp.kron(atoms, a)
            h = h + term + term.conj().T
    return HamiltonianMatrix((params.g * h).tocsr(), "H2", config, n_max)


def build_h1(config: AtomicConfiguration, params: SystemParams, n_max=None) -> HamiltonianMatrix:
    """Driven Hamiltonian: ``H2`` plus lambda * sum_j (sigma1_j + sigma2_j + h.c.)."""
    h2 = build_h2(config, params, n_max)
    eye3 = sp.identity(3, format="csr")
    eye_f = sp.identity(h2.n_max + 1, format="csr")
    drive = sp.csr_matrix(h2.matrix.shape)
    for pair in config.transition_pairs:
        s = _lowering(pair)
        for atoms in (sp.kron(s, eye3), sp.kron(eye3, s)):
            term = sp.kron(atoms, eye_f)
            drive = drive + term + term.conj().T
    h = h2.matrix + params.lam * drive
    return HamiltonianMatrix(h.tocsr(), "H1", config, h2.n_max)


def state_vector(state: JointState) -> np.ndarray:
    """Flatten a joint state to the vector ordering used by the Hamiltonians."""
    return state.amplitudes.reshape(-1).copy()


def vector_state(vec: np.ndarray, n_max: int, frame: str = "transformed") -> JointState:
    """Inverse of :func:`state_vector`."""
    return JointState(np.asarray(vec, dtype=complex).reshape(3, 3, n_max + 1).copy(), frame)


def _rk4(matvec, psi0, t_grid, dt):
    psi = np.array(psi0, dtype=complex)
    out = np.empty((len(t_grid), psi.size), dtype=complex)
    t_now = 0.0
    for k, t_target in enumerate(t_grid):
        span = float(t_target) - t_now
        if span < -1e-15:
            raise ValueError("t_grid must be non-decreasing and start at >= 0")
        if span > 0.0:
            steps = max(1, math.ceil(span / dt - 1e-12))
            h = span / steps
            for _ in range(steps):
                k1 = -1j * matvec(psi)
                k2 = -1j * matvec(psi + (0.5 * h) * k1)
                k3 = -1j * matvec(psi + (0.5 * h) * k2)
                k4 = -1j * matvec(psi + h * k3)
                psi = psi + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
            t_now = float(t_target)
        out[k] = psi
    return out


def evolve(h_matrix, psi0, t_grid, dt=1e-3, refine_tol=None, max_halvings=8):
    """Integrate ``i dpsi/dt = H psi`` from ``t = 0`` with fixed-step RK4.

    Parameters
    ----------
    h_matrix : sparse or dense matrix
        Hermitian generator.
    psi0 : array
        State vector at ``t = 0``.
    t_grid : sequence of float
        Non-decreasing sample times (each is hit exactly).
    dt : float
        Largest step size; segments between grid times are subdivided.
    refine_tol : float, optional
        If given, the run is repeated with halved steps until the endpoint
        changes by less than this; raises :class:`IntegrationError` after
        ``max_halvings`` failures.

    Returns
    -------
    ndarray of shape ``(len(t_grid), dim)``.
    """
    matvec = h_matrix.dot
    traj = _rk4(matvec, psi0, t_grid, dt)
    if refine_tol is None:
        return traj
    for _ in range(max_halvings):
        dt *= 0.5
        finer = _rk4(matvec, psi0, t_grid, dt)
        delta = float(np.max(np.abs(finer[-1] - traj[-1])))
        if delta < refine_tol:
            return finer
        traj = finer
    raise IntegrationError(
        f"step halving did not reach {refine_tol:g} (last change {delta:.3e})"
    )


def integrate(h: HamiltonianMatrix, psi0: JointState, t_grid, dt=1e-3, refine_tol=None):
    """Trajectory of :class:`JointState` samples under ``h`` (see :func:`evolve`)."""
    if psi0.n_max != h.n_max:
        raise ValueError("state and Hamiltonian truncations differ")
    traj = evolve(h.matrix, state_vector(psi0), t_grid, dt=dt, refine_tol=refine_tol)
    return [vector_state(row, h.n_max, psi0.frame) for row in traj]


def displacement_padding(gamma_arg: float) -> int:
    """Extra Fock levels kept while applying a displacement of ``gamma_arg``."""
    if gamma_arg == 0.0:
        return 0
    x = abs(gamma_arg)
    return 4 * math.ceil(x * x + 10.0 * x)


def displace(state: JointState, gamma_arg: float, frame=None) -> JointState:
    """Apply ``exp(gamma_arg (a^dag - a))`` to the field factor numerically.

    The truncated generator is exponentiated (scaling and squaring) on a
    padded Fock space so the displaced tail has room, then the result is
    cut back to the original truncation.  Raises :class:`TruncationError`
    if more than 1e-6 of the norm is lost in the cut.
    """
    m0 = state.n_max
    pad = displacement_padding(gamma_arg)
    dim = m0 + 1 + pad
    off = np.sqrt(np.arange(1.0, dim))
    gen = gamma_arg * (np.diag(off, -1) - np.diag(off, 1))
    u = expm(gen)
    padded = np.zeros((3, 3, dim), dtype=complex)
    padded[:, :, : m0 + 1] = state.amplitudes
    moved = np.einsum("ij,abj->abi", u, padded)
    out = np.ascontiguousarray(moved[:, :, : m0 + 1])
    norm_in = state.norm()
    norm_out = float(np.sqrt(np.sum(np.abs(out) ** 2)))
    if abs(norm_out - norm_in) > 1e-6:
        raise TruncationError(
            f"displacement by {gamma_arg} lost {abs(norm_out - norm_in):.3e} of the "
            f"norm at n_max={m0}; increase the truncation"
        )
    return JointState(out, frame if frame is not None else state.frame)
