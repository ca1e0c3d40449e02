"""Nonclassicality diagnostics.

Four observables characterize the generated states: von Neumann entropy of
a marginal (atom-field entanglement), negativity of the partially
transposed atomic marginal (atom-atom entanglement), the Mandel parameter
(photon statistics) and the two quadrature-squeezing parameters.

Field moments are taken in the transformed frame through the shifted
operators ``a - gamma``: because the lab state differs only by the field
displacement, ``<(a^dag - gamma)^p (a - gamma)^q>`` on the transformed
state equals the lab-frame moment ``<a^dag^p a^q>``.  This avoids the
truncation error of displacing states numerically in production runs; the
explicitly displaced route survives as a cross-check in the tests.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from math import comb

import numpy as np

from .density import DensityMatrix, jacobi_eigvalsh, partial_transpose_b, rho_atoms
from .errors import DegenerateSpectrumError, TruncationWarning, UndefinedMeasureError
from .model import JointState

__all__ = [
    "MeasureSample",
    "CardanoEigenvalues",
    "ALL_MEASURES",
    "von_neumann_entropy",
    "cardano_eigenvalues",
    "negativity",
    "ladder_moment",
    "field_moment",
    "mandel_q",
    "squeezing",
    "evaluate_measures",
]

#: Eigenvalues below this are treated as exact zeros (truncation noise
#: otherwise poisons the logarithm).
EIGENVALUE_CLAMP = 1e-12

ALL_MEASURES = ("entropy", "negativity", "mandel", "squeezing")


@dataclass(frozen=True)
class MeasureSample:
    """All diagnostics at one scaled time; entries are None when not requested."""

    gt: float
    entropy: float | None = None
    negativity: float | None = None
    mandel_q: float | None = None
    s_x: float | None = None
    s_y: float | None = None


@dataclass(frozen=True)
class CardanoEigenvalues:
    """Closed-form spectrum of the rank-3 Lambda-scheme atomic marginal.

    ``xi1..xi3`` are the nonzero eigenvalues (the remaining six vanish by
    construction); ``varrho1..varrho3`` are the characteristic-polynomial
    coefficients and ``varpi`` the trisection angle.
    """

    xi1: float
    xi2: float
    xi3: float
    varrho1: float
    varrho2: float
    varrho3: float
    varpi: float

    @property
    def xi(self) -> np.ndarray:
        return np.array([self.xi1, self.xi2, self.xi3])


def _eigenvalues(entries: np.ndarray) -> np.ndarray:
    # rotation-based solver for the small atomic blocks, LAPACK for the
    # large field marginal
    if entries.shape[0] <= 9:
        return jacobi_eigvalsh(entries)
    return np.linalg.eigvalsh(entries)


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """Entropy ``-sum xi ln xi`` in nats, with ``0 ln 0 = 0``.

    Eigenvalues below :data:`EIGENVALUE_CLAMP` are clamped to zero.
    """
    xs = _eigenvalues(rho.entries)
    xs = xs[xs > EIGENVALUE_CLAMP]
    if xs.size == 0:
        return 0.0
    return float(-np.sum(xs * np.log(xs)))


def cardano_eigenvalues(rho: DensityMatrix) -> CardanoEigenvalues:
    """Nonzero eigenvalues of a Lambda-scheme atomic marginal, in closed form.

    The marginal is supported on a fixed three-dimensional subspace, so its
    spectrum follows from the cubic characteristic polynomial solved by
    trisection.  Only six matrix entries enter: those pairing the slots of
    ``|1,1>``, ``|1,2>`` and ``|2,3>``.

    Raises :class:`DegenerateSpectrumError` if the cubic discriminant is
    negative beyond round-off, which would mean the input was not a valid
    (Hermitian, rank-3) marginal.
    """
    e = rho.entries
    r11, r12, r14 = e[0, 0], e[0, 1], e[0, 5]
    r21, r22, r24 = e[1, 0], e[1, 1], e[1, 5]
    r41, r42, r44 = e[5, 0], e[5, 1], e[5, 5]
    varrho1 = float((-(r11 + 4.0 * (r22 + r44))).real)
    varrho2 = float(
        (
            -4.0 * (r12 * r21 + r14 * r41 + 4.0 * r24 * r42)
            + 4.0 * r11 * (r22 + r44)
            + 16.0 * r22 * r44
        ).real
    )
    varrho3 = float(
        (
            16.0 * r14 * (r22 * r41 - r21 * r42)
            + 16.0 * r12 * (r21 * r44 - r24 * r41)
            + 16.0 * r11 * (r24 * r42 - r22 * r44)
        ).real
    )
    disc = varrho1 * varrho1 - 3.0 * varrho2
    if disc < -1e-12 * max(1.0, varrho1 * varrho1):
        raise DegenerateSpectrumError(
            "characteristic cubic has complex roots; input is not a valid marginal"
        )
    disc = max(disc, 0.0)
    if disc == 0.0:
        varpi = 0.0
    else:
        arg = (9.0 * varrho1 * varrho2 - 2.0 * varrho1**3 - 27.0 * varrho3) / (
            2.0 * disc**1.5
        )
        varpi = math.acos(min(1.0, max(-1.0, arg))) / 3.0
    root = 2.0 / 3.0 * math.sqrt(disc)
    xi = [
        -varrho1 / 3.0 + root * math.cos(varpi + 2.0 * math.pi * j / 3.0)
        for j in range(3)
    ]
    return CardanoEigenvalues(xi[0], xi[1], xi[2], varrho1, varrho2, varrho3, varpi)


def negativity(rho: DensityMatrix) -> float:
    """Entanglement negativity of the two-atom marginal, clamped to [0, 1].

    Equals minus the sum of the negative eigenvalues of the partial
    transpose, which for two qutrits is ``(||rho^T_B||_1 - 1) / 2``.
    """
    pt = rho if rho.label == "atoms_pt" else partial_transpose_b(rho)
    eigs = jacobi_eigvalsh(pt.entries)
    raw = -float(np.sum(eigs[eigs < 0.0]))
    return min(max(raw, 0.0), 1.0)


def _falling(m, k):
    out = np.ones_like(m, dtype=float)
    for r in range(k):
        out = out * (m - r)
    return out


def ladder_moment(state: JointState, p: int, q: int) -> complex:
    """Expectation ``<a^dag^p a^q>`` in the state's own frame."""
    amp = state.amplitudes
    m_top = amp.shape[2] - 1
    m = np.arange(m_top + 1)
    valid = (m >= q) & (m - q + p <= m_top)
    m = m[valid]
    w = np.sqrt(_falling(m, q) * _falling(m - q + p, p))
    ket = amp[:, :, m]
    bra = amp[:, :, m - q + p]
    return complex(np.sum(np.conj(bra) * w * ket))


def field_moment(state2: JointState, gamma: float, powers) -> complex:
    """Lab-frame field moment ``<a^dag^p a^q>`` from the transformed state.

    Expands ``(a^dag - gamma)^p (a - gamma)^q`` binomially over ladder
    moments; ``p, q`` must lie in {0, 1, 2}.  Warns if the truncation edge
    carries noticeable population.
    """
    p, q = powers
    if p not in (0, 1, 2) or q not in (0, 1, 2):
        raise ValueError("moment powers must lie in {0, 1, 2}")
    edge = float(np.sum(np.abs(state2.amplitudes[:, :, -1]) ** 2))
    if edge > 1e-10:
        warnings.warn(
            f"population {edge:.2e} at the truncation edge; moments may be off",
            TruncationWarning,
            stacklevel=2,
        )
    total = 0.0 + 0.0j
    for i in range(p + 1):
        for j in range(q + 1):
            shift = (-gamma) ** (p - i + q - j)
            total += comb(p, i) * comb(q, j) * shift * ladder_moment(state2, i, j)
    return complex(total)


def mandel_q(state2: JointState, gamma: float) -> float:
    """Mandel parameter ``(<n^2> - <n>^2)/<n> - 1`` of the lab-frame field.

    Negative means sub-Poissonian (nonclassical) statistics.  Raises
    :class:`UndefinedMeasureError` when the mean photon number vanishes.
    """
    nbar = field_moment(state2, gamma, (1, 1)).real
    if nbar < 1e-12:
        raise UndefinedMeasureError("Mandel parameter undefined: <n> ~ 0")
    n2 = nbar + field_moment(state2, gamma, (2, 2)).real
    return float((n2 - nbar * nbar) / nbar - 1.0)


def squeezing(state2: JointState, gamma: float):
    """Quadrature squeezing parameters ``(s_x, s_y)`` of the lab-frame field.

    A value in (-1, 0) flags squeezing of that quadrature; a coherent state
    gives exactly (0, 0).
    """
    nbar = field_moment(state2, gamma, (1, 1)).real
    a1 = field_moment(state2, gamma, (0, 1))
    a2 = field_moment(state2, gamma, (0, 2))
    s_x = 2.0 * nbar + 2.0 * a2.real - 4.0 * a1.real**2
    s_y = 2.0 * nbar - 2.0 * a2.real - 4.0 * a1.imag**2
    return float(s_x), float(s_y)


def evaluate_measures(state2: JointState, gamma: float, gt: float, which=ALL_MEASURES) -> MeasureSample:
    """Evaluate the requested diagnostics on one transformed-frame state."""
    unknown = set(which) - set(ALL_MEASURES)
    if unknown:
        raise ValueError(f"unknown measures: {sorted(unknown)}")
    values = {}
    if "entropy" in which or "negativity" in which:
        rho = rho_atoms(state2)
        if "entropy" in which:
            values["entropy"] = von_neumann_entropy(rho)
        if "negativity" in which:
            values["negativity"] = negativity(rho)
    if "mandel" in which:
        values["mandel_q"] = mandel_q(state2, gamma)
    if "squeezing" in which:
        values["s_x"], values["s_y"] = squeezing(state2, gamma)
    return MeasureSample(gt=float(gt), **values)
