"""Closed-form probability amplitudes and assembly of the full state.

For each excitation manifold ``n`` the six slot amplitudes evolve under a
small closed system of coupled equations whose solution is known in closed
form.  The building blocks are the couplings ``V_j = g * sqrt(n + j)``; the
V and Lambda schemes oscillate at two frequencies built from ``V_1, V_2``,
while the ladder (Xi) scheme needs the auxiliary constants ``x_1..x_5`` and
the effective frequency pair ``beta_1, beta_2``.

All formulas are evaluated vectorized over ``n`` so a full state on a large
Fock space assembles in one pass.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSpectrumError
from .model import (
    SLOT_MULTIPLICITIES,
    SLOT_PAIRS,
    JointState,
    SystemParams,
    coupling,
    initial_amplitude,
)

__all__ = [
    "AmplitudeSet",
    "XiCoefficients",
    "amplitudes_v",
    "amplitudes_xi",
    "amplitudes_lambda",
    "xi_coefficients",
    "closed_form_amplitudes",
    "closed_form_block",
    "assemble_state",
]


@dataclass(frozen=True, eq=False)
class AmplitudeSet:
    """The six slot amplitudes of one excitation manifold at one time.

    The multiplicity-weighted norm ``|c1|^2 + 2|c2|^2 + 2|c3|^2 + 2|c4|^2
    + |c5|^2 + |c6|^2`` is conserved and equals the initial weight
    ``|c1(n, 0)|^2`` of the manifold.
    """

    n: int
    t: float
    c: np.ndarray  # shape (6,), complex

    def manifold_norm_sq(self) -> float:
        w = np.asarray(SLOT_MULTIPLICITIES, dtype=float)
        return float(np.sum(w * np.abs(self.c) ** 2))


@dataclass(frozen=True, eq=False)
class XiCoefficients:
    """Auxiliary constants of the ladder scheme at excitation index ``n``.

    Satisfy ``eta = sqrt(x3^2 - 4 x2)``, ``beta1^2 - beta2^2 = eta``,
    ``beta1^2 + beta2^2 = x3`` and ``beta1^2 beta2^2 = x2``.
    """

    x1: float
    x2: float
    x3: float
    x4: float
    x5: float
    eta: float
    beta1: float
    beta2: float


def _v_block(n, t, g, c10):
    """V-scheme slot amplitudes, vectorized over ``n``."""
    v1 = coupling(n + 1, g)
    v2 = coupling(n + 2, g)
    theta2 = v1 * v1 + v2 * v2
    theta = np.sqrt(theta2)
    cos_a = np.cos(np.sqrt(2.0) * v1 * t)
    sin_a = np.sin(np.sqrt(2.0) * v1 * t)
    cos_2t = np.cos(2.0 * theta * t)
    sin_2t = np.sin(2.0 * theta * t)
    sin_t_sq = np.sin(theta * t) ** 2
    common = (v1 * v1 + 2.0 * v2 * v2 + v1 * v1 * cos_2t) / theta2
    c1 = 0.25 * c10 * (2.0 * cos_a + common)
    c2 = -0.5 * c10 * v1 * v1 * sin_t_sq / theta2
    c3 = -0.25j * c10 * (np.sqrt(2.0) * sin_a + v1 * sin_2t / theta)
    c4 = 0.25j * c10 * (np.sqrt(2.0) * sin_a - v1 * sin_2t / theta)
    c5 = 0.25 * c10 * (-2.0 * cos_a + common)
    c6 = -c10 * v1 * v2 * sin_t_sq / theta2
    return np.stack(np.broadcast_arrays(c1, c2, c3, c4, c5, c6)).astype(complex)


def _xi_constants(v1, v2, v3, v4):
    x1 = 6.0 * v1 * v2 * v3 * v4
    x2 = 6.0 * v1**2 * v3**2 + 4.0 * v1**2 * v4**2 + 6.0 * v2**2 * v4**2
    x3 = 2.0 * (v1**2 + v4**2) + 3.0 * (v2**2 + v3**2)
    x4 = 6.0 * v1**2 * v3**2 + 4.0 * v1**2 * v4**2
    x5 = 2.0 * v1 * v2 * v4**2
    disc = x3 * x3 - 4.0 * x2
    if np.any(disc <= 0.0) or np.any(np.sqrt(disc) < 1e-12 * x3):
        raise DegenerateSpectrumError(
            "ladder-scheme frequencies are degenerate (eta ~ 0); the closed "
            "forms divide by eta"
        )
    eta = np.sqrt(disc)
    beta1 = np.sqrt(0.5 * (x3 + eta))
    # sqrt((x3 - eta)/2) without the cancellation-prone subtraction
    beta2 = np.sqrt(2.0 * x2 / (x3 + eta))
    return x1, x2, x3, x4, x5, eta, beta1, beta2


def _xi_block(n, t, g, c10):
    """Ladder-scheme slot amplitudes, vectorized over ``n``."""
    v1, v2, v3, v4 = (coupling(n + j, g) for j in (1, 2, 3, 4))
    x1, x2, x3, x4, x5, eta, b1, b2 = _xi_constants(v1, v2, v3, v4)
    cos1, sin1 = np.cos(b1 * t), np.sin(b1 * t)
    cos2, sin2 = np.cos(b2 * t), np.sin(b2 * t)
    c1 = (
        c10
        / (x2 * eta)
        * (
            (x2 - x4) * eta
            + (2.0 * v1**2 * x2 - b2**2 * x4) * cos1
            - (2.0 * v1**2 * x2 - b1**2 * x4) * cos2
        )
    )
    c2 = (
        1j
        * c10
        / (2.0 * b1 * b2 * eta * v1)
        * ((x4 - 2.0 * b1**2 * v1**2) * b2 * sin1 - (x4 - 2.0 * b2**2 * v1**2) * b1 * sin2)
    )
    c3 = (
        c10
        / (x2 * eta)
        * (-x5 * eta - (b2**2 * x5 - v1 * v2 * x2) * cos1 + (b1**2 * x5 - v1 * v2 * x2) * cos2)
    )
    c4 = -1j * x1 * c10 / (2.0 * v4 * eta) * (sin1 / b1 - sin2 / b2)
    c5 = 2.0 * c3
    c6 = x1 * c10 / (x2 * eta) * (eta - b1**2 * cos2 + b2**2 * cos1)
    return np.stack(np.broadcast_arrays(c1, c2, c3, c4, c5, c6)).astype(complex)


def _lambda_block(n, t, g, c10):
    """Lambda-scheme slot amplitudes, vectorized over ``n``.

    The single effective frequency is ``v3 = sqrt(v1^2 + v2^2)``; slots 2-3
    and slots 4-6 are pairwise equal.
    """
    v1 = coupling(n + 1, g)
    v2 = coupling(n + 2, g)
    v3sq = v1 * v1 + v2 * v2
    v3 = np.sqrt(v3sq)
    c1 = c10 * (v2 * v2 + v1 * v1 * np.cos(2.0 * v3 * t)) / v3sq
    c23 = -1j * c10 * v1 * np.sin(2.0 * v3 * t) / (2.0 * v3)
    c456 = -c10 * v1 * v2 * np.sin(v3 * t) ** 2 / v3sq
    return np.stack(np.broadcast_arrays(c1, c23, c23, c456, c456, c456)).astype(complex)


_BLOCKS = {"V": _v_block, "Xi": _xi_block, "Lambda": _lambda_block}


def closed_form_block(n, t, params: SystemParams):
    """Slot amplitudes for an array of manifolds ``n`` at time ``t``.

    Returns a complex array of shape ``(6, len(n))`` seeded with the
    coherent-state weights of ``params.beta``.
    """
    n = np.asarray(n)
    c10 = initial_amplitude(n, params.beta)
    return _BLOCKS[params.config.kind](n, t, params.g, c10)


def _single(block, n, t, params):
    c = block(np.asarray(n), t, params.g, initial_amplitude(n, params.beta))
    return AmplitudeSet(n=int(n), t=float(t), c=c)


def amplitudes_v(n, t, params: SystemParams) -> AmplitudeSet:
    """Closed-form amplitudes of the V scheme for manifold ``n`` at time ``t``."""
    return _single(_v_block, n, t, params)


def amplitudes_xi(n, t, params: SystemParams) -> AmplitudeSet:
    """Closed-form amplitudes of the ladder scheme for manifold ``n`` at time ``t``."""
    return _single(_xi_block, n, t, params)


def amplitudes_lambda(n, t, params: SystemParams) -> AmplitudeSet:
    """Closed-form amplitudes of the Lambda scheme for manifold ``n`` at time ``t``."""
    return _single(_lambda_block, n, t, params)


def closed_form_amplitudes(n, t, params: SystemParams) -> AmplitudeSet:
    """Dispatch to the closed forms of ``params.config``."""
    return _single(_BLOCKS[params.config.kind], n, t, params)


def xi_coefficients(n, params: SystemParams) -> XiCoefficients:
    """Auxiliary ladder-scheme constants for manifold ``n``.

    Raises :class:`DegenerateSpectrumError` if the two effective
    frequencies would coincide (cannot happen for ``g > 0`` with the
    square-root couplings, but guarded for robustness).
    """
    v = [coupling(n + j, params.g) for j in (1, 2, 3, 4)]
    vals = _xi_constants(*v)
    return XiCoefficients(*(float(x) for x in vals))


def assemble_state(t, params: SystemParams) -> JointState:
    """Full transformed-frame state at time ``t`` on the truncated Fock space.

    Manifolds whose topmost ket would exceed ``n_max`` are dropped whole,
    preserving per-manifold unitarity; their total weight is below the
    truncation tail bound.
    """
    cfg = params.config
    n_count = params.n_max - cfg.max_offset + 1
    if n_count <= 0:
        raise ValueError(f"n_max={params.n_max} below the largest photon offset")
    n = np.arange(n_count)
    block = closed_form_block(n, t, params)
    amps = np.zeros((3, 3, params.n_max + 1), dtype=complex)
    for s, (a, b) in enumerate(SLOT_PAIRS):
        m = n + cfg.photon_offsets[s]
        amps[a - 1, b - 1, m] = block[s]
        if a != b:
            amps[b - 1, a - 1, m] = block[s]
    return JointState(amps, frame="transformed")
