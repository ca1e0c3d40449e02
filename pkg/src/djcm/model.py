"""Core model definitions: level schemes, system parameters, joint states.

The system is two identical three-level atoms (levels labelled 1, 2, 3)
coupled to a single quantized cavity mode and driven by a classical field,
on resonance and with equal couplings for both transitions.  Moving to the
rotating frame of the drive and then displacing the cavity mode by the
drive-to-cavity coupling ratio ``gamma = lambda / g`` reduces the dynamics
to a resonant Jaynes-Cummings form.  States expressed in that picture carry
the ``"transformed"`` frame tag; ``"lab"`` marks states of the driven model
itself.  The two pictures are related by a pure field displacement, so all
atomic marginals coincide between them.

Both atoms start in level 1 and the cavity starts in a coherent state of
real amplitude ``alpha``, which the displacement maps onto a coherent state
of amplitude ``beta = alpha + gamma``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import gammaln

from .errors import TruncationError

__all__ = [
    "SLOT_PAIRS",
    "SLOT_MULTIPLICITIES",
    "POISSON_TAIL_BOUND",
    "AtomicConfiguration",
    "V",
    "XI",
    "LAMBDA",
    "CONFIGURATIONS",
    "get_configuration",
    "coupling",
    "initial_amplitude",
    "default_n_max",
    "poisson_tail",
    "SystemParams",
    "JointState",
    "build_initial_joint_state",
]

#: Atomic pair written by each of the six amplitude slots.  Slots 2-4 also
#: fill the exchange-mirrored pair, hence the multiplicities below.
SLOT_PAIRS = ((1, 1), (1, 2), (1, 3), (2, 3), (2, 2), (3, 3))
SLOT_MULTIPLICITIES = (1, 2, 2, 2, 1, 1)

#: Largest coherent-state weight allowed beyond the truncation edge.
POISSON_TAIL_BOUND = 1e-12


@dataclass(frozen=True, eq=False)
class AtomicConfiguration:
    """One of the three ways two dipole transitions connect three levels.

    Parameters
    ----------
    kind : str
        ``"V"``, ``"Xi"`` or ``"Lambda"``.
    transition_pairs : tuple of (int, int)
        The two photon-absorbing lowering operators, each pair ``(i, j)``
        denoting ``|i><j|``; their conjugates emit a photon.
    photon_offsets : tuple of int
        Photon-number offset attached to each of the six amplitude slots
        of the exchange-symmetric ansatz.
    """

    kind: str
    transition_pairs: tuple[tuple[int, int], tuple[int, int]]
    photon_offsets: tuple[int, int, int, int, int, int]

    @property
    def max_offset(self) -> int:
        return max(self.photon_offsets)

    def level_weights(self) -> tuple[int, int, int]:
        """Photon cost of occupying each atomic level (level 1 costs 0)."""
        return (0, self.photon_offsets[1], self.photon_offsets[2])

    def manifold_index(self, a: int, b: int, m: int) -> int:
        """Excitation-manifold label of the ket ``|a, b, m>``.

        The resonant Hamiltonian conserves this label, so its matrix is
        block diagonal when kets are grouped by it.
        """
        z = self.level_weights()
        return m - z[a - 1] - z[b - 1]

    def slot_kets(self, n: int) -> list[tuple[int, int, int, int]]:
        """Kets populated by manifold ``n``, as ``(slot, a, b, m)`` tuples."""
        kets = []
        for s, (a, b) in enumerate(SLOT_PAIRS):
            m = n + self.photon_offsets[s]
            kets.append((s, a, b, m))
            if a != b:
                kets.append((s, b, a, m))
        return kets


V = AtomicConfiguration("V", ((1, 3), (2, 3)), (0, 0, 1, 1, 0, 2))
XI = AtomicConfiguration("Xi", ((1, 2), (2, 3)), (0, 1, 2, 3, 2, 4))
LAMBDA = AtomicConfiguration("Lambda", ((1, 2), (1, 3)), (0, 1, 1, 2, 2, 2))

CONFIGURATIONS = {"V": V, "Xi": XI, "Lambda": LAMBDA}

_ALIASES = {"v": V, "xi": XI, "lambda": LAMBDA}


def get_configuration(name) -> AtomicConfiguration:
    """Look up a configuration by name (case-insensitive); pass through instances."""
    if isinstance(name, AtomicConfiguration):
        return name
    try:
        return _ALIASES[str(name).strip().lower()]
    except KeyError:
        raise ValueError(
            f"unknown configuration {name!r}; expected one of V, Xi, Lambda"
        ) from None


def coupling(n, g):
    """Quantized-field coupling matrix element ``g * sqrt(n)``.

    Accepts scalar or array ``n``; ``n`` must be non-negative.
    """
    n = np.asarray(n, dtype=float)
    if np.any(n < 0):
        raise ValueError("photon index must be non-negative")
    out = g * np.sqrt(n)
    return float(out) if out.ndim == 0 else out


def initial_amplitude(n, beta):
    """Coherent-state amplitude ``exp(-beta^2/2) beta^n / sqrt(n!)``.

    Evaluated in log space so large ``n`` does not overflow the factorial.
    Accepts scalar or array ``n``.
    """
    n = np.asarray(n)
    if np.any(n < 0):
        raise ValueError("photon index must be non-negative")
    if beta == 0.0:
        out = np.where(n == 0, 1.0, 0.0)
    else:
        log_mag = n * math.log(abs(beta)) - 0.5 * beta * beta - 0.5 * gammaln(n + 1.0)
        out = np.exp(log_mag)
        if beta < 0.0:
            out = np.where(n % 2 == 1, -out, out)
    return float(out) if out.ndim == 0 else out


def default_n_max(beta: float) -> int:
    """Truncation index covering the photon distribution of ``|beta>``.

    Mean plus ten standard deviations of the Poisson distribution, plus a
    margin absorbing the largest ansatz photon offset.
    """
    return math.ceil(beta * beta + 10.0 * abs(beta) + 24.0)


def poisson_tail(beta: float, n_max: int) -> float:
    """Coherent-state weight above ``n_max - 4`` (may go slightly negative
    at round-off when the true tail is below machine precision)."""
    if n_max < 4:
        return 1.0
    kept = initial_amplitude(np.arange(n_max - 3), beta)
    return 1.0 - float(np.sum(kept**2))


@dataclass(frozen=True, eq=False)
class SystemParams:
    """Physical parameters plus the Fock truncation and optional time grid.

    Exactly one of ``gamma`` (the dimensionless ratio ``lambda/g``) and
    ``lam`` (the classical-field coupling) may be given; the other is
    derived.  ``beta = alpha + gamma`` is always derived.  ``n_max``
    defaults to :func:`default_n_max` of ``beta`` and is checked against
    the tail bound either way.
    """

    config: AtomicConfiguration
    alpha: float = 0.0
    gamma: float | None = None
    lam: float | None = None
    g: float = 1.0
    n_max: int | None = None
    t_grid: tuple[float, ...] | None = None
    beta: float = field(init=False)

    def __post_init__(self):
        _set = lambda k, v: object.__setattr__(self, k, v)  # noqa: E731 frozen
        _set("config", get_configuration(self.config))
        if self.g <= 0.0:
            raise ValueError("coupling g must be positive")
        if self.alpha < 0.0:
            raise ValueError("alpha must be non-negative (real, as assumed)")
        if self.gamma is not None and self.lam is not None:
            raise ValueError("give either gamma or lam, not both")
        if self.gamma is None:
            _set("gamma", 0.0 if self.lam is None else self.lam / self.g)
        if self.lam is None:
            _set("lam", self.gamma * self.g)
        if self.lam < 0.0:
            raise ValueError("classical-field coupling must be non-negative")
        _set("beta", self.alpha + self.gamma)
        if self.n_max is None:
            _set("n_max", default_n_max(self.beta))
        tail = poisson_tail(self.beta, self.n_max)
        if tail > POISSON_TAIL_BOUND:
            raise TruncationError(
                f"n_max={self.n_max} leaves a coherent-state tail of {tail:.3e} "
                f"(> {POISSON_TAIL_BOUND:g}) for beta={self.beta}"
            )
        if self.t_grid is not None:
            _set("t_grid", tuple(float(t) for t in self.t_grid))


@dataclass(frozen=True, eq=False)
class JointState:
    """Complex amplitudes over (atom A level, atom B level, photon number).

    ``amplitudes[a-1, b-1, m]`` is the amplitude of ``|a, b, m>``.  The
    array is frozen after construction; derived states are new objects.
    """

    amplitudes: np.ndarray
    frame: str = "transformed"

    def __post_init__(self):
        amp = np.asarray(self.amplitudes, dtype=complex)
        if amp.ndim != 3 or amp.shape[:2] != (3, 3):
            raise ValueError("amplitudes must have shape (3, 3, n_max + 1)")
        if self.frame not in ("transformed", "lab"):
            raise ValueError(f"unknown frame {self.frame!r}")
        amp.setflags(write=False)
        object.__setattr__(self, "amplitudes", amp)

    @property
    def n_max(self) -> int:
        return self.amplitudes.shape[2] - 1

    def amplitude(self, a: int, b: int, m: int) -> complex:
        """Amplitude of ``|a, b, m>`` with 1-based atomic levels."""
        return complex(self.amplitudes[a - 1, b - 1, m])

    def norm(self) -> float:
        flat = self.amplitudes.reshape(-1)
        return float(np.sqrt(np.vdot(flat, flat).real))


def build_initial_joint_state(params: SystemParams) -> JointState:
    """Transformed-frame initial state: both atoms in level 1, field in ``|beta>``."""
    amps = np.zeros((3, 3, params.n_max + 1), dtype=complex)
    amps[0, 0, :] = initial_amplitude(np.arange(params.n_max + 1), params.beta)
    return JointState(amps, frame="transformed")
