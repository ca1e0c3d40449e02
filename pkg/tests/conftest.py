"""Shared test helpers.

The independent amplitude oracle used throughout: each excitation manifold
evolves under a closed six-variable system i dc/dt = M c, with M written
out by hand below from the action of the resonant Hamiltonian on the
ansatz kets.  It is integrated with an adaptive high-order scipy solver,
keeping it independent of both the closed forms and the package's own
fixed-step integrator.
"""

import numpy as np
import pytest
from scipy.integrate import solve_ivp

from djcm import LAMBDA, V, XI, SystemParams, coupling


def slot_coupling_matrix(kind, n, g=1.0):
    """Hand-derived manifold generator for slot amplitudes (c1..c6)."""
    m = np.zeros((6, 6))
    if kind == "V":
        v1, v2 = coupling(n + 1, g), coupling(n + 2, g)
        m[0, 2] = 2 * v1
        m[1, 2] = v1
        m[1, 3] = v1
        m[2, 0] = v1
        m[2, 1] = v1
        m[2, 5] = v2
        m[3, 1] = v1
        m[3, 4] = v1
        m[3, 5] = v2
        m[4, 3] = 2 * v1
        m[5, 2] = 2 * v2
        m[5, 3] = 2 * v2
    elif kind == "Xi":
        v1, v2, v3, v4 = (coupling(n + j, g) for j in (1, 2, 3, 4))
        m[0, 1] = 2 * v1
        m[1, 0] = v1
        m[1, 2] = v2
        m[1, 4] = v2
        m[2, 1] = v2
        m[2, 3] = v3
        m[3, 2] = v3
        m[3, 4] = v3
        m[3, 5] = v4
        m[4, 1] = 2 * v2
        m[4, 3] = 2 * v3
        m[5, 3] = 2 * v4
    elif kind == "Lambda":
        v1, v2 = coupling(n + 1, g), coupling(n + 2, g)
        m[0, 1] = 2 * v1
        m[0, 2] = 2 * v1
        m[1, 0] = v1
        m[1, 3] = v2
        m[1, 4] = v2
        m[2, 0] = v1
        m[2, 3] = v2
        m[2, 5] = v2
        m[3, 1] = v2
        m[3, 2] = v2
        m[4, 1] = 2 * v2
        m[5, 2] = 2 * v2
    else:
        raise ValueError(kind)
    return m


def oracle_manifold_amplitudes(kind, n, times, g=1.0, c10=1.0):
    """Integrate the manifold system from c = (c10, 0, ..., 0) at t = 0.

    Returns an array of shape (len(times), 6).
    """
    m = slot_coupling_matrix(kind, n, g)

    def rhs(_, y):
        c = y[:6] + 1j * y[6:]
        dc = -1j * (m @ c)
        return np.concatenate([dc.real, dc.imag])

    y0 = np.zeros(12)
    y0[0] = c10
    t_end = max(times)
    sol = solve_ivp(
        rhs,
        (0.0, t_end if t_end > 0 else 1.0),
        y0,
        rtol=2.5e-14,
        atol=1e-16,
        dense_output=True,
        method="DOP853",
    )
    out = np.empty((len(times), 6), dtype=complex)
    for k, t in enumerate(times):
        y = sol.sol(t)
        out[k] = y[:6] + 1j * y[6:]
    return out


@pytest.fixture(params=["V", "Xi", "Lambda"])
def config_kind(request):
    return request.param


@pytest.fixture
def config(config_kind):
    return {"V": V, "Xi": XI, "Lambda": LAMBDA}[config_kind]


def make_params(config, alpha=0.0, gamma=0.0, **kwargs):
    return SystemParams(config, alpha=alpha, gamma=gamma, **kwargs)
