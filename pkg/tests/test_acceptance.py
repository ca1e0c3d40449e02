"""Acceptance suite.

One test per criterion, each printing a single PASS/FAIL line (visible with
``pytest -s``).  Tolerances are fixed here and not tunable.

 1. closed-form amplitudes match the integrated trajectory (< 1e-6)
 2. driven evolution matches displaced resonant evolution (overlap >= 1 - 1e-6)
 3. assembled-state norm stays within 1e-10 of 1 at figure scale
 4. all five measures vanish at t = 0 (< 1e-9) for every figure panel
 5. atomic and field entropies agree (< 1e-8) at sampled times
 6. Lambda marginal has rank <= 3 and its closed-form spectrum matches
    iterative diagonalization (< 1e-8)
 7. qualitative figure-scale behaviour of entropy, Mandel and squeezing
 8. negativity calibration on known entangled/separable states (< 1e-10)
"""

import numpy as np
import pytest

from djcm import (
    CONFIGURATIONS,
    LAMBDA,
    DensityMatrix,
    SystemParams,
    assemble_state,
    build_h1,
    build_h2,
    build_initial_joint_state,
    cardano_eigenvalues,
    displace,
    evolve,
    initial_amplitude,
    jacobi_eigvalsh,
    mandel_q,
    negativity,
    rho_atoms,
    rho_field,
    squeezing,
    state_vector,
    vector_state,
    von_neumann_entropy,
)

KINDS = ("V", "Xi", "Lambda")
FIGURE_GAMMAS = (0.0, 2.0, 6.0)
FIGURE_ALPHA = 5.0

#: "early times" for the gamma = 6 sub-Poissonian transient and the
#: squeezing window: the first fifth of the figure-scale run
EARLY_GT = 5.0
SQUEEZING_WINDOW = 2.0


def _report(num, name, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    suffix = f"  [{detail}]" if detail else ""
    print(f"ACCEPTANCE {num} ({name}): {status}{suffix}")
    assert ok, f"criterion {num} ({name}) failed: {detail}"


@pytest.fixture(scope="module")
def figure_sweep():
    """entropy/mandel/s_x/s_y series for all nine figure panels.

    Shared by criteria 3 and 7; 1001-point grid over gt in [0, 25].
    """
    gts = np.linspace(0.0, 25.0, 1001)
    data = {}
    for kind in KINDS:
        for gamma in FIGURE_GAMMAS:
            params = SystemParams(CONFIGURATIONS[kind], alpha=FIGURE_ALPHA, gamma=gamma)
            norms = np.empty_like(gts)
            entropy = np.empty_like(gts)
            mandel = np.empty_like(gts)
            s_x = np.empty_like(gts)
            s_y = np.empty_like(gts)
            for i, gt in enumerate(gts):
                state = assemble_state(gt, params)
                norms[i] = state.norm()
                entropy[i] = von_neumann_entropy(rho_atoms(state))
                mandel[i] = mandel_q(state, gamma)
                s_x[i], s_y[i] = squeezing(state, gamma)
            data[(kind, gamma)] = {
                "gts": gts,
                "norm": norms,
                "entropy": entropy,
                "mandel": mandel,
                "s_x": s_x,
                "s_y": s_y,
                "n_max": params.n_max,
            }
    return data


def test_criterion_1_oracle_equivalence():
    worst = 0.0
    for kind in KINDS:
        for gamma in (0.0, 1.0):
            params = SystemParams(CONFIGURATIONS[kind], alpha=2.0, gamma=gamma)
            h = build_h2(params.config, params)
            gts = np.linspace(0.0, 5.0, 101)
            psi0 = state_vector(build_initial_joint_state(params))
            traj = evolve(h.matrix, psi0, gts, dt=1e-3, refine_tol=1e-10)
            for gt, row in zip(gts, traj):
                diff = np.abs(row.reshape(3, 3, -1) - assemble_state(gt, params).amplitudes)
                worst = max(worst, float(diff.max()))
    _report(1, "oracle equivalence", worst < 1e-6, f"max deviation {worst:.3e}")


def test_criterion_2_frame_equivalence():
    worst = 1.0
    for kind in KINDS:
        params = SystemParams(CONFIGURATIONS[kind], alpha=2.0, gamma=1.0)
        t_end = 5.0
        lab0 = np.zeros((3, 3, params.n_max + 1), dtype=complex)
        lab0[0, 0, :] = initial_amplitude(np.arange(params.n_max + 1), params.alpha)
        driven = evolve(build_h1(params.config, params).matrix, lab0.reshape(-1), [t_end], dt=1e-3)[-1]
        psi2 = evolve(
            build_h2(params.config, params).matrix,
            state_vector(build_initial_joint_state(params)),
            [t_end],
            dt=1e-3,
        )[-1]
        lab = displace(vector_state(psi2, params.n_max), -params.gamma, frame="lab")
        overlap = abs(np.vdot(driven, lab.amplitudes.reshape(-1)))
        worst = min(worst, overlap)
    _report(2, "frame equivalence", worst >= 1.0 - 1e-6, f"min overlap 1 - {1.0 - worst:.3e}")


def test_criterion_3_unitarity(figure_sweep):
    worst = 0.0
    n_max_used = None
    for kind in KINDS:
        run = figure_sweep[(kind, 6.0)]
        worst = max(worst, float(np.max(np.abs(run["norm"] - 1.0))))
        n_max_used = run["n_max"]
    ok = worst < 1e-10 and n_max_used >= 255
    _report(3, "unitarity at figure scale", ok, f"max |norm-1| {worst:.3e}, n_max {n_max_used}")


def test_criterion_4_initial_instant_identities():
    worst = 0.0
    for kind in KINDS:
        for gamma in FIGURE_GAMMAS:
            params = SystemParams(CONFIGURATIONS[kind], alpha=FIGURE_ALPHA, gamma=gamma)
            state = assemble_state(0.0, params)
            rho = rho_atoms(state)
            s_x, s_y = squeezing(state, gamma)
            values = (
                von_neumann_entropy(rho),
                negativity(rho),
                mandel_q(state, gamma),
                s_x,
                s_y,
            )
            worst = max(worst, float(np.max(np.abs(values))))
    _report(4, "t=0 identities", worst < 1e-9, f"max |value| {worst:.3e}")


def test_criterion_5_entropy_equality():
    gts = np.linspace(0.5, 25.0, 50)
    worst = 0.0
    for kind in KINDS:
        params = SystemParams(CONFIGURATIONS[kind], alpha=FIGURE_ALPHA, gamma=2.0)
        for gt in gts:
            state = assemble_state(gt, params)
            s_a = von_neumann_entropy(rho_atoms(state))
            s_f = von_neumann_entropy(rho_field(state))
            worst = max(worst, abs(s_a - s_f))
    _report(5, "atomic vs field entropy", worst < 1e-8, f"max |S_A - S_F| {worst:.3e}")


def test_criterion_6_lambda_rank_and_cardano():
    worst_tail = 0.0
    worst_cardano = 0.0
    count = 0
    for gamma, n_times in zip(FIGURE_GAMMAS, (17, 17, 16)):
        params = SystemParams(LAMBDA, alpha=FIGURE_ALPHA, gamma=gamma)
        for gt in np.linspace(0.3, 24.7, n_times):
            rho = rho_atoms(assemble_state(gt, params))
            eigs = np.sort(jacobi_eigvalsh(rho.entries))[::-1]
            worst_tail = max(worst_tail, float(np.max(np.abs(eigs[3:]))))
            closed = np.sort(cardano_eigenvalues(rho).xi)[::-1]
            worst_cardano = max(worst_cardano, float(np.max(np.abs(closed - eigs[:3]))))
            count += 1
    ok = worst_tail < 1e-10 and worst_cardano < 1e-8 and count == 50
    _report(
        6,
        "Lambda rank <= 3 / closed-form spectrum",
        ok,
        f"eigs 4-9 max {worst_tail:.3e}, cardano dev {worst_cardano:.3e}",
    )


def test_criterion_7a_entropy_maxima_after_onset(figure_sweep):
    ok = True
    for key, run in figure_sweep.items():
        peak = int(np.argmax(run["entropy"]))
        if peak == 0 or run["entropy"][peak] <= run["entropy"][0]:
            ok = False
    _report(7, "entropy maxima at gt > 0 (a)", ok)


def test_criterion_7b_mandel_sign_structure(figure_sweep):
    ok = True
    details = []
    for kind in KINDS:
        free = figure_sweep[(kind, 0.0)]
        q0 = free["mandel"][1:]
        changes_sign = bool((q0 > 1e-9).any() and (q0 < -1e-9).any())
        driven = figure_sweep[(kind, 6.0)]
        q6, gts = driven["mandel"], driven["gts"]
        neg = np.flatnonzero(q6 < -1e-9)
        # the sub-Poissonian excursions form an early transient; after the
        # last crossing the series never dips again
        has_transient = neg.size > 0
        transient_early = has_transient and gts[neg[-1]] <= EARLY_GT
        details.append(f"{kind}: last neg gt {gts[neg[-1]] if has_transient else None}")
        if not (changes_sign and has_transient and transient_early):
            ok = False
    _report(7, "Mandel sign structure (b)", ok, "; ".join(details))


def test_criterion_7c_early_x_squeezing_ordering(figure_sweep):
    minima = {}
    for kind in KINDS:
        run = figure_sweep[(kind, 0.0)]
        window = (run["gts"] > 0.0) & (run["gts"] <= SQUEEZING_WINDOW)
        minima[kind] = float(run["s_x"][window].min())
    ok = all(v < 0.0 for v in minima.values())
    ok = ok and abs(minima["Xi"]) > abs(minima["V"]) and abs(minima["Xi"]) > abs(minima["Lambda"])
    _report(
        7,
        "x-quadrature squeezing ordering (c)",
        ok,
        ", ".join(f"{k}: {v:.4f}" for k, v in minima.items()),
    )


def test_criterion_7d_no_y_squeezing(figure_sweep):
    # S_y = 0 exactly at t = 0; allow the same 1e-9 numerical floor as the
    # t = 0 identities
    worst = min(float(run["s_y"].min()) for run in figure_sweep.values())
    _report(7, "no y-quadrature squeezing (d)", worst >= -1e-9, f"min S_y {worst:.2e}")


def test_criterion_8_negativity_calibration():
    vec = np.zeros(9, dtype=complex)
    vec[[0, 4, 8]] = 1.0 / np.sqrt(3.0)
    maximal = negativity(DensityMatrix(np.outer(vec, vec.conj()), "atoms"))
    rng = np.random.default_rng(2024)
    worst_product = 0.0
    for k in range(100):
        if k % 2 == 0:
            a = rng.normal(size=3) + 1j * rng.normal(size=3)
            b = rng.normal(size=3) + 1j * rng.normal(size=3)
            a /= np.linalg.norm(a)
            b /= np.linalg.norm(b)
            rho = np.outer(np.kron(a, b), np.kron(a, b).conj())
        else:
            ma = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
            mb = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
            rho_a = ma @ ma.conj().T
            rho_b = mb @ mb.conj().T
            rho = np.kron(rho_a / np.trace(rho_a).real, rho_b / np.trace(rho_b).real)
        worst_product = max(worst_product, negativity(DensityMatrix(rho, "atoms")))
    ok = abs(maximal - 1.0) < 1e-10 and worst_product < 1e-10
    _report(
        8,
        "negativity calibration",
        ok,
        f"maximal {maximal:.12f}, products max {worst_product:.2e}",
    )
