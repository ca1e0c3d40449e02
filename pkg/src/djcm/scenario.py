"""Scenario runner: configuration files, measure sweeps, CSV output.

Configuration grammar (flat text, one ``key = value`` per line, ``#``
starts a comment)::

    configuration = Lambda        # V | Xi | Lambda (required)
    alpha         = 5             # coherent amplitude of the initial field (required)
    gamma         = 2             # drive ratio lambda/g; XOR with 'lambda'
    lambda        = 2.0           # classical coupling; XOR with 'gamma'
    g             = 1.0           # quantized coupling (default 1)
    n_max         = 255           # Fock truncation (default: automatic)
    gt_max        = 25            # end of the scaled-time grid (default 25)
    steps         = 1001          # number of grid points (default 1001)
    measures      = entropy,mandel  # subset of entropy,negativity,mandel,squeezing
    oracle_check  = true          # integrate a reduced-size oracle and compare

Output is CSV with the fixed header ``gt,entropy,negativity,mandel_q,s_x,s_y``,
12 significant digits, LF line endings; columns of measures that were not
requested are left empty.  Identical configurations produce byte-identical
output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from .amplitudes import assemble_state, closed_form_block
from .errors import ConfigError, OracleMismatchError
from .measures import ALL_MEASURES, MeasureSample, evaluate_measures
from .model import SLOT_PAIRS, SystemParams, get_configuration, initial_amplitude
from .oracle import build_h2, evolve

__all__ = [
    "ScenarioConfig",
    "parse_config",
    "load_config",
    "run_scenario",
    "write_series_csv",
    "run_figure_sweep",
    "emit_figure_data",
    "FIGURE_GAMMAS",
    "FIGURE_MEASURES",
]

#: Deviation above which the oracle check fails the run.
ORACLE_TOLERANCE = 1e-6

#: Drive ratios of the three panels of each published-style figure.
FIGURE_GAMMAS = (0.0, 2.0, 6.0)

#: Which measure each figure id plots.
FIGURE_MEASURES = {2: "entropy", 3: "negativity", 4: "mandel", 5: "squeezing"}

_FIGURE_COLUMNS = {2: ("entropy",), 3: ("negativity",), 4: ("mandel_q",), 5: ("s_x", "s_y")}

_CSV_HEADER = ("gt", "entropy", "negativity", "mandel_q", "s_x", "s_y")


@dataclass(frozen=True)
class ScenarioConfig:
    """Validated contents of a scenario configuration file."""

    configuration: str
    alpha: float
    gamma: float | None = None
    lam: float | None = None
    g: float = 1.0
    n_max: int | None = None
    gt_max: float = 25.0
    steps: int = 1001
    measures: tuple[str, ...] = ALL_MEASURES
    oracle_check: bool = False


_KEYS = (
    "configuration",
    "alpha",
    "gamma",
    "lambda",
    "g",
    "n_max",
    "gt_max",
    "steps",
    "measures",
    "oracle_check",
)


def _parse_bool(raw):
    low = raw.lower()
    if low in ("true", "yes", "on", "1"):
        return True
    if low in ("false", "no", "off", "0"):
        return False
    raise ValueError(f"expected a boolean, got {raw!r}")


def _parse_measures(raw):
    names = tuple(part.strip() for part in raw.split(",") if part.strip())
    if not names:
        raise ValueError("empty measures list")
    if names == ("all",):
        return ALL_MEASURES
    unknown = set(names) - set(ALL_MEASURES)
    if unknown:
        raise ValueError(f"unknown measures: {', '.join(sorted(unknown))}")
    # keep canonical order, drop duplicates
    return tuple(name for name in ALL_MEASURES if name in names)


def parse_config(text: str, source: str = "<config>") -> ScenarioConfig:
    """Parse and validate the flat ``key = value`` grammar.

    Raises :class:`ConfigError` with the offending line number.
    """
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key not in _KEYS:
            raise ConfigError(f"{source}:{lineno}: unknown key {key!r}")
        if key in seen:
            raise ConfigError(f"{source}:{lineno}: duplicate key {key!r}")
        if not value:
            raise ConfigError(f"{source}:{lineno}: empty value for {key!r}")
        seen[key] = (lineno, value)

    def take(key, conv, default=None):
        if key not in seen:
            return default
        lineno, raw = seen.pop(key)
        try:
            return conv(raw)
        except ValueError as exc:
            raise ConfigError(f"{source}:{lineno}: bad value for {key!r}: {exc}") from None

    def require(key, conv):
        if key not in seen:
            raise ConfigError(f"{source}: missing required key {key!r}")
        return take(key, conv)

    kind_line = seen.get("configuration", (0, ""))[0]
    kind = require("configuration", str)
    try:
        kind = get_configuration(kind).kind
    except ValueError as exc:
        raise ConfigError(f"{source}:{kind_line}: {exc}") from None
    alpha = require("alpha", float)
    gamma = take("gamma", float)
    lam = take("lambda", float)
    if (gamma is None) == (lam is None):
        raise ConfigError(f"{source}: exactly one of 'gamma' and 'lambda' is required")
    cfg = ScenarioConfig(
        configuration=kind,
        alpha=alpha,
        gamma=gamma,
        lam=lam,
        g=take("g", float, 1.0),
        n_max=take("n_max", int),
        gt_max=take("gt_max", float, 25.0),
        steps=take("steps", int, 1001),
        measures=take("measures", _parse_measures, ALL_MEASURES),
        oracle_check=take("oracle_check", _parse_bool, False),
    )
    if cfg.steps < 2:
        raise ConfigError(f"{source}: steps must be at least 2")
    if cfg.gt_max <= 0.0:
        raise ConfigError(f"{source}: gt_max must be positive")
    if cfg.g <= 0.0:
        raise ConfigError(f"{source}: g must be positive")
    if cfg.alpha < 0.0:
        raise ConfigError(f"{source}: alpha must be non-negative")
    if (cfg.gamma if cfg.gamma is not None else cfg.lam) < 0.0:
        raise ConfigError(f"{source}: the drive coupling must be non-negative")
    if cfg.n_max is not None and cfg.n_max < 4:
        raise ConfigError(f"{source}: n_max must be at least 4")
    return cfg


def load_config(path) -> ScenarioConfig:
    """Read and parse a configuration file."""
    path = Path(path)
    return parse_config(path.read_text(), source=str(path))


def _system_params(cfg: ScenarioConfig) -> SystemParams:
    gts = np.linspace(0.0, cfg.gt_max, cfg.steps)
    return SystemParams(
        config=get_configuration(cfg.configuration),
        alpha=cfg.alpha,
        gamma=cfg.gamma,
        lam=cfg.lam,
        g=cfg.g,
        n_max=cfg.n_max,
        t_grid=tuple(gts),
    )


def _oracle_deviation(params: SystemParams, gts, dt=1e-3):
    """Max closed-form vs integrated amplitude difference on a reduced space.

    The Hamiltonian is block diagonal over excitation manifolds, so a
    reduced truncation evolves every fully contained manifold exactly;
    only those manifolds are compared.
    """
    beta = params.beta
    reduced = min(params.n_max, math.ceil(beta * beta + 6.0 * beta) + 12)
    cfg = params.config
    h = build_h2(cfg, params, n_max=reduced)
    psi0 = np.zeros((3, 3, reduced + 1), dtype=complex)
    psi0[0, 0, :] = initial_amplitude(np.arange(reduced + 1), beta)
    traj = evolve(h.matrix, psi0.reshape(-1), np.asarray(gts) / params.g, dt=dt)
    n = np.arange(reduced - cfg.max_offset + 1)
    worst = 0.0
    for row, gt in zip(traj, gts):
        integrated = row.reshape(3, 3, reduced + 1)
        block = closed_form_block(n, gt / params.g, params)
        for s, (a, b) in enumerate(SLOT_PAIRS):
            m = n + cfg.photon_offsets[s]
            diff = float(np.max(np.abs(block[s] - integrated[a - 1, b - 1, m])))
            worst = max(worst, diff)
            if a != b:
                diff = float(np.max(np.abs(block[s] - integrated[b - 1, a - 1, m])))
                worst = max(worst, diff)
    return worst, reduced


def run_scenario(cfg: ScenarioConfig, out_path=None):
    """Sweep the scaled-time grid and evaluate the requested measures.

    Returns ``(samples, summary)``; writes the CSV series to ``out_path``
    when given.  Raises :class:`OracleMismatchError` if the optional oracle
    check deviates by more than :data:`ORACLE_TOLERANCE`.
    """
    params = _system_params(cfg)
    gts = np.asarray(params.t_grid)
    samples = []
    state = None
    for gt in gts:
        state = assemble_state(gt / params.g, params)
        samples.append(evaluate_measures(state, params.gamma, gt, which=cfg.measures))
    summary = {
        "rows": len(samples),
        "n_max": params.n_max,
        "final_norm": state.norm(),
        "measures": cfg.measures,
    }
    if cfg.oracle_check:
        deviation, reduced = _oracle_deviation(params, gts)
        summary["oracle_deviation"] = deviation
        summary["oracle_n_max"] = reduced
        if deviation > ORACLE_TOLERANCE:
            raise OracleMismatchError(
                f"oracle deviation {deviation:.3e} exceeds {ORACLE_TOLERANCE:g}"
            )
    if out_path is not None:
        write_series_csv(samples, out_path)
    return samples, summary


def _fmt(value) -> str:
    return "" if value is None else f"{value:.12g}"


def write_series_csv(samples, path):
    """Write a measure series with the fixed header, 12 significant digits, LF."""
    path = Path(path)
    with open(path, "w", newline="\n") as fh:
        fh.write(",".join(_CSV_HEADER) + "\n")
        for s in samples:
            row = (s.gt, s.entropy, s.negativity, s.mandel_q, s.s_x, s.s_y)
            fh.write(",".join(_fmt(v) for v in row) + "\n")
    return path


def run_figure_sweep(cfg: ScenarioConfig, figure_id: int):
    """Run the nine (configuration, gamma) series behind one figure.

    Uses ``alpha``, ``g``, the grid and the truncation policy from ``cfg``;
    the file's own configuration and drive ratio are ignored in favour of
    the sweep.  Returns ``{(kind, gamma): samples}``.
    """
    if figure_id not in FIGURE_MEASURES:
        raise ConfigError(f"unknown figure id {figure_id}; expected one of 2, 3, 4, 5")
    measure = FIGURE_MEASURES[figure_id]
    series = {}
    for kind in ("V", "Xi", "Lambda"):
        for gamma in FIGURE_GAMMAS:
            run_cfg = replace(
                cfg,
                configuration=kind,
                gamma=gamma,
                lam=None,
                measures=(measure,),
                oracle_check=cfg.oracle_check,
            )
            samples, _ = run_scenario(run_cfg)
            series[(kind, gamma)] = samples
    return series


def emit_figure_data(series, figure_id: int, out_dir):
    """Write one ``<fig>_<config>_<gamma>.csv`` file per series.

    ``series`` maps ``(kind, gamma)`` to sample lists covering all nine
    combinations; raises ``ValueError`` when one is missing or lacks the
    figure's measure.
    """
    if figure_id not in _FIGURE_COLUMNS:
        raise ConfigError(f"unknown figure id {figure_id}; expected one of 2, 3, 4, 5")
    columns = _FIGURE_COLUMNS[figure_id]
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for kind in ("V", "Xi", "Lambda"):
        for gamma in FIGURE_GAMMAS:
            key = (kind, gamma)
            if key not in series:
                raise ValueError(f"missing series for configuration {kind}, gamma={gamma:g}")
            samples = series[key]
            for col in columns:
                if any(getattr(s, col) is None for s in samples):
                    raise ValueError(
                        f"series for {kind}, gamma={gamma:g} lacks the {col!r} values"
                    )
            path = out_dir / f"{figure_id}_{kind}_{gamma:g}.csv"
            with open(path, "w", newline="\n") as fh:
                fh.write(",".join(("gt",) + columns) + "\n")
                for s in samples:
                    cells = [_fmt(s.gt)] + [_fmt(getattr(s, col)) for col in columns]
                    fh.write(",".join(cells) + "\n")
            paths.append(path)
    return paths
