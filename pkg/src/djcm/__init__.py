"""Exact dynamics and nonclassicality measures for two driven three-level atoms
in a single-mode cavity.

The package provides closed-form state evolution for the V, ladder (Xi) and
Lambda level schemes, an independent brute-force integration oracle, reduced
density matrices, and four diagnostics: von Neumann entropy, negativity,
the Mandel parameter and quadrature squeezing.
"""

from .amplitudes import (
    AmplitudeSet,
    XiCoefficients,
    amplitudes_lambda,
    amplitudes_v,
    amplitudes_xi,
    assemble_state,
    closed_form_amplitudes,
    closed_form_block,
    xi_coefficients,
)
from .density import (
    DensityMatrix,
    jacobi_eigvalsh,
    partial_transpose_b,
    rho_atoms,
    rho_field,
)
from .errors import (
    ConfigError,
    DegenerateSpectrumError,
    IntegrationError,
    NumericalToleranceError,
    OracleMismatchError,
    TruncationError,
    TruncationWarning,
    UndefinedMeasureError,
)
from .measures import (
    ALL_MEASURES,
    CardanoEigenvalues,
    MeasureSample,
    cardano_eigenvalues,
    evaluate_measures,
    field_moment,
    ladder_moment,
    mandel_q,
    negativity,
    squeezing,
    von_neumann_entropy,
)
from .model import (
    CONFIGURATIONS,
    LAMBDA,
    SLOT_MULTIPLICITIES,
    SLOT_PAIRS,
    V,
    XI,
    AtomicConfiguration,
    JointState,
    SystemParams,
    build_initial_joint_state,
    coupling,
    default_n_max,
    get_configuration,
    initial_amplitude,
    poisson_tail,
)
from .oracle import (
    HamiltonianMatrix,
    build_h1,
    build_h2,
    displace,
    evolve,
    integrate,
    state_vector,
    vector_state,
)
from .scenario import (
    FIGURE_GAMMAS,
    FIGURE_MEASURES,
    ScenarioConfig,
    emit_figure_data,
    load_config,
    parse_config,
    run_figure_sweep,
    run_scenario,
    write_series_csv,
)

__version__ = "0.1.0"
