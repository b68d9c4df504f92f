"""Exact arithmetic dynamics toolkit.

Multiply-and-truncate maps on p-adic integers, the real beta-transformation,
canonical heights on elliptic curves, division polynomials, Mahler measure,
and the assembled product systems they generate.
"""

from .adelic import AdelicSystem, adelic_entropy, build_system, periodic_growth_experiment
from .beta import BetaSystem, beta_entropy, beta_periodic_count, beta_periodic_points, beta_step
from .curve import (
    CurvePoint,
    DivisionPolynomial,
    WeierstrassCurve,
    division_polynomial,
    evaluate_psi_at_point,
    identity_component_contains,
    make_curve,
    nu_poly,
    point_add,
    point_mul,
    real_division_value,
)
from .errors import (
    AdmissibilityError,
    ArithdynError,
    EnumerationBudgetError,
    InvariantViolationError,
    PrecisionExhaustedError,
    RefinementError,
    SingularCurveError,
    UnitRootError,
    UnsupportedReductionError,
)
from .heights import (
    check_assumptions,
    find_admissible_multiple,
    global_height,
    local_height_arch,
    local_height_finite,
    naive_height_oracle,
)
from .padic import (
    PAdicNumber,
    QTransform,
    orbit,
    padic_valuation,
    periodic_count_exact,
    periodic_points_enumerate,
    periodic_points_residues,
    preimage_ball_check,
    q_entropy,
    q_transform_step,
)
from .sequences import divisibility_check, eds_terms, realizability_check
from .solenoid import (
    IntegerPolynomial,
    circulant_periodic_oracle,
    mahler_measure,
    solenoid_entropy,
    solenoid_periodic_count,
    toral_periodic_count,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
