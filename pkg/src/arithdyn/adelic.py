"""The product system driven by a rational point: assembly, entropy, growth.

Finite components are multiply-and-truncate maps with multiplier q = x(Q),
one per prime of the denominator; the archimedean component is the
beta-transformation with log beta twice the archimedean local height.  Only
the descriptor and the per-component invariants are materialized; theorem
content factors through the components.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .beta import BetaSystem, PeriodicCount, beta_periodic_count
from .curve import CurvePoint, WeierstrassCurve, real_division_value
from .errors import AdmissibilityError, EnumerationBudgetError
from .heights import LocalHeightProfile, check_assumptions, global_height
from .numtheory import factorize
from .padic import QTransform, periodic_count_exact
from .ratmath import log_int

_BETA_ENCLOSURE_ERR = 1e-9


@dataclass(frozen=True)
class AdelicSystem:
    """Descriptor of the product system attached to an admissible point."""

    curve: WeierstrassCurve
    point: CurvePoint
    q: Fraction
    support_finite: frozenset[int]  # primes with |q|_p > 1 (= primes of the denominator)
    multiplier_valuations: dict[int, int]  # p -> k with |q|_p = p^k
    log_beta: float
    heights: LocalHeightProfile

    @property
    def beta(self) -> float:
        return math.exp(self.log_beta)

    @property
    def denominator(self) -> int:
        return self.q.denominator

    def finite_entropies(self) -> dict[int, float]:
        return {p: k * math.log(p) for p, k in sorted(self.multiplier_valuations.items())}

    def transforms(self) -> dict[int, QTransform]:
        return {p: QTransform(p, self.q) for p in sorted(self.support_finite)}

    def beta_system(self, abs_err: float = _BETA_ENCLOSURE_ERR) -> BetaSystem:
        return BetaSystem.from_real(self.beta, abs_err=abs_err)


def build_system(E: WeierstrassCurve, Q: CurvePoint) -> AdelicSystem:
    """Assemble the descriptor; rejects points failing the positivity report."""
    report = check_assumptions(E, Q)
    if not report.passes:
        raise AdmissibilityError(report)
    q = Q.x
    vals = factorize(q.denominator) if q.denominator > 1 else {}
    profile = global_height(E, Q)
    return AdelicSystem(
        curve=E,
        point=Q,
        q=q,
        support_finite=frozenset(vals),
        multiplier_valuations=dict(vals),
        log_beta=2.0 * profile.archimedean,
        heights=profile,
    )


@dataclass(frozen=True)
class EntropyReport:
    """Per-component entropies and the comparison against twice the height."""

    finite: dict[int, float]
    log_beta: float
    total: float
    two_h_hat: float
    difference: float
    finite_sum_is_log_denominator: bool  # prod p^{k_p} == denominator, exactly

    def __str__(self) -> str:
        comps = ", ".join(f"{p}: {v:.6f}" for p, v in self.finite.items())
        return (
            f"entropy {self.total:.9f} = log beta {self.log_beta:.9f}"
            f" + [{comps}]; 2*height = {self.two_h_hat:.9f}"
            f" (difference {self.difference:.2e})"
        )


def adelic_entropy(S: AdelicSystem) -> EntropyReport:
    """Sum of component entropies; off-support primes contribute zero."""
    finite = S.finite_entropies()
    total = S.log_beta + sum(finite.values())
    two_h = 2.0 * S.heights.total
    product = 1
    for p, k in S.multiplier_valuations.items():
        product *= p**k
    return EntropyReport(
        finite=finite,
        log_beta=S.log_beta,
        total=total,
        two_h_hat=two_h,
        difference=abs(total - two_h),
        finite_sum_is_log_denominator=product == S.denominator,
    )


@dataclass(frozen=True)
class GrowthRow:
    """One period length in the periodic-growth experiment."""

    n: int
    finite_counts: dict[int, int]  # exact p^{n k_p}
    log_per_finite: float  # n log(denominator), from the exact product
    beta_count: PeriodicCount
    log_per_beta: tuple[float, float]
    log_per_total: float  # midpoint when the beta count is a range
    log_bn_nu: float  # n log(denominator) + log|nu_n(q)|
    gap: float  # |log_per_total - log_bn_nu| / n


@dataclass(frozen=True)
class GrowthExperiment:
    rows: tuple[GrowthRow, ...]
    truncated_at: int | None  # first n over the enumeration budget, if any


def periodic_growth_experiment(S: AdelicSystem, n_max: int) -> GrowthExperiment:
    """Compare log periodic counts against n log b + log|nu_n(q)| for n <= n_max."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    beta_sys = S.beta_system()
    transforms = S.transforms()
    b = S.denominator
    rows = []
    truncated = None
    for n in range(1, n_max + 1):
        counts = {p: periodic_count_exact(T, n) for p, T in transforms.items()}
        product = 1
        for c in counts.values():
            product *= c
        assert product == b**n  # exact integer identity before any float appears
        log_finite = n * log_int(b) if b > 1 else 0.0
        try:
            bc = beta_periodic_count(beta_sys, n)
        except EnumerationBudgetError:
            truncated = n
            break
        log_beta_lo, log_beta_hi = bc.log_range()
        log_total = log_finite + (log_beta_lo + log_beta_hi) / 2
        # nu_1 is the empty product over the non-identity points of order 1
        nu_term = real_division_value(S.curve, n, S.q) if n >= 2 else 0.0
        log_bn_nu = log_finite + nu_term
        rows.append(
            GrowthRow(
                n=n,
                finite_counts=counts,
                log_per_finite=log_finite,
                beta_count=bc,
                log_per_beta=(log_beta_lo, log_beta_hi),
                log_per_total=log_total,
                log_bn_nu=log_bn_nu,
                gap=abs(log_total - log_bn_nu) / n,
            )
        )
    return GrowthExperiment(tuple(rows), truncated)
