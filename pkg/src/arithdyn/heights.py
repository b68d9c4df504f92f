"""Local and global canonical heights on rational points.

Finite local heights are (1/2) log max(|x|_p, 1).  The archimedean height
comes from a duplication series on the b-invariants with two shifted
coordinate branches, so orbits passing near x = 0 stay numerically stable.
The independent doubling oracle cross-checks the decomposition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .curve import CurvePoint, WeierstrassCurve, point_add
from .errors import ArithdynError, UnsupportedReductionError
from .numtheory import factorize, int_valuation
from .padic import padic_valuation
from .ratmath import float_from_fraction, log_int

_ARCH_ITERATIONS = 60  # tail decays like 4^-N; 60 is far beyond double precision


def _point_reduces_nonsingularly(E: WeierstrassCurve, Q: CurvePoint, p: int) -> bool:
    # assumes x(Q), y(Q) are p-integral
    x = Q.x.numerator * pow(Q.x.denominator, -1, p) % p
    y = Q.y.numerator * pow(Q.y.denominator, -1, p) % p
    fx = (3 * x * x + 2 * E.a2 * x + E.a4 - E.a1 * y) % p
    fy = (2 * y + E.a1 * x + E.a3) % p
    return fx != 0 or fy != 0


def local_height_finite(E: WeierstrassCurve, Q: CurvePoint, p: int) -> float:
    """(1/2) log max(|x(Q)|_p, 1); an exact rational multiple of log p.

    Valid when the curve has good reduction at p, or the point reduces to a
    nonsingular point (which includes everything in the kernel of reduction).
    """
    if Q.is_identity:
        raise ValueError("local heights are not evaluated at the identity")
    v = padic_valuation(Q.x, p) if Q.x != 0 else 0
    if v < 0:
        return Fraction(-v, 2) * math.log(p)
    if p in E.bad_primes and not _point_reduces_nonsingularly(E, Q, p):
        raise UnsupportedReductionError(
            f"point reduces to the singular point at p={p}; local height undefined here"
        )
    return 0.0


def local_height_arch(E: WeierstrassCurve, Q: CurvePoint, iterations: int = _ARCH_ITERATIONS) -> float:
    """Archimedean local height by the duplication series, accurate to ~1e-12."""
    if Q.is_identity:
        raise ValueError("local heights are not evaluated at the identity")
    b2, b4, b6, b8 = float(E.b2), float(E.b4), float(E.b6), float(E.b8)
    # invariants of the x -> x+1 shifted coordinate
    c2 = b2 - 12.0
    c4 = b4 - b2 + 6.0
    c6 = b6 - 2.0 * b4 + b2 - 4.0
    c8 = b8 - 3.0 * b6 + 3.0 * b4 - b2 + 3.0

    x = float_from_fraction(Q.x)
    if abs(x) >= 0.5:
        t = float_from_fraction(1 / Q.x)
        plain = True
    else:
        t = float_from_fraction(1 / (Q.x + 1))
        plain = False

    lam = 0.0
    quarter = 1.0
    for _ in range(iterations):
        quarter *= 0.25
        if plain:
            w = t * (4.0 + t * (b2 + t * (2.0 * b4 + t * b6)))
            z = 1.0 - t * t * (b4 + t * (2.0 * b6 + t * b8))
        else:
            w = t * (4.0 + t * (c2 + t * (2.0 * c4 + t * c6)))
            z = 1.0 - t * t * (c4 + t * (2.0 * c6 + t * c8))
        if w == 0.0:
            raise ArithdynError(
                "duplication orbit reached the identity (2-power torsion point)"
            )
        lam += quarter * (-2.0 * math.log(abs(t)) + 0.5 * math.log(abs(w)))
        if abs(w) <= 2.0 * abs(z):
            t = w / z
        else:
            v = z + w if plain else z - w
            t = w / v
            plain = not plain
    lam += quarter * (-0.5) * math.log(abs(t))
    return lam


@dataclass(frozen=True)
class LocalHeightProfile:
    """Decomposition of the canonical height of one point."""

    point: CurvePoint
    finite: dict[int, float]
    finite_valuations: dict[int, int]  # p -> -v_p(x(Q)) for p dividing the denominator
    archimedean: float
    total: float


def global_height(E: WeierstrassCurve, Q: CurvePoint) -> LocalHeightProfile:
    """Canonical height as the sum of all local heights."""
    if Q.is_identity:
        raise ValueError("the identity has height 0 and no local profile")
    den = Q.x.denominator
    primes = set(E.bad_primes)
    if den > 1:
        primes |= set(factorize(den))
    finite: dict[int, float] = {}
    vals: dict[int, int] = {}
    for p in sorted(primes):
        lam = local_height_finite(E, Q, p)
        if lam:
            finite[p] = lam
            vals[p] = int_valuation(den, p)
    arch = local_height_arch(E, Q)
    return LocalHeightProfile(
        point=Q,
        finite=finite,
        finite_valuations=vals,
        archimedean=arch,
        total=arch + sum(finite.values()),
    )


def naive_height_oracle(E: WeierstrassCurve, Q: CurvePoint, iterations: int = 12) -> float:
    """Independent of the local machinery: iterated doubling of exact coordinates.

    Returns 4^-n * (1/2) h(x(2^n Q)) with h(a/b) = log max(|a|, b); the error
    decays like 4^-n.  Torsion points report 0.
    """
    if iterations < 0 or iterations > 14:
        raise ValueError("iterations outside the supported range 0..14")
    if Q.is_identity:
        return 0.0
    R = Q
    for _ in range(iterations):
        R = point_add(E, R, R)
        if R.is_identity:
            return 0.0
    h = log_int(max(abs(R.x.numerator), R.x.denominator))
    return 0.25**iterations * 0.5 * h


@dataclass(frozen=True)
class AssumptionsReport:
    """Positivity of the local heights at the bad primes and at infinity."""

    point: CurvePoint
    bad_prime_ok: dict[int, bool]  # p -> |x(Q)|_p > 1
    lambda_inf: float
    passes: bool

    @property
    def failures(self) -> list[str]:
        out = [f"|x|_{p} <= 1" for p, ok in sorted(self.bad_prime_ok.items()) if not ok]
        if self.lambda_inf <= 0:
            out.append("lambda_inf <= 0")
        return out

    def __str__(self) -> str:
        if self.passes:
            return f"point {self.point} admissible (lambda_inf={self.lambda_inf:.6f})"
        return f"point {self.point} fails: " + ", ".join(self.failures)


def check_assumptions(E: WeierstrassCurve, Q: CurvePoint) -> AssumptionsReport:
    """Does every local height over the bad primes and infinity come out positive?"""
    if Q.is_identity:
        raise ValueError("the identity point cannot drive a system")
    bad_ok = {p: padic_valuation(Q.x, p) < 0 if Q.x != 0 else False for p in sorted(E.bad_primes)}
    lam_inf = local_height_arch(E, Q)
    return AssumptionsReport(
        point=Q,
        bad_prime_ok=bad_ok,
        lambda_inf=lam_inf,
        passes=all(bad_ok.values()) and lam_inf > 0,
    )


def find_admissible_multiple(E: WeierstrassCurve, Q: CurvePoint, bound: int) -> int | None:
    """Least m <= bound with mQ passing check_assumptions, or None."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    R = CurvePoint.identity()
    for m in range(1, bound + 1):
        R = point_add(E, R, Q)
        if R.is_identity:
            continue
        if check_assumptions(E, R).passes:
            return m
    return None
