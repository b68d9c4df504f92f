"""Toral and solenoid invariants: Mahler measure, entropy, periodic counts.

Periodic-point counts are exact integers via resultants; the Mahler measure
has two independent routes (complex roots vs. the unit-circle log integral)
that must agree.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import cached_property

import mpmath
import numpy as np

from .errors import InvariantViolationError, UnitRootError
from .polyint import (
    degree,
    has_cyclotomic_factor,
    is_primitive,
    sylvester_resultant,
    trim,
)
from .ratmath import log_int

_AGREEMENT_TOL = 1e-6


@dataclass(frozen=True)
class IntegerPolynomial:
    """A primitive integer polynomial, coefficients constant-first."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        cs = trim(list(self.coefficients))
        if not cs:
            raise ValueError("the zero polynomial is not allowed")
        object.__setattr__(self, "coefficients", tuple(cs))
        if not is_primitive(cs):
            raise ValueError("coefficients must be primitive (content 1)")

    @property
    def deg(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> int:
        return self.coefficients[-1]

    @property
    def constant(self) -> int:
        return self.coefficients[0]

    @cached_property
    def roots(self) -> tuple[complex, ...]:
        """Complex roots at 50-digit working precision."""
        if self.deg == 0:
            return ()
        with mpmath.workdps(50):
            rts = mpmath.polyroots(
                [mpmath.mpf(c) for c in reversed(self.coefficients)],
                maxsteps=200,
                extraprec=120,
            )
            return tuple(complex(r) for r in rts)

    def __repr__(self) -> str:
        return f"IntegerPolynomial({list(self.coefficients)})"


def mahler_measure_roots(F: IntegerPolynomial) -> float:
    """log|lead| plus the log of every root outside the unit circle."""
    total = log_int(abs(F.leading))
    with mpmath.workdps(50):
        if F.deg > 0:
            rts = mpmath.polyroots(
                [mpmath.mpf(c) for c in reversed(F.coefficients)],
                maxsteps=200,
                extraprec=120,
            )
            for r in rts:
                m = mpmath.sqrt(mpmath.re(r) ** 2 + mpmath.im(r) ** 2)
                if m > 1:
                    total += float(mpmath.log(m))
    return total


def mahler_measure_integral(
    F: IntegerPolynomial, tol: float = 1e-8, max_doublings: int = 16
) -> tuple[float, bool]:
    """Trapezoid value of the log integral over the unit circle.

    Converges exponentially fast when no root sits on the circle; otherwise
    stalls, in which case the returned flag is False.
    """
    coeffs = np.array(list(reversed(F.coefficients)), dtype=float)
    prev = None
    n = 64
    for _ in range(max_doublings):
        t = np.arange(n) / n
        vals = np.abs(np.polyval(coeffs, np.exp(2j * np.pi * t)))
        if np.any(vals == 0):
            return math.nan, False  # sampled a root exactly on the circle
        est = float(np.mean(np.log(vals)))
        if prev is not None and abs(est - prev) < tol / 4:
            return est, True
        prev = est
        n *= 2
    return prev, False


def mahler_measure(F: IntegerPolynomial) -> float:
    """Mahler measure, root route, cross-checked against the circle integral."""
    root_value = mahler_measure_roots(F)
    integral_value, converged = mahler_measure_integral(F)
    if not converged:
        warnings.warn(
            "unit-circle integral converges slowly (root on or near the circle); "
            "returning the root-formula value",
            stacklevel=2,
        )
    elif abs(integral_value - root_value) > _AGREEMENT_TOL:
        raise InvariantViolationError(
            f"Mahler measure routes disagree: roots {root_value!r} vs "
            f"integral {integral_value!r}"
        )
    return root_value


def solenoid_periodic_count(a: int, b: int, n: int) -> int:
    """Exact |b^n - a^n| for the rank-one system with multiplier a/b."""
    if math.gcd(a, b) != 1:
        raise ValueError("a and b must be coprime")
    if a == b:
        raise UnitRootError("a = b gives a unit-root multiplier")
    if n < 1:
        raise ValueError("period must be >= 1")
    return abs(b**n - a**n)


def circulant_matrix(a: int, n: int) -> list[list[int]]:
    """n x n circulant on the row (a, -1, 0, ..., 0)."""
    if n < 1:
        raise ValueError("size must be >= 1")
    if n == 1:
        return [[a - 1]]
    rows = []
    for i in range(n):
        row = [0] * n
        row[i] = a
        row[(i + 1) % n] = -1
        rows.append(row)
    return rows


def circulant_periodic_oracle(a: int, n: int) -> int:
    """|det C| by brute-force exact elimination, no circulant shortcut."""
    from .polyint import bareiss_determinant

    return abs(bareiss_determinant(circulant_matrix(a, n)))


def toral_periodic_count(F: IntegerPolynomial, n: int) -> int:
    """Exact |b|^n prod |alpha_i^n - 1| via the resultant with x^n - 1."""
    if n < 1:
        raise ValueError("period must be >= 1")
    if has_cyclotomic_factor(list(F.coefficients)):
        raise UnitRootError("a root of the polynomial is a root of unity")
    xn_minus_1 = [-1] + [0] * (n - 1) + [1]
    return abs(sylvester_resultant(list(F.coefficients), xn_minus_1))


def log_toral_periodic_count(F: IntegerPolynomial, n: int) -> float:
    return log_int(toral_periodic_count(F, n))


def solenoid_entropy(a: int, b: int) -> float:
    """log max(|a|, |b|); checked against the Mahler measure of b*x - a."""
    if math.gcd(a, b) != 1:
        raise ValueError("a and b must be coprime")
    value = math.log(max(abs(a), abs(b)))
    measure = mahler_measure_roots(IntegerPolynomial((-a, b)))
    if abs(value - measure) > 1e-10:
        raise InvariantViolationError(
            f"entropy {value!r} != Mahler measure {measure!r} for ({a},{b})"
        )
    return value
