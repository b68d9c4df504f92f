"""The real beta-transformation x -> beta*x mod 1 on [0, 1).

Periodic points of the n-fold map are enumerated through their greedy digit
strings: a string (d_0..d_{n-1}) pins the candidate x0 = (sum d_i b^{n-1-i})
/ (b^n - 1), accepted exactly when its own orbit regenerates the string.
Rational beta is handled with exact arithmetic; inexact beta runs in
outward-rounded interval arithmetic and reports a count range plus
ambiguity flags.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .dyadic import DyadicInterval, bound_cmp, interval_max, interval_min
from .errors import EnumerationBudgetError
from .ratmath import log_abs_fraction

CANDIDATE_BUDGET = 1 << 26


@dataclass(frozen=True)
class BetaSystem:
    """A beta-transformation; beta is exact or a certified enclosure."""

    beta: Fraction | None
    beta_interval: DyadicInterval | None

    @classmethod
    def from_rational(cls, beta) -> "BetaSystem":
        beta = Fraction(beta)
        if beta <= 0:
            raise ValueError("beta must be positive")
        return cls(beta, None)

    @classmethod
    def from_real(cls, value: float, abs_err: float = 1e-9) -> "BetaSystem":
        if value <= 0:
            raise ValueError("beta must be positive")
        lo = Fraction(value) - Fraction(abs_err)
        hi = Fraction(value) + Fraction(abs_err)
        if lo <= 0:
            raise ValueError("enclosure of beta must stay positive")
        return cls(None, DyadicInterval.from_endpoints(lo, hi))

    @property
    def is_exact(self) -> bool:
        return self.beta is not None

    @property
    def beta_float(self) -> float:
        if self.is_exact:
            return float(self.beta)
        return self.beta_interval.midpoint_float()

    @property
    def digit_alphabet(self) -> range:
        """Digits 0 .. ceil(beta) - 1."""
        if self.is_exact:
            return range(max(1, math.ceil(self.beta)))
        lo = math.ceil(self.beta_interval.lower_fraction())
        hi = math.ceil(self.beta_interval.upper_fraction())
        if lo != hi:
            raise ValueError("beta enclosure straddles an integer; tighten it")
        return range(max(1, hi))


def beta_step(B: BetaSystem, x: Fraction) -> Fraction:
    """One exact step; requires exact beta and x in [0, 1)."""
    if not B.is_exact:
        raise ValueError("exact stepping needs a rational beta")
    x = Fraction(x)
    if not 0 <= x < 1:
        raise ValueError("x must lie in [0, 1)")
    y = B.beta * x
    return y - math.floor(y)


def beta_entropy(B: BetaSystem) -> float:
    """log+ beta."""
    if B.is_exact:
        return max(0.0, log_abs_fraction(B.beta)) if B.beta != 0 else 0.0
    return max(0.0, math.log(B.beta_float))


@dataclass(frozen=True)
class PeriodicCount:
    """Count of fixed points of the n-fold map, possibly a range."""

    lo: int
    hi: int
    ambiguous: int

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    def __int__(self) -> int:
        if not self.is_exact:
            raise ValueError(f"count is the range [{self.lo}, {self.hi}]")
        return self.lo

    def log_range(self) -> tuple[float, float]:
        return math.log(max(self.lo, 1)), math.log(max(self.hi, 1))


def _check_budget(B: BetaSystem, n: int):
    if len(B.digit_alphabet) ** n > CANDIDATE_BUDGET:
        raise EnumerationBudgetError(
            f"{len(B.digit_alphabet)}^{n} digit strings exceed the enumeration budget"
        )


def _enumerate_exact(beta: Fraction, n: int, alphabet: range) -> list[Fraction]:
    powers = [beta ** (i + 1) for i in range(n)]
    denom = powers[n - 1] - 1
    points: list[Fraction] = []
    # stack entries: (level, digit accumulator c, feasible half-open box)
    stack: list[tuple[int, Fraction, Fraction, Fraction]] = [
        (0, Fraction(0), Fraction(0), Fraction(1))
    ]
    while stack:
        i, c, lo, hi = stack.pop()
        pw = powers[i]
        for d in alphabet:
            c2 = beta * c + d
            nlo = c2 / pw
            if nlo >= hi:
                break  # later digits only move the window further right
            nhi = (c2 + 1) / pw
            xlo = max(lo, nlo)
            xhi = min(hi, nhi)
            if xlo >= xhi:
                continue
            if i + 1 == n:
                x0 = c2 / denom
                if xlo <= x0 < xhi:
                    points.append(x0)
            else:
                stack.append((i + 1, c2, xlo, xhi))
    return sorted(points)


def _enumerate_interval(
    box_beta: DyadicInterval, n: int, alphabet: range
) -> tuple[list[tuple[Fraction, Fraction]], int]:
    powers = [box_beta]
    for _ in range(n - 1):
        powers.append(powers[-1] * box_beta)
    denom = powers[n - 1].add_int(-1)
    one = DyadicInterval.from_fraction(1)
    zero = DyadicInterval.from_fraction(0)
    certain: list[tuple[Fraction, Fraction]] = []
    ambiguous = 0
    stack = [(0, zero, zero, one)]
    while stack:
        i, c, lo, hi = stack.pop()
        pw = powers[i]
        for d in alphabet:
            c2 = (box_beta * c).add_int(d)
            nlo = c2.divide_positive(pw)
            if bound_cmp(nlo.lo, hi.hi) >= 0:
                break  # certainly past the window for every larger digit
            nhi = c2.add_int(1).divide_positive(pw)
            xlo = interval_max(lo, nlo)
            xhi = interval_min(hi, nhi)
            if bound_cmp(xlo.lo, xhi.hi) >= 0:
                continue  # certainly empty
            if i + 1 == n:
                x0 = c2.divide_positive(denom)
                inside = (
                    bound_cmp(x0.lo, xlo.hi) >= 0 and bound_cmp(x0.hi, xhi.lo) < 0
                )
                outside = (
                    bound_cmp(x0.hi, xlo.lo) < 0 or bound_cmp(x0.lo, xhi.hi) >= 0
                )
                if inside:
                    certain.append((x0.lower_fraction(), x0.upper_fraction()))
                elif not outside:
                    ambiguous += 1
            else:
                stack.append((i + 1, c2, xlo, xhi))
    certain.sort()
    return certain, ambiguous


def beta_periodic_points(B: BetaSystem, n: int):
    """Fixed points of the n-fold map.

    Exact beta: a sorted list of exact rationals.  Inexact beta: a sorted
    list of enclosure pairs for the certain points (ambiguous candidates are
    only counted, see beta_periodic_count).
    """
    if n < 1:
        raise ValueError("period must be >= 1")
    if B.is_exact and B.beta <= 1:
        return [Fraction(0)]
    _check_budget(B, n)
    if B.is_exact:
        return _enumerate_exact(B.beta, n, B.digit_alphabet)
    points, _ = _enumerate_interval(B.beta_interval, n, B.digit_alphabet)
    return points


def beta_periodic_count(B: BetaSystem, n: int) -> PeriodicCount:
    """How many fixed points the n-fold map has; a range when beta is inexact."""
    if n < 1:
        raise ValueError("period must be >= 1")
    if B.is_exact and B.beta <= 1:
        return PeriodicCount(1, 1, 0)
    _check_budget(B, n)
    if B.is_exact:
        k = len(_enumerate_exact(B.beta, n, B.digit_alphabet))
        return PeriodicCount(k, k, 0)
    certain, ambiguous = _enumerate_interval(B.beta_interval, n, B.digit_alphabet)
    return PeriodicCount(len(certain), len(certain) + ambiguous, ambiguous)
