"""Division-polynomial term sequences and periodic-point realizability tests."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curve import CurvePoint, WeierstrassCurve, psi_value_table
from .numtheory import divisors, mobius


@dataclass(frozen=True)
class DivisibilitySequence:
    """Terms |b^{n^2-1} psi_n(Q)| for x(Q) = a/b in lowest terms."""

    curve: WeierstrassCurve
    point: CurvePoint
    terms: tuple[int, ...]  # terms[0] unused; terms[n] is the n-th term

    def term(self, n: int) -> int:
        return self.terms[n]

    @property
    def zero_indices(self) -> tuple[int, ...]:
        return tuple(n for n in range(1, len(self.terms)) if self.terms[n] == 0)


def eds_terms(E: WeierstrassCurve, Q: CurvePoint, n_max: int) -> DivisibilitySequence:
    """Exact integer terms for n = 1..n_max; integrality is asserted."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if Q.is_identity:
        raise ValueError("sequence needs an affine point")
    b = Q.x.denominator
    values = psi_value_table(E, Q, n_max)
    terms = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        t = Fraction(b) ** (n * n - 1) * values[n]
        if t.denominator != 1:
            raise ArithmeticError(f"term {n} is not integral: {t}")
        terms[n] = abs(int(t))
    return DivisibilitySequence(E, Q, tuple(terms))


@dataclass(frozen=True)
class DivisibilityReport:
    checked_pairs: int
    violations: tuple[tuple[int, int], ...]  # (m, n) with m | n but term_m not | term_n

    @property
    def ok(self) -> bool:
        return not self.violations


def divisibility_check(terms, n_max: int | None = None) -> DivisibilityReport:
    """Verify term_m | term_n whenever m | n, over exact integers.

    ``terms`` is a DivisibilitySequence or a plain 1-based sequence of ints.
    """
    if isinstance(terms, DivisibilitySequence):
        seq = list(terms.terms)
    else:
        seq = [0] + [int(t) for t in terms]
    top = len(seq) - 1 if n_max is None else min(n_max, len(seq) - 1)
    violations = []
    checked = 0
    for n in range(1, top + 1):
        for m in divisors(n):
            if m == n:
                continue
            checked += 1
            if seq[m] == 0:
                continue  # a zero term divides nothing; reported via zero_indices
            if seq[n] % seq[m] != 0:
                violations.append((m, n))
    return DivisibilityReport(checked, tuple(violations))


@dataclass(frozen=True)
class RealizabilityReport:
    """Moebius orbit counts for putative per-period fixed-point data."""

    orbit_counts: tuple[Fraction, ...]  # index n-1 holds O_n
    first_failure: tuple[int, Fraction] | None

    @property
    def realizable(self) -> bool:
        return self.first_failure is None


def realizability_check(counts) -> RealizabilityReport:
    """Can ``counts[n-1]`` be |Per_n| of a single map?

    Necessary condition: every orbit count (1/n) sum_{d|n} mu(n/d) counts[d]
    is a nonnegative integer.
    """
    counts = [int(c) for c in counts]
    if any(c < 0 for c in counts):
        raise ValueError("periodic-point counts must be nonnegative")
    orbit_counts = []
    failure = None
    for n in range(1, len(counts) + 1):
        s = sum(mobius(n // d) * counts[d - 1] for d in divisors(n))
        o = Fraction(s, n)
        orbit_counts.append(o)
        if failure is None and (o.denominator != 1 or o < 0):
            failure = (n, o)
    return RealizabilityReport(tuple(orbit_counts), failure)
