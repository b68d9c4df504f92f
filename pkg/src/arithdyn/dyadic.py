"""Outward-rounded dyadic interval arithmetic at fixed working precision.

A bound is a pair (m, e) meaning m * 2**e with m an int.  An interval keeps
a lower bound rounded toward -inf and an upper bound rounded toward +inf,
both clamped to PRECISION mantissa bits, so every operation encloses the
exact result.
"""

from __future__ import annotations

from fractions import Fraction

PRECISION = 128

Bound = tuple[int, int]


def _round_down(m: int, e: int) -> Bound:
    extra = m.bit_length() - PRECISION
    if extra > 0:
        return m >> extra, e + extra  # >> floors, also for negative m
    return m, e


def _round_up(m: int, e: int) -> Bound:
    extra = m.bit_length() - PRECISION
    if extra > 0:
        return -((-m) >> extra), e + extra
    return m, e


def _add(a: Bound, b: Bound) -> Bound:
    (ma, ea), (mb, eb) = a, b
    if ea < eb:
        return ma + (mb << (eb - ea)), ea
    return (ma << (ea - eb)) + mb, eb


def _mul(a: Bound, b: Bound) -> Bound:
    return a[0] * b[0], a[1] + b[1]


def bound_cmp(a: Bound, b: Bound) -> int:
    (ma, ea), (mb, eb) = a, b
    if ea < eb:
        mb <<= eb - ea
    elif eb < ea:
        ma <<= ea - eb
    return (ma > mb) - (ma < mb)


def bound_fraction(a: Bound) -> Fraction:
    m, e = a
    return Fraction(m, 1 << -e) if e < 0 else Fraction(m * (1 << e))


class DyadicInterval:
    """Closed interval [lo, hi] with dyadic endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: Bound, hi: Bound):
        self.lo = lo
        self.hi = hi

    @classmethod
    def from_fraction(cls, q: Fraction | int) -> "DyadicInterval":
        q = Fraction(q)
        num, den = q.numerator, q.denominator
        if den & (den - 1) == 0:  # power of two: exact
            e = -(den.bit_length() - 1)
            return cls(_round_down(num, e), _round_up(num, e))
        shift = PRECISION + abs(num.bit_length() - den.bit_length()) + 2
        lo = (num << shift) // den  # floor also for negative num
        return cls(_round_down(lo, -shift), _round_up(lo + 1, -shift))

    @classmethod
    def from_endpoints(cls, lo: Fraction, hi: Fraction) -> "DyadicInterval":
        return cls(cls.from_fraction(lo).lo, cls.from_fraction(hi).hi)

    def __add__(self, other: "DyadicInterval") -> "DyadicInterval":
        return DyadicInterval(
            _round_down(*_add(self.lo, other.lo)),
            _round_up(*_add(self.hi, other.hi)),
        )

    def add_int(self, k: int) -> "DyadicInterval":
        kb = (k, 0)
        return DyadicInterval(
            _round_down(*_add(self.lo, kb)), _round_up(*_add(self.hi, kb))
        )

    def __mul__(self, other: "DyadicInterval") -> "DyadicInterval":
        if self.lo[0] >= 0 and other.lo[0] >= 0:
            return DyadicInterval(
                _round_down(*_mul(self.lo, other.lo)),
                _round_up(*_mul(self.hi, other.hi)),
            )
        cands = [
            _mul(self.lo, other.lo),
            _mul(self.lo, other.hi),
            _mul(self.hi, other.lo),
            _mul(self.hi, other.hi),
        ]
        lo = cands[0]
        hi = cands[0]
        for c in cands[1:]:
            if bound_cmp(c, lo) < 0:
                lo = c
            if bound_cmp(c, hi) > 0:
                hi = c
        return DyadicInterval(_round_down(*lo), _round_up(*hi))

    def divide_positive(self, other: "DyadicInterval") -> "DyadicInterval":
        """Self / other for a strictly positive divisor and nonnegative self."""
        if other.lo[0] <= 0:
            raise ZeroDivisionError("divisor interval must be strictly positive")
        if self.lo[0] < 0:
            raise ValueError("dividend interval must be nonnegative")
        ml, el = self.lo
        mh, eh = self.hi
        dl, fl = other.lo
        dh, fh = other.hi
        shift = PRECISION + 2
        lo = ((ml << shift) // dh, el - fh - shift)
        hi = (-((-(mh << shift)) // dl), eh - fl - shift)  # ceil division
        return DyadicInterval(_round_down(*lo), _round_up(*hi))

    def contains_zero(self) -> bool:
        return self.lo[0] <= 0 <= self.hi[0]

    def lower_fraction(self) -> Fraction:
        return bound_fraction(self.lo)

    def upper_fraction(self) -> Fraction:
        return bound_fraction(self.hi)

    def width_fraction(self) -> Fraction:
        return self.upper_fraction() - self.lower_fraction()

    def midpoint_float(self) -> float:
        return float((self.lower_fraction() + self.upper_fraction()) / 2)

    def __repr__(self) -> str:
        return (
            f"DyadicInterval[{float(self.lower_fraction())},"
            f" {float(self.upper_fraction())}]"
        )


def interval_max(a: DyadicInterval, b: DyadicInterval) -> DyadicInterval:
    """Pointwise enclosure of max(a, b) for uncertain numbers."""
    lo = a.lo if bound_cmp(a.lo, b.lo) >= 0 else b.lo
    hi = a.hi if bound_cmp(a.hi, b.hi) >= 0 else b.hi
    return DyadicInterval(lo, hi)


def interval_min(a: DyadicInterval, b: DyadicInterval) -> DyadicInterval:
    lo = a.lo if bound_cmp(a.lo, b.lo) <= 0 else b.lo
    hi = a.hi if bound_cmp(a.hi, b.hi) <= 0 else b.hi
    return DyadicInterval(lo, hi)
