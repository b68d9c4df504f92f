"""Exact p-adic numbers at finite precision and the multiply-and-truncate map.

The central object is ``QTransform``: multiplication of a p-adic integer by a
fixed rational q followed by deletion of the fractional (negative-index)
digits.  Every operation tracks how many digits remain certified and fails
loudly instead of returning digits it cannot guarantee.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import EnumerationBudgetError, PrecisionExhaustedError, UnitRootError
from .numtheory import int_valuation, is_prime

_ENUMERATION_CAP = 1 << 20  # object-level enumeration; use the residue scan beyond


def padic_valuation(x: Fraction | int, p: int) -> int | float:
    """v_p(x) for rational x, with math.inf for x = 0."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    x = Fraction(x)
    if x == 0:
        return math.inf
    return int_valuation(x.numerator, p) - int_valuation(x.denominator, p)


def _digits_of_rational(r: Fraction, p: int, start: int, count: int) -> tuple[int, ...]:
    """Base-p digits of r at indices start..start+count-1; r/p^start must be p-integral."""
    if count <= 0:
        return ()
    unit = r / Fraction(p) ** start
    num, den = unit.numerator, unit.denominator
    if den % p == 0:
        raise ValueError("rational is not p-integral at the requested start index")
    mod = p**count
    val = num * pow(den, -1, mod) % mod
    digits = []
    for _ in range(count):
        val, d = divmod(val, p)
        digits.append(d)
    return tuple(digits)


@dataclass(frozen=True)
class PAdicNumber:
    """A p-adic number known modulo p**abs_precision.

    ``digits`` are the base-p digits of the unit part, lowest first, starting
    at index ``valuation``; the leading digit is nonzero.  The zero element
    has no digits and carries only its absolute precision ("congruent to 0
    modulo p**abs_precision").
    """

    prime: int
    digits: tuple[int, ...]
    abs_precision: int
    _val: int = 0

    def __post_init__(self):
        if not is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")
        if self.digits:
            if self.digits[0] == 0:
                raise ValueError("leading digit must be nonzero")
            if any(not 0 <= d < self.prime for d in self.digits):
                raise ValueError("digit out of range")
            if self._val + len(self.digits) != self.abs_precision:
                raise ValueError("digit window inconsistent with absolute precision")

    @classmethod
    def from_rational(cls, q: Fraction | int, p: int, precision: int) -> "PAdicNumber":
        """Encode a rational with ``precision`` significant digits."""
        q = Fraction(q)
        if precision < 1:
            raise ValueError("precision must be >= 1")
        if q == 0:
            return cls(p, (), precision)
        v = padic_valuation(q, p)
        return cls(p, _digits_of_rational(q, p, v, precision), v + precision, v)

    @classmethod
    def from_rational_abs(cls, q: Fraction | int, p: int, abs_precision: int) -> "PAdicNumber":
        """Encode a rational with all digits below index ``abs_precision``."""
        q = Fraction(q)
        if q == 0:
            return cls(p, (), abs_precision)
        v = padic_valuation(q, p)
        if v >= abs_precision:
            return cls(p, (), abs_precision)
        return cls(p, _digits_of_rational(q, p, v, abs_precision - v), abs_precision, v)

    @classmethod
    def zero(cls, p: int, abs_precision: int) -> "PAdicNumber":
        return cls(p, (), abs_precision)

    @property
    def is_zero(self) -> bool:
        return not self.digits

    @property
    def valuation(self) -> int | float:
        return math.inf if self.is_zero else self._val

    @property
    def precision(self) -> int:
        """Number of certified significant digits."""
        return len(self.digits) if self.digits else self.abs_precision

    @property
    def is_integer(self) -> bool:
        return self.is_zero or self._val >= 0

    def truncated_rational(self) -> Fraction:
        """The exact rational formed by the known digits."""
        acc = Fraction(0)
        pw = Fraction(self.prime) ** self._val
        for d in self.digits:
            acc += d * pw
            pw *= self.prime
        return acc

    def digit(self, i: int) -> int:
        """Digit at index i; valid for i < abs_precision."""
        if i >= self.abs_precision:
            raise PrecisionExhaustedError(f"digit {i} beyond certified precision")
        if self.is_zero or i < self._val:
            return 0
        return self.digits[i - self._val]

    def digits_string(self) -> str:
        """Known digits, lowest index first, with the radix point marked."""
        if self.is_zero:
            return f"0 (mod {self.prime}^{self.abs_precision})"
        parts = []
        for i in range(min(self._val, 0), self.abs_precision):
            if i == 0:
                parts.append(".")
            parts.append(str(self.digit(i)))
        return "".join(parts) + f" (p={self.prime}, low digit first)"

    def __repr__(self) -> str:
        return f"PAdicNumber({self.truncated_rational()} + O({self.prime}^{self.abs_precision}))"


@dataclass(frozen=True)
class QTransform:
    """Multiply by a fixed rational q in Q_p, then drop the fractional digits."""

    prime: int
    q: Fraction
    k: int = field(init=False)

    def __post_init__(self):
        if not is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")
        object.__setattr__(self, "q", Fraction(self.q))
        v = padic_valuation(self.q, self.prime) if self.q != 0 else 0
        object.__setattr__(self, "k", max(0, -v))

    def _reject_unit_root(self):
        # over Q the only roots of unity are +-1; both are units at every p
        if self.q == 1 or self.q == -1:
            raise UnitRootError("q is a root of unity in Q_p")


def q_step_rational(T: QTransform, x: Fraction) -> tuple[Fraction, Fraction]:
    """One exact step on a rational representative: (image, discarded tail).

    The tail is the fractional p-part of q*x, a rational in [0, 1) whose
    denominator is a power of p.
    """
    y = T.q * Fraction(x)
    if y == 0:
        return Fraction(0), Fraction(0)
    j = int_valuation(y.denominator, T.prime)
    if j == 0:
        return y, Fraction(0)
    pj = T.prime**j
    d = y.denominator // pj
    tail = Fraction(y.numerator * pow(d, -1, pj) % pj, pj)
    return y - tail, tail


def q_transform_step(T: QTransform, x: PAdicNumber) -> PAdicNumber:
    """Apply the map to a p-adic integer, consuming k guard digits."""
    if T.prime != x.prime:
        raise ValueError("prime mismatch between transform and operand")
    if not x.is_integer:
        raise ValueError("operand must be a p-adic integer")
    target = x.abs_precision - T.k
    if target < 1:
        raise PrecisionExhaustedError(
            f"need at least {T.k + 1} certified digits, have {x.abs_precision}"
        )
    image, _ = q_step_rational(T, x.truncated_rational())
    return PAdicNumber.from_rational_abs(image, T.prime, target)


def q_entropy(T: QTransform) -> float:
    """log+ |q|_p, i.e. k * log p."""
    return T.k * math.log(T.prime)


def periodic_count_exact(T: QTransform, n: int) -> int:
    """Exact number of solutions of the n-fold fixed-point equation."""
    if n < 1:
        raise ValueError("period must be >= 1")
    T._reject_unit_root()
    if T.k == 0:
        return 1
    return T.prime ** (n * T.k)


def _fixed_point_for_class(T: QTransform, n: int, a: int, abs_precision: int) -> Fraction:
    """The unique fixed point of the n-fold map congruent to a mod p^{nk}.

    Solves the linear equation with digit-by-digit lifting.
    """
    p, k = T.prime, T.k
    pnk = p ** (n * k)
    b = Fraction(a)
    for _ in range(n):
        b, _ = q_step_rational(T, b)
    v = T.q**n * pnk  # a p-adic unit
    # (v - p^{nk}) * y = a - b; clear denominators, then lift digits of y
    rhs = a - b
    lhs = v - pnk
    den = math.lcm(rhs.denominator, lhs.denominator)
    A = int(rhs * den)
    C = int(lhs * den)
    if den % p == 0 or C % p == 0:
        raise ArithmeticError("linear solve lost p-adic unit structure")
    m = max(abs_precision - n * k, 1)
    pm = p**m
    c0_inv = pow(C % p, -1, p)
    y = 0
    residual = A % pm
    for j in range(m):
        pj = p**j
        digit = (residual // pj) % p * c0_inv % p
        y += digit * pj
        residual = (A - C * y) % pm
        assert residual % (pj * p) == 0
    return Fraction(a + pnk * y)


def periodic_points_enumerate(T: QTransform, n: int, precision: int) -> list[PAdicNumber]:
    """All p^{nk} fixed points of the n-fold map, one per class mod p^{nk}.

    ``precision`` is the absolute digit count of the returned points; the
    fixed-point equation is then verifiable to precision - n*k digits.
    """
    if n < 1:
        raise ValueError("period must be >= 1")
    T._reject_unit_root()
    p, k = T.prime, T.k
    if k == 0:
        raise ValueError("enumeration requires |q|_p > 1")
    if precision <= n * k:
        raise PrecisionExhaustedError("precision must exceed n*k to certify anything")
    total = p ** (n * k)
    if total > _ENUMERATION_CAP:
        raise EnumerationBudgetError(
            f"{total} points exceeds the object enumeration cap; "
            "use periodic_points_residues for bulk verification"
        )
    return [
        PAdicNumber.from_rational_abs(_fixed_point_for_class(T, n, a, precision), p, precision)
        for a in range(total)
    ]


@dataclass(frozen=True)
class FixedPointScan:
    """Bulk enumeration summary over the full quotient ring."""

    prime: int
    n: int
    count: int
    class_modulus: int
    verified_modulus: int
    all_verified: bool
    all_distinct: bool
    residues: np.ndarray


def _int64_digit_budget(p: int) -> int:
    # products of two residues below p^M must stay under 2^63
    return int(62 // (2 * math.log2(p)))


def periodic_points_residues(T: QTransform, n: int) -> FixedPointScan:
    """Vectorized enumeration of every fixed-point class, verified mod p^{M-nk}.

    Works in int64 residue arithmetic, so the certified digit count M is
    bounded by the machine word; the object API offers deeper certification
    for individual points.
    """
    if n < 1:
        raise ValueError("period must be >= 1")
    T._reject_unit_root()
    p, k = T.prime, T.k
    if k == 0:
        raise ValueError("enumeration requires |q|_p > 1")
    M = _int64_digit_budget(p)
    if M <= n * k:
        raise PrecisionExhaustedError("fixed-point classes exceed the int64 digit budget")
    pnk = p ** (n * k)
    mod = p**M
    s, t = T.q.numerator, T.q.denominator
    t_unit = t // p**k
    step_mult = s % mod * pow(t_unit, -1, mod) % mod
    pk = p**k

    a = np.arange(pnk, dtype=np.int64)
    x = a.copy()
    m_cur = mod
    for _ in range(n):
        x = (x * (step_mult % m_cur)) % m_cur // pk
        m_cur //= pk
    # m_cur = p^{M-nk}; solve (v - p^{nk}) y = a - b in the quotient
    v = pow(s, n, m_cur) * pow(t_unit, -n, m_cur) % m_cur
    inv = pow((v - pnk) % m_cur, -1, m_cur)
    y = (a % m_cur - x) % m_cur * inv % m_cur
    fixed = a + pnk * y  # below p^M; distinct classes stay intact mod p^{nk}

    z = fixed % mod
    m_check = mod
    for _ in range(n):
        z = (z * (step_mult % m_check)) % m_check // pk
        m_check //= pk
    verified = bool(np.all((z - fixed) % m_check == 0))
    distinct = bool(np.all(fixed % pnk == a))
    return FixedPointScan(
        prime=p,
        n=n,
        count=int(pnk),
        class_modulus=int(pnk),
        verified_modulus=int(m_check),
        all_verified=verified,
        all_distinct=distinct,
        residues=fixed,
    )


def preimage_ball_check(T: QTransform, m: int, extra_digits: int = 3) -> int:
    """Empirical radius r with T^{-1}(p^m Z_p) = p^{m+r} Z_p on a finite quotient.

    Scans all residues modulo p^M for M = m + k + extra_digits and reads off
    the exact preimage ball.
    """
    if m < 0:
        raise ValueError("ball index must be >= 0")
    p, k = T.prime, T.k
    M = m + k + extra_digits
    if p**M > 1 << 26:
        raise EnumerationBudgetError("quotient too large for the residue scan")
    mod = p**M
    s, t = T.q.numerator, T.q.denominator
    t_unit = t // p**k
    mult = s % mod * pow(t_unit, -1, mod) % mod
    pk = p**k

    x = np.arange(mod, dtype=np.int64)
    image = (x * mult) % mod // pk
    out_mod = mod // pk
    pm = p**m
    if pm > out_mod:
        raise PrecisionExhaustedError("not enough digits to resolve the target ball")
    mask = image % pm == 0

    vals = np.zeros(mod, dtype=np.int64)
    tmp = x.copy()
    for _ in range(M):
        div = (tmp != 0) & (tmp % p == 0)
        if not div.any():
            break
        vals[div] += 1
        tmp[div] //= p
    vmin = int(vals[mask & (x > 0)].min())
    # the preimage must be exactly the ball of radius vmin
    expected = mod // p**vmin
    if int(mask.sum()) != expected or not bool((vals[mask & (x > 0)] >= vmin).all()):
        raise ArithmeticError("preimage of the ball is not a ball on this quotient")
    return vmin - m


def orbit(T: QTransform, x0: PAdicNumber, steps: int) -> list[PAdicNumber]:
    """Forward orbit [x0, T x0, ..., T^steps x0]; raises when digits run out."""
    if steps < 0:
        raise ValueError("steps must be >= 0")
    out = [x0]
    x = x0
    for _ in range(steps):
        x = q_transform_step(T, x)
        out.append(x)
    return out


def digit_frequencies(points: list[PAdicNumber]) -> dict[int, int]:
    """Histogram of certified digits across points; diagnostic only."""
    counts: dict[int, int] = {}
    for x in points:
        if x.is_zero:
            continue
        lo = max(0, x._val)
        for i in range(lo, x.abs_precision):
            d = x.digit(i)
            counts[d] = counts.get(d, 0) + 1
    return dict(sorted(counts.items()))
