"""Elliptic curves over Q in generalized Weierstrass form.

Exact rational group law, division polynomials, and the monic real division
polynomial whose roots are the x-coordinates of the order-dividing-n points
on the identity component of the real locus.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .errors import RefinementError, SingularCurveError
from .numtheory import factorize
from .polyint import degree, peval_fraction, pmul, pscale, psub, sign_at, trim
from .polyroots import (
    Interval,
    cauchy_root_bound,
    descartes_count,
    isolate_real_roots,
    refine_excluding,
    refine_root,
)
from .ratmath import log_abs_fraction

_ROOT_WIDTH = Fraction(1, 1 << 60)  # default absolute width for refined roots


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 with integer coefficients."""

    a1: int
    a2: int
    a3: int
    a4: int
    a6: int
    b2: int
    b4: int
    b6: int
    b8: int
    discriminant: int
    bad_primes: frozenset[int]

    def __repr__(self) -> str:
        return f"WeierstrassCurve({self.a1},{self.a2},{self.a3},{self.a4},{self.a6})"


def make_curve(a1: int, a2: int, a3: int, a4: int, a6: int) -> WeierstrassCurve:
    """Build a curve, deriving b-invariants, discriminant and bad primes."""
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    assert 4 * b8 == b2 * b6 - b4 * b4
    disc = -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    if disc == 0:
        raise SingularCurveError("zero discriminant")
    return WeierstrassCurve(
        a1, a2, a3, a4, a6, b2, b4, b6, b8, disc, frozenset(factorize(disc))
    )


@dataclass(frozen=True)
class CurvePoint:
    """The identity, or an affine point with exact rational coordinates."""

    x: Fraction | None = None
    y: Fraction | None = None

    @classmethod
    def identity(cls) -> "CurvePoint":
        return cls(None, None)

    @classmethod
    def affine(cls, x, y) -> "CurvePoint":
        return cls(Fraction(x), Fraction(y))

    @property
    def is_identity(self) -> bool:
        return self.x is None

    def __repr__(self) -> str:
        return "O" if self.is_identity else f"({self.x}, {self.y})"


def curve_contains(E: WeierstrassCurve, P: CurvePoint) -> bool:
    if P.is_identity:
        return True
    x, y = P.x, P.y
    return y * y + E.a1 * x * y + E.a3 * y == x**3 + E.a2 * x * x + E.a4 * x + E.a6


def point_neg(E: WeierstrassCurve, P: CurvePoint) -> CurvePoint:
    if P.is_identity:
        return P
    return CurvePoint(P.x, -P.y - E.a1 * P.x - E.a3)


def point_add(E: WeierstrassCurve, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    """Exact rational chord-and-tangent addition."""
    if P.is_identity:
        return Q
    if Q.is_identity:
        return P
    x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
    if x1 == x2 and y1 + y2 + E.a1 * x2 + E.a3 == 0:
        return CurvePoint.identity()
    if x1 == x2:
        lam = (3 * x1 * x1 + 2 * E.a2 * x1 + E.a4 - E.a1 * y1) / (
            2 * y1 + E.a1 * x1 + E.a3
        )
        nu = (-(x1**3) + E.a4 * x1 + 2 * E.a6 - E.a3 * y1) / (2 * y1 + E.a1 * x1 + E.a3)
    else:
        lam = (y2 - y1) / (x2 - x1)
        nu = (y1 * x2 - y2 * x1) / (x2 - x1)
    x3 = lam * lam + E.a1 * lam - E.a2 - x1 - x2
    y3 = -(lam + E.a1) * x3 - nu - E.a3
    return CurvePoint(x3, y3)


def point_mul(E: WeierstrassCurve, m: int, P: CurvePoint) -> CurvePoint:
    """m*P by double-and-add; negative m negates."""
    if m < 0:
        return point_mul(E, -m, point_neg(E, P))
    result = CurvePoint.identity()
    addend = P
    while m:
        if m & 1:
            result = point_add(E, result, addend)
        addend = point_add(E, addend, addend)
        m >>= 1
    return result


def two_division_poly(E: WeierstrassCurve) -> list[int]:
    """4x^3 + b2 x^2 + 2 b4 x + b6, the square of the 2-division polynomial."""
    return [E.b6, 2 * E.b4, E.b2, 4]


@functools.lru_cache(maxsize=64)
def _g_polys(E: WeierstrassCurve, n: int) -> tuple[tuple[int, ...], ...]:
    """x-parts g_1..g_n of the division polynomials (even ones divided by psi_2)."""
    f = two_division_poly(E)
    fsq = pmul(f, f)
    g: list[list[int]] = [[] for _ in range(max(n + 1, 5))]
    g[1] = [1]
    if n >= 2:
        g[2] = [1]
    if n >= 3:
        g[3] = trim([E.b8, 3 * E.b6, 3 * E.b4, E.b2, 3])
    if n >= 4:
        g[4] = trim(
            [
                E.b4 * E.b8 - E.b6 * E.b6,
                E.b2 * E.b8 - E.b4 * E.b6,
                10 * E.b8,
                10 * E.b6,
                5 * E.b4,
                E.b2,
                2,
            ]
        )
    for j in range(5, n + 1):
        m = j // 2
        if j % 2:
            t1 = pmul(g[m + 2], pmul(g[m], pmul(g[m], g[m])))
            t2 = pmul(g[m - 1], pmul(g[m + 1], pmul(g[m + 1], g[m + 1])))
            if m % 2 == 0:
                g[j] = psub(pmul(fsq, t1), t2)
            else:
                g[j] = psub(t1, pmul(fsq, t2))
        else:
            t1 = pmul(g[m + 2], pmul(g[m - 1], g[m - 1]))
            t2 = pmul(g[m - 2], pmul(g[m + 1], g[m + 1]))
            g[j] = pmul(g[m], psub(t1, t2))
    return tuple(tuple(c) for c in g[: n + 1])


@dataclass(frozen=True)
class DivisionPolynomial:
    """psi_n, stored as its x-part; even n carries the (2y + a1 x + a3) factor."""

    n: int
    g: tuple[int, ...]
    even: bool

    def x_square_coeffs(self, E: WeierstrassCurve) -> list[int]:
        """psi_n^2 as a plain polynomial in x (degree n^2 - 1, lead n^2)."""
        gg = pmul(list(self.g), list(self.g))
        if self.even:
            return pmul(two_division_poly(E), gg)
        return gg


def division_polynomial(E: WeierstrassCurve, n: int) -> DivisionPolynomial:
    """The n-th division polynomial via the standard recurrence, exact over Z."""
    if n < 1:
        raise ValueError("division polynomial index must be >= 1")
    g = _g_polys(E, n)[n]
    return DivisionPolynomial(n, g, even=n % 2 == 0)


def psi_value_table(E: WeierstrassCurve, P: CurvePoint, n_max: int) -> list[Fraction]:
    """psi_1(P)..psi_{n_max}(P) by the value recurrence; index 0 holds 0."""
    if P.is_identity:
        raise ValueError("division polynomial values need an affine point")
    x, y = P.x, P.y
    v = [Fraction(0)] * (max(n_max, 4) + 1)
    v[1] = Fraction(1)
    psi2 = 2 * y + E.a1 * x + E.a3
    if n_max >= 2:
        v[2] = psi2
    if n_max >= 3:
        v[3] = peval_fraction(list(_g_polys(E, 3)[3]), x)
    if n_max >= 4:
        v[4] = psi2 * peval_fraction(list(_g_polys(E, 4)[4]), x)
    for j in range(5, n_max + 1):
        m = j // 2
        if j % 2:
            v[j] = v[m + 2] * v[m] ** 3 - v[m - 1] * v[m + 1] ** 3
        elif psi2 == 0:
            v[j] = Fraction(0)  # 2-torsion point: every even index vanishes
        else:
            v[j] = v[m] * (v[m + 2] * v[m - 1] ** 2 - v[m - 2] * v[m + 1] ** 2) / psi2
    return v[: n_max + 1]


def evaluate_psi_at_point(E: WeierstrassCurve, n: int, P: CurvePoint) -> Fraction:
    """Exact value of psi_n at an affine point (y enters for even n)."""
    if n < 1:
        raise ValueError("division polynomial index must be >= 1")
    return psi_value_table(E, P, n)[n]


def _two_torsion_roots(E: WeierstrassCurve) -> list[Interval]:
    f = two_division_poly(E)
    return isolate_real_roots(f)


def gamma_max_interval(E: WeierstrassCurve, width: Fraction = _ROOT_WIDTH) -> Interval:
    """Isolating interval for the largest real root of 4x^3 + b2x^2 + 2b4x + b6."""
    roots = _two_torsion_roots(E)
    return refine_root(two_division_poly(E), roots[-1], width)


def identity_component_contains(E: WeierstrassCurve, x0) -> bool:
    """Is x0 the x-coordinate of a real point on the connected identity component?

    Rule: f(x0) >= 0, and when the discriminant is positive (two real
    components) additionally x0 >= gamma_max, the largest real root of f.
    """
    x0 = Fraction(x0)
    f = two_division_poly(E)
    fval = peval_fraction(f, x0)
    if fval < 0:
        return False
    if E.discriminant < 0:
        return True
    if fval == 0:
        # x0 is an exact 2-torsion root: on the component iff it is the largest
        return descartes_count(f, x0, cauchy_root_bound(f)) == 0
    # refine the gamma_max interval until x0 lies outside it, then compare
    lo, hi = gamma_max_interval(E, Fraction(1, 1 << 30))
    while lo < x0 < hi:
        lo, hi = refine_root(f, (lo, hi), (hi - lo) / 4)
    return x0 >= hi


def _identity_component_window(E: WeierstrassCurve, g: list[int]) -> Fraction:
    """A rational lower cutoff strictly between gamma_max and every kept root of g.

    Refines the gamma_max interval until g has no root at or below its upper
    end, so isolation can run on (cutoff, bound) alone.
    """
    f = two_division_poly(E)
    lo, hi = gamma_max_interval(E, Fraction(1, 1 << 20))
    while True:
        if sign_at(g, hi) != 0 and descartes_count(g, lo, hi) == 0:
            return hi
        new = refine_root(f, (lo, hi), (hi - lo) / 4)
        if new == (lo, hi):
            raise RefinementError("could not separate torsion roots near gamma_max")
        lo, hi = new


def nu_poly(E: WeierstrassCurve, n: int) -> list[tuple[Fraction, Fraction, int]]:
    """Root data (interval low, high, multiplicity) of the real division polynomial.

    The polynomial is monic of degree n-1; its roots are the x-coordinates of
    the n-1 non-identity points of order dividing n on the identity component.
    Roots are returned as refined isolating intervals with multiplicities
    (2 for a +-pair, 1 for the single 2-torsion root present at even n).
    """
    if n < 2:
        raise ValueError("real division polynomial needs n >= 2")
    rows: list[tuple[Fraction, Fraction, int]] = []
    f = two_division_poly(E)
    if n % 2 == 0:
        lo, hi = gamma_max_interval(E)
        rows.append((lo, hi, 1))
    g = list(division_polynomial(E, n).g)
    if degree(g) >= 1:
        cutoff = _identity_component_window(E, g)
        bound = cauchy_root_bound(g)
        if cutoff < bound:
            for iv in isolate_real_roots(g, lo=cutoff, hi=bound):
                a, b = refine_root(g, iv, _ROOT_WIDTH)
                rows.append((a, b, 2))
    total = sum(mult for _, _, mult in rows)
    if total != n - 1:
        raise RefinementError(
            f"identity-component multiplicity {total} != n-1 = {n - 1}"
        )
    return sorted(rows, key=lambda r: r[0])


def real_division_value(E: WeierstrassCurve, n: int, q) -> float:
    """log |nu_n(q)| as a float, from refined root intervals.

    q must not itself be a division-point x-coordinate.
    """
    q = Fraction(q)
    f = two_division_poly(E)
    g = list(division_polynomial(E, n).g)
    total = 0.0
    for lo, hi, mult in nu_poly(E, n):
        poly = f if mult == 1 else g
        lo, hi = refine_excluding(poly, (lo, hi), q)
        # keep the interval width small against the distance to q, so the
        # midpoint log is accurate in relative terms
        while lo != hi:
            gap = min(abs(q - lo), abs(q - hi))
            if hi - lo <= gap / (1 << 30):
                break
            lo, hi = refine_root(poly, (lo, hi), (hi - lo) / 2)
        mid = (lo + hi) / 2
        total += mult * log_abs_fraction(q - mid)
    return total


def x_coordinate_ratio(E: WeierstrassCurve, n: int, P: CurvePoint) -> Fraction:
    """x(nP) via the classical ratio (x psi_n^2 - psi_{n+1} psi_{n-1}) / psi_n^2."""
    v = psi_value_table(E, P, n + 1)
    psin2 = v[n] * v[n]
    if psin2 == 0:
        raise ZeroDivisionError("nP is the identity; no x-coordinate")
    return (P.x * psin2 - v[n + 1] * v[n - 1]) / psin2
