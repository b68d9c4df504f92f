"""Dense integer polynomials, coefficient lists ordered constant-first."""

from __future__ import annotations

import math
from fractions import Fraction

from .numtheory import euler_phi, factorize

# A polynomial is a list of ints [c0, c1, ...] for c0 + c1*x + ...;
# the zero polynomial is [].


def trim(f: list[int]) -> list[int]:
    n = len(f)
    while n and f[n - 1] == 0:
        n -= 1
    return f[:n]


def degree(f: list[int]) -> int:
    """Degree, with -1 for the zero polynomial."""
    return len(trim(f)) - 1


def padd(f: list[int], g: list[int]) -> list[int]:
    if len(f) < len(g):
        f, g = g, f
    out = f[:]
    for i, c in enumerate(g):
        out[i] += c
    return trim(out)


def psub(f: list[int], g: list[int]) -> list[int]:
    return padd(f, [-c for c in g])


def pscale(f: list[int], c: int) -> list[int]:
    if c == 0:
        return []
    return [c * a for a in f]


def pmul(f: list[int], g: list[int]) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim(out)


def peval_int(f: list[int], a: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = acc * a + c
    return acc


def peval_fraction(f: list[int], q: Fraction) -> Fraction:
    """Exact evaluation at a rational via integer Horner."""
    if not f:
        return Fraction(0)
    num, den = q.numerator, q.denominator
    acc = f[-1]
    dpow = 1
    for c in reversed(f[:-1]):
        dpow *= den
        acc = acc * num + c * dpow
    return Fraction(acc, dpow)


def sign_at(f: list[int], q: Fraction) -> int:
    """Sign of f(q), computed exactly."""
    if not f:
        return 0
    num, den = q.numerator, q.denominator
    acc = f[-1]
    dpow = 1
    for c in reversed(f[:-1]):
        dpow *= den
        acc = acc * num + c * dpow
    return (acc > 0) - (acc < 0)


def derivative(f: list[int]) -> list[int]:
    return [i * c for i, c in enumerate(f)][1:]


def content(f: list[int]) -> int:
    return math.gcd(*f) if f else 0


def is_primitive(f: list[int]) -> bool:
    return content(f) == 1


def pdivmod_exact(f: list[int], g: list[int]) -> tuple[list[int], list[int]]:
    """Long division f = q*g + r over Z; valid when every step divides."""
    g = trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = trim(f)[:]
    dg = len(g) - 1
    lc = g[-1]
    q = [0] * max(0, len(r) - dg)
    while len(r) - 1 >= dg and r:
        shift = len(r) - 1 - dg
        c, rem = divmod(r[-1], lc)
        if rem:
            raise ValueError("division step not exact over Z")
        q[shift] = c
        for i, b in enumerate(g):
            r[shift + i] -= c * b
        r = trim(r)
    return trim(q), r


def divides(g: list[int], f: list[int]) -> bool:
    try:
        _, r = pdivmod_exact(f, g)
    except ValueError:
        return False
    return not r


_cyclotomic_cache: dict[int, list[int]] = {}


def cyclotomic_poly(d: int) -> list[int]:
    """The d-th cyclotomic polynomial, computed by exact division."""
    if d < 1:
        raise ValueError("cyclotomic index must be >= 1")
    if d in _cyclotomic_cache:
        return _cyclotomic_cache[d]
    poly = [-1] + [0] * (d - 1) + [1]  # x^d - 1
    for e in range(1, d):
        if d % e == 0:
            poly, r = pdivmod_exact(poly, cyclotomic_poly(e))
            assert not r
    _cyclotomic_cache[d] = poly
    return poly


def has_cyclotomic_factor(f: list[int]) -> bool:
    """True when some root of f is a root of unity."""
    f = trim(f)
    d = degree(f)
    if d < 1:
        return False
    # phi(m) >= sqrt(m/2), so phi(m) <= d forces m <= 2*d^2 + 1
    for m in range(1, 2 * d * d + 2):
        if euler_phi(m) <= d and divides(cyclotomic_poly(m), f):
            return True
    return False


def bareiss_determinant(rows: list[list[int]]) -> int:
    """Exact determinant by fraction-free Gaussian elimination."""
    n = len(rows)
    if n == 0:
        return 1
    m = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def sylvester_resultant(f: list[int], g: list[int]) -> int:
    """Res(f, g) via the Sylvester matrix determinant, exact over Z."""
    f, g = trim(f), trim(g)
    if not f or not g:
        return 0
    df, dg = len(f) - 1, len(g) - 1
    if df == 0:
        return f[0] ** dg
    if dg == 0:
        return g[0] ** df
    size = df + dg
    fh = list(reversed(f))
    gh = list(reversed(g))
    rows = []
    for i in range(dg):
        rows.append([0] * i + fh + [0] * (size - df - 1 - i))
    for i in range(df):
        rows.append([0] * i + gh + [0] * (size - dg - 1 - i))
    return bareiss_determinant(rows)


def squarefree_part_check(f: list[int]) -> bool:
    """True when f has no repeated complex root (nonzero discriminant test)."""
    f = trim(f)
    if degree(f) < 2:
        return True
    return sylvester_resultant(f, derivative(f)) != 0
