"""Real-root isolation for squarefree integer polynomials.

Sign-variation (Descartes) counts on transformed polynomials isolate the
roots; plain bisection with exact rational endpoints refines them.  All
interval endpoints stay exact rationals, so results are certificates, not
floating-point estimates.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import RefinementError
from .polyint import degree, padd, pmul, sign_at, trim

Interval = tuple[Fraction, Fraction]

_MAX_SPLIT_BITS = 512  # interval narrower than 2^-512 still undecided: give up


def sign_variations(cs: list[int]) -> int:
    count = 0
    last = 0
    for c in cs:
        if c == 0:
            continue
        s = 1 if c > 0 else -1
        if last and s != last:
            count += 1
        last = s
    return count


def _taylor_shift_one(cs: list[int]) -> list[int]:
    # In-place synthetic computation of p(x+1).
    out = cs[:]
    d = len(out) - 1
    for i in range(d):
        for j in range(d - 1, i - 1, -1):
            out[j] += out[j + 1]
    return out


def _map_to_unit_interval(f: list[int], a: Fraction, b: Fraction) -> list[int]:
    # Integer polynomial with the roots of f in (a, b) moved to (0, 1).
    d = len(f) - 1
    den = math.lcm(a.denominator, b.denominator)
    A = a.numerator * (den // a.denominator)
    W = b.numerator * (den // b.denominator) - A
    lin = [A, W]
    acc = [f[d]]
    dpow = 1
    for i in range(d - 1, -1, -1):
        dpow *= den
        acc = padd(pmul(acc, lin), [f[i] * dpow])
    return acc


def descartes_count(f: list[int], a: Fraction, b: Fraction) -> int:
    """Descartes bound on the number of roots of f in the open interval (a, b).

    The bound is exact whenever it is 0 or 1.
    """
    f = trim(f)
    if degree(f) < 1:
        return 0
    h = _map_to_unit_interval(f, a, b)
    h = trim(h)
    if not h:
        return 0
    rev = list(reversed(h))
    return sign_variations(_taylor_shift_one(rev))


def cauchy_root_bound(f: list[int]) -> Fraction:
    """A power of two exceeding the absolute value of every root of f."""
    f = trim(f)
    d = degree(f)
    if d < 1:
        return Fraction(1)
    lead = abs(f[-1])
    top = max(abs(c) for c in f[:-1])
    bound = 1 + (top + lead - 1) // lead
    return Fraction(1 << bound.bit_length())


def isolate_real_roots(
    f: list[int],
    lo: Fraction | None = None,
    hi: Fraction | None = None,
) -> list[Interval]:
    """Disjoint rational intervals, each holding exactly one real root of f.

    ``f`` must be squarefree.  Intervals are open except for exact hits,
    which come back degenerate ([r, r]).  ``lo``/``hi`` restrict the search
    window; they may not themselves be roots.
    """
    f = trim(f)
    if degree(f) < 1:
        return []
    bound = cauchy_root_bound(f)
    a = -bound if lo is None else Fraction(lo)
    b = bound if hi is None else Fraction(hi)
    if a >= b:
        return []
    if sign_at(f, a) == 0 or sign_at(f, b) == 0:
        raise ValueError("search window endpoint is a root")
    found: list[Interval] = []
    stack = [(a, b)]
    while stack:
        u, v = stack.pop()
        n = descartes_count(f, u, v)
        if n == 0:
            continue
        if n == 1:
            found.append((u, v))
            continue
        if (v - u) < Fraction(1, 1 << _MAX_SPLIT_BITS):
            raise RefinementError("sign variations did not separate; repeated root?")
        m = (u + v) / 2
        if sign_at(f, m) == 0:
            found.append((m, m))
        stack.append((u, m))
        stack.append((m, v))
    found.sort(key=lambda iv: iv[0])
    return found


def refine_root(f: list[int], interval: Interval, width: Fraction) -> Interval:
    """Shrink an isolating interval below ``width`` by sign bisection."""
    a, b = interval
    if a == b:
        return interval
    sa = sign_at(f, a)
    sb = sign_at(f, b)
    if sa == 0 or sb == 0 or sa == sb:
        raise RefinementError("interval endpoints do not bracket a sign change")
    while b - a >= width:
        m = (a + b) / 2
        sm = sign_at(f, m)
        if sm == 0:
            return (m, m)
        if sm == sa:
            a = m
        else:
            b = m
    return (a, b)


def refine_excluding(f: list[int], interval: Interval, q: Fraction) -> Interval:
    """Shrink an isolating interval until the rational q lies outside it."""
    a, b = interval
    if a == b:
        if a == q:
            raise RefinementError("excluded point equals the root exactly")
        return interval
    if not (a <= q <= b):
        return interval
    if sign_at(f, q) == 0:
        raise RefinementError("excluded point is itself a root")
    sa = sign_at(f, a)
    while a <= q <= b:
        m = (a + b) / 2
        sm = sign_at(f, m)
        if sm == 0:
            # root hit exactly; q cannot equal it (checked above)
            return (m, m)
        if sm == sa:
            a = m
        else:
            b = m
    return (a, b)
