"""Float bridges for exact rationals whose terms overflow native doubles."""

from __future__ import annotations

import math
from fractions import Fraction

_MANTISSA_BITS = 64


def log_int(n: int) -> float:
    """Natural log of a positive integer of any size."""
    if n <= 0:
        raise ValueError("log_int needs a positive integer")
    bits = n.bit_length()
    if bits <= 512:
        return math.log(n)
    shift = bits - _MANTISSA_BITS
    return math.log(n >> shift) + shift * math.log(2)


def log_abs_fraction(q: Fraction | int) -> float:
    """Natural log of |q| for a nonzero rational."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("log of zero")
    return log_int(abs(q.numerator)) - log_int(q.denominator)


def float_from_fraction(q: Fraction) -> float:
    """Nearest double, saturating to +-inf instead of raising on overflow."""
    try:
        return float(q)
    except OverflowError:
        return math.inf if q > 0 else -math.inf
