"""Exact rational scalars.

Every coefficient in the package is a ``gmpy2.mpq``: always reduced, with a
positive denominator, and compatible with ``int`` and ``fractions.Fraction``
in arithmetic and comparisons.
"""

import re
from fractions import Fraction
from math import factorial

from gmpy2 import mpq, mpz

Rational = type(mpq(0))
_MPZ = type(mpz(0))

ZERO = mpq(0)
ONE = mpq(1)

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def rational(value, denominator=None):
    """Convert ``value`` (optionally divided by ``denominator``) to an exact rational.

    Accepts ints, ``Fraction``, ``mpq`` and strings of the form ``"p"`` or
    ``"p/q"``. Floats are rejected because their binary expansion is almost
    never what the caller meant.
    """
    if denominator is not None:
        den = rational(denominator)
        if not den:
            raise ZeroDivisionError("zero denominator")
        return rational(value) / den
    if isinstance(value, Rational):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, _MPZ)):
        return mpq(value)
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        m = _RATIONAL_RE.match(value)
        if not m:
            raise ValueError(f"not a rational literal: {value!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise ValueError(f"zero denominator in {value!r}")
        return mpq(num, den)
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def format_rational(q):
    return str(rational(q))


def inverse_factorial(k):
    return mpq(1, factorial(k))


def falling(m, k):
    """m (m-1) ... (m-k+1) as an int."""
    out = 1
    for i in range(k):
        out *= m - i
    return out
