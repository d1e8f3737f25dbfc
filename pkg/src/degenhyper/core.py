"""Lambda-falling and lambda-rising factorials and lambda-binomial coefficients.

All values are exact :class:`fractions.Fraction` objects.  The classical
factorials and binomials are the ``lam = 1`` specializations; ``lam = 0`` is
accepted and gives plain powers, e.g. ``falling_lambda(x, n, 0) == x ** n``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to :class:`Fraction`.

    Floats are rejected; they would silently smuggle rounding into exact code.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational parameter")
    if isinstance(value, (int, Rational, str)):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def _check_index(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ValueError(f"index must be a non-negative int, got {n!r}")
    return n


def falling_lambda(x, n: int, lam) -> Fraction:
    """``(x)_{n,lam} = x (x - lam) ... (x - (n-1) lam)``; the empty product is 1."""
    x, lam = as_fraction(x), as_fraction(lam)
    result = Fraction(1)
    for j in range(_check_index(n)):
        result *= x - j * lam
    return result


def rising_lambda(a, n: int, lam) -> Fraction:
    """``<a>_{n,lam} = a (a + lam) ... (a + (n-1) lam)``."""
    a, lam = as_fraction(a), as_fraction(lam)
    result = Fraction(1)
    for j in range(_check_index(n)):
        result *= a + j * lam
    return result


def lambda_binomial(x, n: int, lam) -> Fraction:
    """``(x)_{n,lam} / n!``."""
    return falling_lambda(x, n, lam) / math.factorial(n)


def falling(x, n: int) -> Fraction:
    return falling_lambda(x, n, 1)


def rising(a, n: int) -> Fraction:
    return rising_lambda(a, n, 1)


def binomial(x, n: int) -> Fraction:
    return lambda_binomial(x, n, 1)


def termination_index(x, lam) -> int | None:
    """Return ``x / lam`` when it is a non-negative integer, else None.

    Past this index every lambda-binomial ``binom(x, k)_lam`` vanishes.
    """
    x, lam = as_fraction(x), as_fraction(lam)
    if lam == 0:
        return 0 if x == 0 else None
    q = x / lam
    if q.denominator == 1 and q >= 0:
        return int(q)
    return None
