"""Degenerate Bell polynomials, univariate and bivariate."""

from __future__ import annotations

from fractions import Fraction

from .core import as_fraction, falling_lambda
from .stirling import s2_deg


def bell_deg_bivariate(n: int, x, y, lam) -> Fraction:
    """``Bel_{n,lam}(x, y) = sum_k (x)_{k,lam} y^k S_{2,lam}(n, k)``."""
    x, y, lam = as_fraction(x), as_fraction(y), as_fraction(lam)
    total = Fraction(0)
    for k in range(n + 1):
        s = s2_deg(n, k, lam)
        if s:
            total += falling_lambda(x, k, lam) * y**k * s
    return total


def bell_deg(n: int, x, lam) -> Fraction:
    """``Bel_{n,lam}(x)``; the bivariate polynomial at ``y = 1``."""
    return bell_deg_bivariate(n, x, 1, lam)
