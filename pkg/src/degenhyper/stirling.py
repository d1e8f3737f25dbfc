"""Classical, degenerate and Apostol-type Stirling numbers.

The degenerate second-kind numbers come from the explicit alternating sum
and the first-kind numbers from their three-term recurrence; neither path
touches :mod:`degenhyper.series`, which rebuilds both from generating
functions for cross-checking.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .core import as_fraction, falling_lambda


class Kind(enum.Enum):
    S1 = "S1"
    S2 = "S2"
    S1_DEG = "S1deg"
    S2_DEG = "S2deg"
    APOSTOL_S2 = "ApostolS2"


@functools.lru_cache(maxsize=None)
def _s2_rows(max_n: int) -> tuple[tuple[int, ...], ...]:
    rows = [(1,)]
    for n in range(max_n):
        prev = rows[-1] + (0,)
        rows.append(tuple((k * prev[k] if k else 0) + (prev[k - 1] if k else 0) for k in range(n + 2)))
    return tuple(rows)


def s2_classical(n: int, k: int) -> Fraction:
    """Stirling numbers of the second kind, ``x^n = sum_l S2(n, l) (x)_l``."""
    if k > n:
        return Fraction(0)
    return Fraction(_s2_rows(n)[n][k])


@functools.lru_cache(maxsize=None)
def _s1_deg_rows(max_n: int, lam: Fraction) -> tuple[tuple[Fraction, ...], ...]:
    # (x)_{n+1} = (x)_n ((x - k lam) + (k lam - n)) expanded in the (x)_{k,lam} basis
    rows = [(Fraction(1),)]
    for n in range(max_n):
        prev = rows[-1] + (Fraction(0),)
        row = []
        for k in range(n + 2):
            val = (k * lam - n) * prev[k]
            if k:
                val += prev[k - 1]
            row.append(val)
        rows.append(tuple(row))
    return tuple(rows)


def s1_deg(n: int, k: int, lam) -> Fraction:
    """Degenerate Stirling numbers of the first kind.

    These are the expansion coefficients of ``(x)_n = sum_k S1_lam(n, k) (x)_{k,lam}``,
    equivalently the EGF coefficients of ``(((1+t)^lam - 1)/lam)^k / k!``.
    ``lam = 0`` gives the signed classical numbers.
    """
    if k > n:
        return Fraction(0)
    return _s1_deg_rows(n, as_fraction(lam))[n][k]


def s1_classical(n: int, k: int) -> Fraction:
    """Signed Stirling numbers of the first kind, ``(x)_n = sum_l S1(n, l) x^l``."""
    return s1_deg(n, k, 0)


@functools.lru_cache(maxsize=None)
def _s2_deg(n: int, k: int, lam: Fraction) -> Fraction:
    total = Fraction(0)
    for j in range(k + 1):
        term = math.comb(k, j) * falling_lambda(j, n, lam)
        total += -term if (k - j) % 2 else term
    return total / math.factorial(k)


def s2_deg(n: int, k: int, lam) -> Fraction:
    """``S_{2,lam}(n, k) = (1/k!) sum_j (-1)^(k-j) C(k, j) (j)_{n,lam}``."""
    if k > n:
        return Fraction(0)
    return _s2_deg(n, k, as_fraction(lam))


@functools.lru_cache(maxsize=None)
def _apostol_s2(m: int, n: int, lam1: Fraction) -> Fraction:
    total = Fraction(0)
    for j in range(n + 1):
        term = math.comb(n, j) * lam1**j * Fraction(j) ** m
        total += -term if j % 2 else term
    return (-1) ** n * total / math.factorial(n)


def apostol_s2(m: int, n: int, lam1) -> Fraction:
    """Apostol-Stirling numbers ``S(m, n | lam1)``, EGF ``(lam1 e^t - 1)^n / n!``.

    Unlike the ordinary numbers these need not vanish for ``m < n``.
    """
    return _apostol_s2(m, n, as_fraction(lam1))


@dataclass(frozen=True)
class StirlingTable:
    """Triangular table ``entries[n][k]`` for ``0 <= k <= n <= max_n``."""

    kind: Kind
    max_n: int
    lam: Fraction | None = None
    lam1: Fraction | None = None
    entries: tuple[tuple[Fraction, ...], ...] = ()

    @classmethod
    def build(cls, kind: Kind, max_n: int, lam=None, lam1=None) -> StirlingTable:
        lam = None if lam is None else as_fraction(lam)
        lam1 = None if lam1 is None else as_fraction(lam1)
        fn = {
            Kind.S1: lambda n, k: s1_classical(n, k),
            Kind.S2: lambda n, k: s2_classical(n, k),
            Kind.S1_DEG: lambda n, k: s1_deg(n, k, lam),
            Kind.S2_DEG: lambda n, k: s2_deg(n, k, lam),
            Kind.APOSTOL_S2: lambda n, k: apostol_s2(n, k, lam1),
        }[kind]
        entries = tuple(tuple(fn(n, k) for k in range(n + 1)) for n in range(max_n + 1))
        return cls(kind, max_n, lam, lam1, entries)

    def __call__(self, n: int, k: int) -> Fraction:
        if k > n:
            if self.kind is Kind.APOSTOL_S2:
                return apostol_s2(n, k, self.lam1)
            return Fraction(0)
        return self.entries[n][k]
