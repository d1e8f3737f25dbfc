"""Exact truncated power series and the generating-function oracle.

A :class:`TruncatedSeries` holds ``c_0 .. c_N`` for ``sum c_i t**i + O(t**(N+1))``.
Every number family defined through an exponential generating function can be
rebuilt here from its defining function and read off with
:func:`egf_coefficient`.  None of this code calls the closed forms in the
other modules, which is what makes it usable as an oracle for them.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .core import as_fraction, falling_lambda, rising_lambda, termination_index
from .errors import NonTerminating, NonzeroInnerConstant, OrderExceeded

DEFAULT_ORDER = 16


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series needs at least c_0")
        object.__setattr__(self, "coeffs", tuple(as_fraction(c) for c in self.coeffs))

    @classmethod
    def of(cls, *coeffs) -> TruncatedSeries:
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, c, order: int) -> TruncatedSeries:
        return cls((as_fraction(c),) + (Fraction(0),) * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def truncate(self, order: int) -> TruncatedSeries:
        return TruncatedSeries(self.coeffs[: order + 1])

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(other, self.order)
        n = min(self.order, other.order)
        return TruncatedSeries(tuple(self[i] + other[i] for i in range(n + 1)))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for i in range(n + 1):
            out.append(sum((a[j] * b[i - j] for j in range(i + 1) if a[j] and b[i - j]), Fraction(0)))
        return TruncatedSeries(tuple(out))

    __rmul__ = __mul__

    def scale(self, c) -> TruncatedSeries:
        c = as_fraction(c)
        return TruncatedSeries(tuple(c * x for x in self.coeffs))

    def __pow__(self, k: int) -> TruncatedSeries:
        return pow_int(self, k)


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a - b


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def scale(a: TruncatedSeries, c) -> TruncatedSeries:
    return a.scale(c)


def pow_int(a: TruncatedSeries, k: int) -> TruncatedSeries:
    if k < 0:
        raise ValueError("pow_int needs a non-negative exponent")
    result = TruncatedSeries.constant(1, a.order)
    base = a
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """``outer(inner(t))`` to the order of ``outer``; requires ``inner[0] == 0``.

    A shorter ``inner`` is read as a polynomial (zero-padded), so substituting
    ``2t`` into ``1 + t^2`` keeps the ``4t^2`` term.
    """
    if inner[0] != 0:
        raise NonzeroInnerConstant(f"inner constant term is {inner[0]}, must be 0")
    n = outer.order
    inner = TruncatedSeries(tuple(inner[i] if i <= inner.order else Fraction(0) for i in range(n + 1)))
    result = TruncatedSeries.constant(outer[n], n)
    for i in range(n - 1, -1, -1):
        result = result * inner + outer[i]
    return result


def egf_coefficient(s: TruncatedSeries, n: int) -> Fraction:
    """``n! * c_n``, the n-th term of the sequence whose EGF is ``s``."""
    if n > s.order:
        raise OrderExceeded(f"coefficient {n} requested from a series of order {s.order}")
    return math.factorial(n) * s[n]


def deg_exp_series(x, lam, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``e_lam^x(t) = (1 + lam t)^(x/lam)``, coefficients ``(x)_{i,lam} / i!``."""
    return TruncatedSeries(
        tuple(falling_lambda(x, i, lam) / math.factorial(i) for i in range(order + 1))
    )


def exp_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    return TruncatedSeries(tuple(Fraction(1, math.factorial(i)) for i in range(order + 1)))


def deg_log_series(lam, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``((1 + t)^lam - 1) / lam``, the compositional inverse of ``e_lam(t) - 1``.

    Coefficient ``j >= 1`` is ``(lam - 1)(lam - 2)...(lam - j + 1) / j!``, a
    polynomial in ``lam``, so ``lam = 0`` gives ``log(1 + t)`` with no special case.
    """
    lam = as_fraction(lam)
    coeffs = [Fraction(0)]
    for j in range(1, order + 1):
        coeffs.append(falling_lambda(lam - 1, j - 1, 1) / math.factorial(j))
    return TruncatedSeries(tuple(coeffs))


def hyper_of_series(upper, lower, lam, argument: TruncatedSeries) -> TruncatedSeries:
    """Terminating ``sum_k prod<a_i>_{k,lam} / prod<b_j>_{k,lam} * u^k / k!`` at ``u = argument``.

    The argument may have a nonzero constant term, so the sum must stop: some
    upper parameter has to satisfy ``-a / lam in N0``.
    """
    lam = as_fraction(lam)
    stops = [termination_index(-as_fraction(a), lam) for a in upper]
    stops = [s for s in stops if s is not None]
    if not stops:
        raise NonTerminating("no upper parameter terminates the series")
    last = min(stops)
    order = argument.order
    total = TruncatedSeries.constant(0, order)
    power = TruncatedSeries.constant(1, order)
    for k in range(last + 1):
        num = Fraction(1)
        for a in upper:
            num *= rising_lambda(a, k, lam)
        den = Fraction(math.factorial(k))
        for b in lower:
            den *= rising_lambda(b, k, lam)
        if den == 0:
            raise NonTerminating(f"lower parameter vanishes at k={k}")
        total = total + power.scale(num / den)
        power = power * argument
    return total


class GF(enum.Enum):
    """Generating functions the oracle knows how to build."""

    S2_DEG = "eq4"          # (e_lam(t) - 1)^k / k!                      params: k, lam
    S1_DEG = "eq9"          # (((1+t)^lam - 1)/lam)^k / k!               params: k, lam
    GOLOMBEK = "eq20"       # (e_lam(t) + 1)^k                            params: k, lam
    Q2 = "eq23"             # F_lam(-n,-n; lam; lam e_lam(t))             params: n, lam
    H = "eq24"              # (1 + lam e_lam(t))^(n/lam)                  params: n, lam
    BELL = "eq28"           # e_lam^x(e_lam(t) - 1)                       params: x, lam
    BELL2 = "eq30"          # e_lam^x(y (e_lam(t) - 1))                   params: x, y, lam
    HP = "eq42"             # F_lam^(p,p-1)(-n..; lam..; (-1)^p lam^(p-1) e_lam(t))
    LAM_H = "eq48"          # F^(p,p-1)(-n..; 1..; (-1)^p e_lam(t))
    LAM_T = "eq50"          # F^(p,p-1)(-n..; 1..; (-1)^(p-1) e_lam(t))
    APOSTOL_T = "eq60"      # F^(p,p-1)(-n..; 1..; (-1)^(p-1) lam1 e_lam(t))
    APOSTOL_S2 = "eq64"     # (lam1 e^t - 1)^n / n!                       params: n, lam1
    APOSTOL_H = "eq68"      # F^(p,p-1)(-n..; 1..; (-1)^p lam1 e_lam(t))


@functools.lru_cache(maxsize=4096)
def _build(gf: GF, order: int, params: tuple) -> TruncatedSeries:
    p = dict(params)
    lam = as_fraction(p.get("lam", 1))
    if gf is GF.S2_DEG:
        k = p["k"]
        return (deg_exp_series(1, lam, order) - 1) ** k * Fraction(1, math.factorial(k))
    if gf is GF.S1_DEG:
        k = p["k"]
        return deg_log_series(lam, order) ** k * Fraction(1, math.factorial(k))
    if gf is GF.GOLOMBEK:
        return (deg_exp_series(1, lam, order) + 1) ** p["k"]
    if gf is GF.H:
        n = as_fraction(p["n"])
        power = termination_index(n, lam)
        if power is None:
            raise NonTerminating(f"n/lambda = ({n})/({lam}) is not in N0")
        return (1 + deg_exp_series(1, lam, order) * lam) ** power
    if gf is GF.BELL:
        inner = deg_exp_series(1, lam, order) - 1
        return compose(deg_exp_series(p["x"], lam, order), inner)
    if gf is GF.BELL2:
        inner = (deg_exp_series(1, lam, order) - 1) * as_fraction(p["y"])
        return compose(deg_exp_series(p["x"], lam, order), inner)
    if gf is GF.APOSTOL_S2:
        n = p["n"]
        kernel = exp_series(order) * as_fraction(p["lam1"]) - 1
        return kernel ** n * Fraction(1, math.factorial(n))

    e = deg_exp_series(1, lam, order)
    n = as_fraction(p["n"])
    if gf is GF.Q2:
        return hyper_of_series([-n, -n], [lam], lam, e * lam)
    pp = p["p"]
    upper = [-n] * pp
    if gf is GF.HP:
        if termination_index(n, lam) is None:
            raise NonTerminating(f"n/lambda = ({n})/({lam}) is not in N0")
        w = (-1) ** pp * lam ** (pp - 1)
        return hyper_of_series(upper, [lam] * (pp - 1), lam, e * w)
    lower = [Fraction(1)] * (pp - 1)
    if gf is GF.LAM_H:
        w = Fraction((-1) ** pp)
    elif gf is GF.LAM_T:
        w = Fraction((-1) ** (pp - 1))
    elif gf is GF.APOSTOL_T:
        w = (-1) ** (pp - 1) * as_fraction(p["lam1"])
    elif gf is GF.APOSTOL_H:
        w = (-1) ** pp * as_fraction(p["lam1"])
    else:  # pragma: no cover
        raise AssertionError(gf)
    return hyper_of_series(upper, lower, 1, e * w)


def gf_series(gf: GF, order: int = DEFAULT_ORDER, **params) -> TruncatedSeries:
    """Build the named generating function to the given order."""
    key = tuple(sorted((k, as_fraction(v) if not isinstance(v, int) else v) for k, v in params.items()))
    return _build(gf, order, key)


def gf_extract_family(gf: GF, index: int, **params) -> Fraction:
    """Read the ``index``-th EGF coefficient of the generating function ``gf``.

    >>> gf_extract_family(GF.S2_DEG, 2, k=1, lam=Fraction(1, 2))
    Fraction(1, 2)
    """
    order = max(DEFAULT_ORDER, index)
    return egf_coefficient(gf_series(gf, order, **params), index)
