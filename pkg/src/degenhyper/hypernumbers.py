"""Degenerate hypergeometric numbers and their relatives.

Each family is exposed through every representation available for it (the
defining series, Stirling and Bell expansions, low-order closed forms), so
that the representations can be checked against each other and against the
generating-function oracle in :mod:`degenhyper.series`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .bell import bell_deg_bivariate
from .core import as_fraction, falling, falling_lambda, lambda_binomial, termination_index
from .errors import DomainError, NoConvergence, NonRationalPower, NonTerminatingExact, UnsupportedM
from .hypergeometric import EXACT, EvalMode
from .stirling import s2_deg


def _terminating(n, lam, err=NonTerminatingExact) -> int:
    last = termination_index(n, lam)
    if last is None:
        raise err(f"n/lambda = ({as_fraction(n)})/({as_fraction(lam)}) is not a non-negative integer")
    return last


def _numeric_power_sum(n, m: int, p: int, lam: Fraction, mode: EvalMode, sign: int) -> float:
    """Float summation of ``sum_k sign^k binom(n,k)_lam^p (k)_{m,lam}``."""
    if termination_index(n, lam) is None and not 0 < lam < 1:
        raise DomainError(f"numeric mode needs 0 < lambda < 1 for a non-terminating sum, got {lam}")
    nf, lf = float(n), float(lam)
    binom, partial, small = 1.0, 0.0, 0
    terms = []
    for k in range(mode.max_terms):
        fall = 1.0
        for j in range(m):
            fall *= k - j * lf
        term = binom**p * fall * (sign**k)
        terms.append(term)
        partial += term
        if abs(term) < mode.tol * abs(partial):
            small += 1
            if small >= (2 if mode.two_term_stop else 1):
                return math.fsum(terms)
        else:
            small = 0
        binom *= (nf - k * lf) / (k + 1)
    raise NoConvergence(f"no convergence within {mode.max_terms} terms")


def _power_sum(n, m: int, p: int, lam, mode: EvalMode, sign: int):
    lam = as_fraction(lam)
    if p < 1:
        raise DomainError("order p must be at least 1")
    last = termination_index(n, lam)
    if mode.exact:
        last = _terminating(n, lam)
    elif last is None or last > 200:
        return _numeric_power_sum(n, m, p, lam, mode, sign)
    total = Fraction(0)
    for k in range(last + 1):
        term = lambda_binomial(n, k, lam) ** p * falling_lambda(k, m, lam)
        total += term * sign**k
    return total if mode.exact else float(total)


def h_p_series(n, m: int, p: int, lam, mode: EvalMode = EXACT):
    """``H^(p)_lam(n, m) = sum_{k>=0} binom(n,k)_lam^p (k)_{m,lam}``.

    ``p = 1`` is ``H_lam(n, m)`` and ``p = 2`` is ``Q_lam(m, 2)`` (which depends on
    ``n`` even though the usual symbol hides it).
    """
    return _power_sum(n, m, p, lam, mode, 1)


def q_lambda(n, m: int, lam, mode: EvalMode = EXACT):
    return h_p_series(n, m, 2, lam, mode)


def alt_power_sum(n, p: int, lam, mode: EvalMode = EXACT):
    """``sum_k (-1)^k binom(n,k)_lam^p``."""
    return _power_sum(n, 0, p, lam, mode, -1)


def h_double_sum(n, m: int, p: int, lam) -> Fraction:
    """``sum_k sum_{l<=k} binom(n,k)_lam^p (k)_l S_{2,lam}(m, l)``, exact."""
    lam = as_fraction(lam)
    last = _terminating(n, lam, NonRationalPower)
    s2 = [s2_deg(m, l, lam) for l in range(m + 1)]
    total = Fraction(0)
    for k in range(last + 1):
        b = lambda_binomial(n, k, lam) ** p
        if not b:
            continue
        inner = sum((falling(k, l) * s2[l] for l in range(min(k, m) + 1)), Fraction(0))
        total += b * inner
    return total


def h_stirling_form(n, m: int, p: int, lam, mode: EvalMode = EXACT):
    """Stirling-number representation of ``H^(p)_lam(n, m)``.

    For ``p = 1`` this is ``(1+lam)^(n/lam) sum_k (n)_{k,lam} (1+lam)^-k S_{2,lam}(m,k)``,
    which also makes sense numerically when ``n/lam`` is not an integer
    (pass a numeric mode; ``lam = 0`` then gives the ``e^n`` limit).  For
    ``p >= 2`` the double sum of :func:`h_double_sum` is used.
    """
    lam = as_fraction(lam)
    if p != 1:
        value = h_double_sum(n, m, p, lam)
        return value if mode.exact else float(value)
    if lam == -1:
        raise DomainError("lambda = -1 is excluded")
    last = termination_index(n, lam)
    if last is None and mode.exact:
        raise NonRationalPower(f"(1 + {lam})^({as_fraction(n)}/{lam}) is not rational")
    q = 1 / (1 + lam)
    inner = sum((falling_lambda(n, k, lam) * q**k * s2_deg(m, k, lam) for k in range(m + 1)), Fraction(0))
    if last is not None:
        value = (1 + lam) ** last * inner
        return value if mode.exact else float(value)
    if lam == 0:
        return math.exp(float(n)) * float(inner)
    return (1 + float(lam)) ** (float(n) / float(lam)) * float(inner)


def h_bell_form(n, m: int, lam) -> Fraction:
    """``(1+lam)^(n/lam) Bel_{m,lam}(n, 1/(1+lam))``."""
    lam = as_fraction(lam)
    if lam == -1:
        raise DomainError("lambda = -1 is excluded")
    last = _terminating(n, lam, NonRationalPower)
    return (1 + lam) ** last * bell_deg_bivariate(m, n, 1 / (1 + lam), lam)


def h_low_closed(n, m: int, lam) -> Fraction:
    """Closed forms of ``H_lam(n, m)`` for ``m = 1, 2, 3``."""
    n, lam = as_fraction(n), as_fraction(lam)
    if m not in (1, 2, 3):
        raise UnsupportedM(f"closed forms exist for m in 1..3, got {m}")
    if lam == -1:
        raise DomainError("lambda = -1 is excluded")
    last = _terminating(n, lam, NonRationalPower)
    base = 1 + lam
    if m == 1:
        return n * base ** (last - 1)
    if m == 2:
        return n * (n + 1 - lam - lam**2) * base ** (last - 2)
    return (
        falling_lambda(n, 3, lam) * base ** (last - 3)
        + 3 * (1 - lam) * falling_lambda(n, 2, lam) * base ** (last - 2)
        + (1 - lam) * (1 - 2 * lam) * n * base ** (last - 1)
    )


def _finite_sum(n: int, m: int, p: int, lam, weight) -> Fraction:
    lam = as_fraction(lam)
    total = Fraction(0)
    for k in range(n + 1):
        total += math.comb(n, k) ** p * weight(k) * falling_lambda(k, m, lam)
    return total


def lambda_hyper_H(n: int, m: int, p: int, lam) -> Fraction:
    """``H^(p)_{m,lam}(n) = sum_{k=0}^n C(n,k)^p (k)_{m,lam}``."""
    return _finite_sum(n, m, p, lam, lambda k: 1)


def lambda_hyper_T(n: int, m: int, p: int, lam) -> Fraction:
    """``T^(p)_{m,lam}(n) = sum_{k=0}^n (-1)^k C(n,k)^p (k)_{m,lam}``."""
    return _finite_sum(n, m, p, lam, lambda k: (-1) ** k)


def t1_closed(n: int, m: int, lam) -> Fraction:
    """``(-1)^n n! S_{2,lam}(m, n)``; zero when ``m < n``."""
    if m < n:
        return Fraction(0)
    return (-1) ** n * math.factorial(n) * s2_deg(m, n, lam)


def apostol_T(n: int, m: int, lam, lam1) -> tuple[Fraction, Fraction]:
    """Two evaluations of ``T^(1)_{m,lam}(n | lam1)``: the direct sum and the Stirling form."""
    lam, lam1 = as_fraction(lam), as_fraction(lam1)
    s2 = [s2_deg(m, l, lam) for l in range(m + 1)]
    direct = stirling = Fraction(0)
    for j in range(n + 1):
        w = math.comb(n, j) * (-lam1) ** j
        direct += w * falling_lambda(j, m, lam)
        stirling += w * sum((falling(j, l) * s2[l] for l in range(min(j, m) + 1)), Fraction(0))
    return direct, stirling


def apostol_H(n: int, m: int, p: int, lam, lam1) -> Fraction:
    """``H^(p)_{m,lam}(n | lam1) = sum_k C(n,k)^p lam1^k (k)_{m,lam}``."""
    lam1 = as_fraction(lam1)
    return _finite_sum(n, m, p, lam, lambda k: lam1**k)


def golombek_B_deg(n: int, k: int, lam) -> Fraction:
    """``B*_lam(n, k) = sum_{j=1}^k C(k,j) (j)_{n,lam}`` for positive ``n``, ``k``."""
    if n < 1 or k < 1:
        raise DomainError("B*_lambda(n, k) needs n >= 1 and k >= 1")
    lam = as_fraction(lam)
    return sum((math.comb(k, j) * falling_lambda(j, n, lam) for j in range(1, k + 1)), Fraction(0))


class Family(enum.Enum):
    HSERIES = "Hseries"
    HSTIRLING = "Hstirling"
    HBELL = "Hbell"
    HLOW = "Hlow"
    QP = "Qp"
    ALTPOW = "AltPow"
    LAMH = "LamH"
    LAMT = "LamT"
    T1CLOSED = "T1closed"
    APOSTOLT = "ApostolT"
    APOSTOLH = "ApostolH"
    GOLOMBEKB = "GolombekB"


@dataclass(frozen=True)
class NumberQuery:
    """One number of one family.  For ``GolombekB`` the ``m`` field carries ``k``."""

    family: Family
    n: int
    m: int = 0
    p: int = 1
    lam: Fraction = Fraction(1)
    lam1: Fraction = Fraction(1)
    mode: EvalMode = field(default=EXACT)

    def __post_init__(self):
        if isinstance(self.family, str):
            object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "lam", as_fraction(self.lam))
        object.__setattr__(self, "lam1", as_fraction(self.lam1))
        for name in ("n", "m", "p"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise DomainError(f"{name} must be a non-negative integer, got {v!r}")
        if self.p < 1:
            raise DomainError("order p must be at least 1")


def evaluate(q: NumberQuery):
    """Dispatch a query; finite families return Fractions whatever the mode."""
    f, n, m, p, lam, lam1, mode = q.family, q.n, q.m, q.p, q.lam, q.lam1, q.mode
    if f is Family.HSERIES:
        return h_p_series(n, m, p, lam, mode)
    if f is Family.QP:
        return h_p_series(n, m, 2, lam, mode)
    if f is Family.ALTPOW:
        return alt_power_sum(n, p, lam, mode)
    if f is Family.HSTIRLING:
        return h_stirling_form(n, m, p, lam, mode)
    if f is Family.HBELL:
        return h_bell_form(n, m, lam)
    if f is Family.HLOW:
        return h_low_closed(n, m, lam)
    if f is Family.LAMH:
        return lambda_hyper_H(n, m, p, lam)
    if f is Family.LAMT:
        return lambda_hyper_T(n, m, p, lam)
    if f is Family.T1CLOSED:
        return t1_closed(n, m, lam)
    if f is Family.APOSTOLT:
        return apostol_T(n, m, lam, lam1)[0]
    if f is Family.APOSTOLH:
        return apostol_H(n, m, p, lam, lam1)
    if f is Family.GOLOMBEKB:
        return golombek_B_deg(n, m, lam)
    raise AssertionError(f)  # pragma: no cover
