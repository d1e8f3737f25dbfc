"""Classical and degenerate generalized hypergeometric series.

``F_lam(a_1..a_p; b_1..b_q; z) = sum_k prod<a_i>_{k,lam} / prod<b_j>_{k,lam} z^k / k!``
with ``<a>_{k,lam} = a (a + lam) ... (a + (k-1) lam)``.  ``lam = 1`` is the
classical function.  Terminating series are summed exactly; everything else
goes through :class:`EvalMode` in floating point.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .core import as_fraction, rising_lambda, termination_index
from .errors import (
    DomainError,
    EndpointSingularity,
    LowerParamPole,
    NoConvergence,
    NonTerminatingExact,
    PoleOnPath,
)


class Kind(enum.Enum):
    EXACT = "exact"
    NUMERIC = "numeric"


@dataclass(frozen=True)
class EvalMode:
    kind: Kind = Kind.EXACT
    tol: float = 1e-12
    max_terms: int = 10000
    two_term_stop: bool = True

    def __post_init__(self):
        if isinstance(self.kind, str):
            object.__setattr__(self, "kind", Kind(self.kind))
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be at least 1")

    @property
    def exact(self) -> bool:
        return self.kind is Kind.EXACT


EXACT = EvalMode(Kind.EXACT)
NUMERIC = EvalMode(Kind.NUMERIC)


# Lanczos approximation, g = 7, nine coefficients; ~15 digits on [0.5, 171].
_LANCZOS_G = 7
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def gamma_real(x: float) -> float:
    """Gamma function for real ``x > 0``."""
    x = float(x)
    if not x > 0:
        raise DomainError(f"gamma_real needs x > 0, got {x}")
    if x.is_integer() and x <= 21:
        return float(math.factorial(int(x) - 1))
    scale = 1.0
    while x < 0.5:
        scale *= x
        x += 1.0
    z = x - 1.0
    acc = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        acc += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2 * math.pi) * math.exp((z + 0.5) * math.log(t) - t) * acc / scale


@dataclass(frozen=True)
class HyperParams:
    upper: tuple = ()
    lower: tuple = ()
    z: object = 0
    lam: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(as_fraction(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(as_fraction(b) for b in self.lower))
        object.__setattr__(self, "lam", as_fraction(self.lam))
        if not isinstance(self.z, float):
            object.__setattr__(self, "z", as_fraction(self.z))

    def reduced(self) -> HyperParams:
        """Cancel equal upper/lower pairs; ``<b>_k / <b>_k = 1`` term by term."""
        upper, lower = list(self.upper), list(self.lower)
        for b in list(lower):
            if b in upper:
                upper.remove(b)
                lower.remove(b)
        return HyperParams(tuple(upper), tuple(lower), self.z, self.lam)

    def termination(self) -> int | None:
        stops = [termination_index(-a, self.lam) for a in self.upper]
        stops = [s for s in stops if s is not None]
        return min(stops) if stops else None


def _check_poles(params: HyperParams, last: int | None) -> None:
    for b in params.lower:
        pole = termination_index(-b, params.lam)
        if pole is not None and (last is None or last > pole):
            raise LowerParamPole(f"<{b}>_(k,{params.lam}) vanishes at k={pole + 1}")


def _exact_terms(params: HyperParams, last: int):
    lam, z = params.lam, params.z
    for k in range(last + 1):
        num = Fraction(1)
        for a in params.upper:
            num *= rising_lambda(a, k, lam)
        if not num:
            yield Fraction(0)
            continue
        den = Fraction(math.factorial(k))
        for b in params.lower:
            den *= rising_lambda(b, k, lam)
        yield num / den * z**k


def _ratio(params: HyperParams, k: int, z: float) -> float:
    lam = params.lam
    r = z / (k + 1)
    for a in params.upper:
        r *= float(a + k * lam)
    for b in params.lower:
        r /= float(b + k * lam)
    return r


def _asymptotic_ratio(params: HyperParams):
    """Limit of |term_{k+1} / term_k| style behaviour: ('zero'|'finite'|'infinite', value)."""
    p, q = len(params.upper), len(params.lower)
    if params.lam == 0 or p <= q:
        return "zero", 0.0
    if p > q + 1:
        return "infinite", math.inf
    return "finite", float(params.lam) * float(params.z)


def _sum_direct(params: HyperParams, mode: EvalMode, decay: float | None = None) -> float:
    """Plain partial sums with the two-small-terms stop.

    ``decay`` is set on the boundary ``lam z = 1``, where terms fall off like
    ``k^(-decay)``; the remaining tail is then added from that power law.
    """
    z = float(params.z)
    term, partial = 1.0, 1.0
    terms = [1.0]
    small = 0
    for k in range(mode.max_terms):
        term *= _ratio(params, k, z)
        if not math.isfinite(term):
            raise NoConvergence("terms overflowed")
        terms.append(term)
        partial += term
        if abs(term) < mode.tol * abs(partial):
            small += 1
            if small >= (2 if mode.two_term_stop else 1):
                if decay is not None:
                    # Euler-Maclaurin on sum_{j>K} C j^-s with C K^-s = term_K
                    kk = k + 1
                    terms.append(term * (kk / (decay - 1) - 0.5 + decay / (12 * kk)))
                return math.fsum(terms)
        else:
            small = 0
    raise NoConvergence(f"no convergence within {mode.max_terms} terms")


def _sum_euler(params: HyperParams, mode: EvalMode) -> float:
    """Euler transform for an alternating series whose terms need not decay.

    With ``term_k = (-1)^k c_k`` the value is ``sum_n (-1)^n (Delta^n c)_0 / 2^(n+1)``;
    for polynomially growing ``c_k`` the differences vanish after finitely many
    steps.  This is the Abel-regular value, i.e. the analytic continuation.
    """
    exact = not isinstance(params.z, float)
    limit = min(mode.max_terms, 400)
    zero = Fraction(0) if exact else 0.0
    z = params.z if exact else float(params.z)
    c = []
    term = Fraction(1) if exact else 1.0
    total, small = zero, 0
    for n in range(limit + 1):
        c.append(term * (-1) ** n)
        ratio = z / (n + 1)
        for a in params.upper:
            ratio *= a + n * params.lam if exact else float(a + n * params.lam)
        for b in params.lower:
            ratio /= b + n * params.lam if exact else float(b + n * params.lam)
        term *= ratio
        diff = sum((math.comb(n, j) * c[j] * (-1) ** (n - j) for j in range(n + 1)), zero)
        contrib = diff * (-1) ** n / 2 ** (n + 1)
        total += contrib
        if abs(contrib) <= mode.tol * abs(total):
            small += 1
            if small >= (2 if mode.two_term_stop else 1):
                return float(total)
        else:
            small = 0
    raise NoConvergence("Euler transform did not settle")


def hyper_deg_general(params: HyperParams, mode: EvalMode = EXACT):
    """Evaluate ``F_lam``; returns a Fraction in exact mode and a float otherwise."""
    params = params.reduced()
    last = params.termination()
    _check_poles(params, last)
    if mode.exact:
        if last is None:
            raise NonTerminatingExact("no upper parameter a with -a/lambda in N0")
        if isinstance(params.z, float):
            raise NonTerminatingExact("exact evaluation needs a rational argument")
        return sum(_exact_terms(params, last), Fraction(0))
    if last is not None:
        if isinstance(params.z, float):
            z = params.z
            term, terms = 1.0, [1.0]
            for k in range(last):
                term *= _ratio(params, k, z)
                terms.append(term)
            return math.fsum(terms)
        return float(sum(_exact_terms(params, last), Fraction(0)))
    regime, limit = _asymptotic_ratio(params)
    if regime == "zero" or abs(limit) < 1:
        return _sum_direct(params, mode)
    if regime == "finite" and limit == -1:
        return _sum_euler(params, mode)
    if regime == "finite" and limit == 1:
        excess = (sum(params.lower) - sum(params.upper)) / params.lam
        if excess > 0:
            return _sum_direct(params, mode, decay=1 + float(excess))
    raise NoConvergence(f"series diverges (asymptotic term ratio {limit})")


def gauss_value_deg(a, b, c, lam) -> float:
    """Closed form of ``F_lam(a, b; c; 1/lam)`` as a ratio of Gamma values."""
    a, b, c, lam = (as_fraction(v) for v in (a, b, c, lam))
    if lam <= 0:
        raise DomainError("lambda must be positive")
    args = [c / lam, (c - a - b) / lam, (c - b) / lam, (c - a) / lam]
    if any(v <= 0 for v in args):
        raise DomainError(f"Gamma arguments must be positive, got {[str(v) for v in args]}")
    g = [gamma_real(float(v)) for v in args]
    return g[0] * g[1] / (g[2] * g[3])


@lru_cache(maxsize=None)
def _legendre_panels(nodes: int = 64, panels: int = 8):
    x, w = np.polynomial.legendre.leggauss(nodes)
    edges = np.linspace(0.0, 1.0, panels + 1)
    lo, hi = edges[:-1, None], edges[1:, None]
    t = (0.5 * (hi - lo) * x + 0.5 * (hi + lo)).ravel()
    weights = (0.5 * (hi - lo) * w).ravel()
    return t, weights


def euler_integral_deg(a, b, c, z, lam) -> float:
    """Integral representation of ``F_lam(a, b; c; z)``.

    ``Gamma(c/lam) / (Gamma(b/lam) Gamma((c-b)/lam))`` times
    ``int_0^1 t^(b/lam-1) (1-t)^((c-b)/lam-1) (1 - lam t z)^(-a/lam) dt``,
    by 64-point Gauss-Legendre on each of 8 panels.  Only integrands that are
    bounded at both endpoints are accepted.
    """
    a, b, c, lam = (as_fraction(v) for v in (a, b, c, lam))
    if lam == 0:
        raise DomainError("lambda must be nonzero")
    alpha, beta = b / lam, (c - b) / lam
    if alpha < 1 or beta < 1:
        raise EndpointSingularity(f"need b/lam >= 1 and (c-b)/lam >= 1, got {alpha}, {beta}")
    expo = -a / lam
    polynomial = expo.denominator == 1 and expo >= 0
    lz = float(lam) * float(z)
    if not polynomial and lz >= 1:
        raise PoleOnPath(f"1 - lam t z vanishes on [0, 1] (lam z = {lz})")
    t, w = _legendre_panels()
    f = t ** float(alpha - 1) * (1 - t) ** float(beta - 1) * (1 - lz * t) ** float(expo)
    norm = gamma_real(float(c / lam)) / (gamma_real(float(alpha)) * gamma_real(float(beta)))
    return norm * float(np.dot(w, f))


def central_sum_deg(n: int, lam, mode: EvalMode = EXACT):
    """Both sides of ``sum_k lam^(-2k) binom(n,k)_lam^2 = (2 lam/n) Gamma(2n/lam) / Gamma(n/lam)^2``.

    The left side is evaluated as ``F_lam(-n, -n; lam; 1/lam)``.
    """
    lam = as_fraction(lam)
    if lam <= 0:
        raise DomainError("lambda must be positive")
    if n < 1:
        raise DomainError("n must be a positive integer")
    lhs = hyper_deg_general(HyperParams((-n, -n), (lam,), 1 / lam, lam), mode)
    alpha = float(Fraction(n) / lam)
    rhs = 2 * float(lam) / n * gamma_real(2 * alpha) / gamma_real(alpha) ** 2
    return lhs, rhs
