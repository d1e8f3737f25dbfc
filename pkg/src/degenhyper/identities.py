"""Registry of executable identities and the engine that runs them.

Each :class:`IdentitySpec` binds two or more evaluation routes to a parameter
grid.  Specs flagged ``expect_fail`` encode a formula exactly as it is
commonly printed where the printed form is wrong; they are supposed to fail,
and carry the witness point where they do.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .bell import bell_deg, bell_deg_bivariate
from .core import falling, falling_lambda, lambda_binomial, termination_index
from .hypergeometric import (
    EXACT,
    NUMERIC,
    EvalMode,
    HyperParams,
    central_sum_deg,
    euler_integral_deg,
    gauss_value_deg,
    hyper_deg_general,
)
from .hypernumbers import (
    alt_power_sum,
    apostol_H,
    apostol_T,
    golombek_B_deg,
    h_bell_form,
    h_double_sum,
    h_low_closed,
    h_p_series,
    h_stirling_form,
    lambda_hyper_H,
    lambda_hyper_T,
    t1_closed,
)
from .series import GF, TruncatedSeries, egf_coefficient, gf_extract_family, pow_int
from .stirling import apostol_s2, s1_classical, s1_deg, s2_classical, s2_deg

F = Fraction
Point = dict


@dataclass(frozen=True)
class ExactEqual:
    def __str__(self):
        return "exact"


@dataclass(frozen=True)
class RelTol:
    tol: float

    def __str__(self):
        return f"reltol({self.tol:g})"


@dataclass
class IdentitySpec:
    id: str
    description: str
    sides: Sequence[Callable[[Point], object]]
    grid: list[Point]
    comparison: ExactEqual | RelTol = field(default_factory=ExactEqual)
    erratum: str | None = None
    expect_fail: bool = False
    witness: Point | None = None

    def __post_init__(self):
        if len(self.sides) < 2:
            raise ValueError(f"{self.id}: an identity needs at least two sides")
        if not self.grid:
            raise ValueError(f"{self.id}: empty grid")


@dataclass
class Failure:
    point: Point
    values: list
    residual: object = None
    error: str | None = None


@dataclass
class IdentityReport:
    id: str
    points_checked: int
    failures: list[Failure]
    max_residual: float
    exact: bool
    erratum: str | None = None
    expect_fail: bool = False

    @property
    def status(self) -> str:
        return "FAIL" if self.failures else "PASS"

    @property
    def as_expected(self) -> bool:
        return bool(self.failures) == self.expect_fail

    @property
    def label(self) -> str:
        if self.expect_fail:
            return "FAIL-EXPECTED" if self.failures else "PASS-UNEXPECTED"
        return self.status

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "status": self.status,
            "expected": "FAIL" if self.expect_fail else "PASS",
            "erratum": self.erratum,
            "points_checked": self.points_checked,
            "max_residual": self.max_residual,
            "exact": self.exact,
            "failures": [
                {
                    "point": {k: str(v) for k, v in f.point.items()},
                    "values": [_show(v) for v in f.values],
                    "residual": None if f.residual is None else _show(f.residual),
                    "error": f.error,
                }
                for f in self.failures
            ],
        }


def _show(v) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _point_key(point: Point):
    return tuple((k, F(v) if not isinstance(v, float) else v) for k, v in point.items())


def run_identity(spec: IdentitySpec) -> IdentityReport:
    """Evaluate every side at every grid point; evaluation errors become failures."""
    failures: list[Failure] = []
    exact = isinstance(spec.comparison, ExactEqual)
    worst = 0.0
    for point in sorted(spec.grid, key=_point_key):
        try:
            values = [side(point) for side in spec.sides]
        except Exception as exc:  # noqa: BLE001 - reported per point
            failures.append(Failure(point, [], error=f"{type(exc).__name__}: {exc}"))
            continue
        ref = values[0]
        if exact:
            residual = max(abs(F(v) - F(ref)) for v in values[1:]) if all(
                not isinstance(v, float) for v in values
            ) else None
            if residual is None:
                failures.append(Failure(point, values, error="float value under exact comparison"))
                continue
            worst = max(worst, float(residual))
            if residual:
                failures.append(Failure(point, values, residual))
        else:
            scale = abs(float(ref)) or 1.0
            residual = max(abs(float(v) - float(ref)) for v in values[1:]) / scale
            worst = max(worst, residual)
            if not residual < spec.comparison.tol:
                failures.append(Failure(point, values, residual))
    return IdentityReport(
        spec.id, len(spec.grid), failures, worst, exact, spec.erratum, spec.expect_fail
    )


def reports_to_json(reports: Sequence[IdentityReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True)


# ---------------------------------------------------------------- grids

LAMS = (F(0), F(1, 3), F(1, 2), F(2, 3), F(1), F(3, 2))
LAM1S = (F(1, 2), F(1), F(2))


def grid(where=None, **axes) -> list[Point]:
    names = list(axes)
    points = [dict(zip(names, combo)) for combo in itertools.product(*axes.values())]
    return [p for p in points if where is None or where(p)]


def terminating_grid(max_n=6, max_m=6, multiples=(1, 2, 3), **extra) -> list[Point]:
    """Points with ``n/lam`` in ``{n, 2n, 3n}``, i.e. ``lam in {1, 1/2, 1/3}``."""
    lams = [F(1, q) for q in multiples]
    return grid(n=range(1, max_n + 1), lam=lams, m=range(max_m + 1), **extra)


def comb(n: int, k: int) -> int:
    return math.comb(n, k) if 0 <= k <= n else 0


def _even_sign(n: int) -> int:
    return -1 if (n // 2) % 2 else 1


# ---------------------------------------------------------------- sides that
# exist only to be compared: printed forms and classical closed forms


def h2_as_printed(n, lam) -> Fraction:
    last = termination_index(n, lam)
    return n * (n + 1 - 2 * lam) * (1 + lam) ** (last - 2)


def s1_as_printed_kernel(n: int, k: int, lam: int) -> Fraction:
    """EGF coefficient of ``((t^lam - 1)/lam)^k / k!``; only integer ``lam >= 1`` expand."""
    order = max(n, 8)
    coeffs = [F(0)] * (order + 1)
    coeffs[0] -= F(1, lam)
    if lam <= order:
        coeffs[lam] += F(1, lam)
    kernel = TruncatedSeries(tuple(coeffs))
    return egf_coefficient(pow_int(kernel, k) * F(1, math.factorial(k)), n)


def _central_mode(p: Point) -> EvalMode:
    return EXACT if termination_index(p["n"], p["lam"]) is not None else NUMERIC


# ---------------------------------------------------------------- registry


def _classical_binomial_specs() -> list[IdentitySpec]:
    ns = range(0, 11)
    return [
        IdentitySpec(
            "eq13", "sum_k C(n,k) = 2^n",
            [lambda p: sum(comb(p["n"], k) for k in range(p["n"] + 1)), lambda p: 2 ** p["n"]],
            grid(n=ns),
        ),
        IdentitySpec(
            "eq14", "sum_k (-1)^k C(n,k) = 0 for n >= 1",
            [lambda p: sum((-1) ** k * comb(p["n"], k) for k in range(p["n"] + 1)), lambda p: 0],
            grid(n=range(1, 11)),
        ),
        IdentitySpec(
            "eq15", "sum_k C(n,k)^2 = (2n)!/(n!)^2 = C(2n,n)",
            [
                lambda p: sum(comb(p["n"], k) ** 2 for k in range(p["n"] + 1)),
                lambda p: F(math.factorial(2 * p["n"]), math.factorial(p["n"]) ** 2),
                lambda p: comb(2 * p["n"], p["n"]),
            ],
            grid(n=ns),
        ),
        IdentitySpec(
            "eq16-squares", "alternating sum of squares: 0 (n odd), (-1)^(n/2) n!/((n/2)!)^2",
            [
                lambda p: sum((-1) ** k * comb(p["n"], k) ** 2 for k in range(p["n"] + 1)),
                lambda p: 0 if p["n"] % 2 else F(_even_sign(p["n"]) * math.factorial(p["n"]), math.factorial(p["n"] // 2) ** 2),
            ],
            grid(n=ns), erratum="E3",
        ),
        IdentitySpec(
            "eq16-cubes", "alternating sum of cubes: 0 (n odd), (-1)^(n/2) (3n/2)!/((n/2)!)^3",
            [
                lambda p: sum((-1) ** k * comb(p["n"], k) ** 3 for k in range(p["n"] + 1)),
                lambda p: 0 if p["n"] % 2 else F(_even_sign(p["n"]) * math.factorial(3 * p["n"] // 2), math.factorial(p["n"] // 2) ** 3),
            ],
            grid(n=ns), erratum="E3",
        ),
        IdentitySpec(
            "eq16-as-printed", "alternating sum of cubes against the squares right-hand side",
            [
                lambda p: sum((-1) ** k * comb(p["n"], k) ** 3 for k in range(p["n"] + 1)),
                lambda p: 0 if p["n"] % 2 else F(_even_sign(p["n"]) * math.factorial(p["n"]), math.factorial(p["n"] // 2) ** 2),
            ],
            grid(n=ns), erratum="E3", expect_fail=True, witness={"n": 2},
        ),
        IdentitySpec(
            "dixon-eq17", "Dixon: sum_k (-1)^k C(n+b,n+k) C(n+c,c+k) C(b+c,b+k) = (b+c+n)!/(n! b! c!)",
            [
                lambda p: sum(
                    (-1) ** abs(k) * comb(p["n"] + p["b"], p["n"] + k) * comb(p["n"] + p["c"], p["c"] + k)
                    * comb(p["b"] + p["c"], p["b"] + k)
                    for k in range(-p["n"], p["n"] + 1)
                ),
                lambda p: F(math.factorial(p["b"] + p["c"] + p["n"]),
                            math.factorial(p["n"]) * math.factorial(p["b"]) * math.factorial(p["c"])),
            ],
            grid(n=range(5), b=range(5), c=range(5)),
        ),
    ]


def _sequence_specs() -> list[IdentitySpec]:
    xs = (F(-1), F(1, 2), F(2), F(5, 3))
    return [
        IdentitySpec(
            "eq19", "lambda-Vandermonde convolution",
            [
                lambda p: lambda_binomial(p["x"] + p["y"], p["n"], p["lam"]),
                lambda p: sum(
                    (lambda_binomial(p["x"], l, p["lam"]) * lambda_binomial(p["y"], p["n"] - l, p["lam"])
                     for l in range(p["n"] + 1)), F(0)),
            ],
            grid(n=range(7), x=xs, y=xs, lam=LAMS),
        ),
        IdentitySpec(
            "eq6", "x^n = sum_l S2(n,l) (x)_l",
            [lambda p: p["x"] ** p["n"],
             lambda p: sum((s2_classical(p["n"], l) * falling(p["x"], l) for l in range(p["n"] + 1)), F(0))],
            grid(n=range(11), x=(*map(F, range(-3, 4)), F(1, 2), F(5, 7))),
        ),
        IdentitySpec(
            "eq8", "(x)_n = sum_l S1(n,l) x^l",
            [lambda p: falling(p["x"], p["n"]),
             lambda p: sum((s1_classical(p["n"], l) * p["x"] ** l for l in range(p["n"] + 1)), F(0))],
            grid(n=range(11), x=(*map(F, range(-3, 4)), F(1, 2), F(5, 7))),
        ),
        IdentitySpec(
            "eq4", "S_{2,lam}(n,k): explicit sum = EGF of (e_lam(t)-1)^k/k!",
            [lambda p: s2_deg(p["n"], p["k"], p["lam"]),
             lambda p: gf_extract_family(GF.S2_DEG, p["n"], k=p["k"], lam=p["lam"])],
            grid(n=range(13), k=range(13), lam=LAMS, where=lambda p: p["k"] <= p["n"]),
        ),
        IdentitySpec(
            "eq4-limit", "S_{2,0}(n,k) = S2(n,k)",
            [lambda p: s2_deg(p["n"], p["k"], 0), lambda p: s2_classical(p["n"], p["k"])],
            grid(n=range(13), k=range(13)),
        ),
        IdentitySpec(
            "eq9", "S_{1,lam}(n,k): recurrence = EGF of (((1+t)^lam-1)/lam)^k/k!; lam=0 gives S1",
            [lambda p: s1_deg(p["n"], p["k"], p["lam"]),
             lambda p: gf_extract_family(GF.S1_DEG, p["n"], k=p["k"], lam=p["lam"]),
             lambda p: s1_classical(p["n"], p["k"]) if p["lam"] == 0 else s1_deg(p["n"], p["k"], p["lam"])],
            grid(n=range(13), k=range(13), lam=LAMS, where=lambda p: p["k"] <= p["n"]),
            erratum="E1",
        ),
        IdentitySpec(
            "eq9-as-printed", "EGF of ((t^lam-1)/lam)^k/k! against S_{1,lam}(n,k)",
            [lambda p: s1_deg(p["n"], p["k"], p["lam"]),
             lambda p: s1_as_printed_kernel(p["n"], p["k"], p["lam"])],
            grid(n=range(6), k=range(1, 6), lam=(1, 2), where=lambda p: p["k"] <= p["n"]),
            erratum="E1", expect_fail=True, witness={"n": 1, "k": 1, "lam": 2},
        ),
        IdentitySpec(
            "eq20", "B*_lam(n,k) = EGF of (e_lam(t)+1)^k; lam=0 is Golombek's B(n,k)",
            [lambda p: golombek_B_deg(p["n"], p["k"], p["lam"]),
             lambda p: gf_extract_family(GF.GOLOMBEK, p["n"], k=p["k"], lam=p["lam"]),
             lambda p: golombek_B_deg(p["n"], p["k"], p["lam"]) if p["lam"] else
             sum((comb(p["k"], j) * F(j) ** p["n"] for j in range(1, p["k"] + 1)), F(0))],
            grid(n=range(1, 13), k=range(1, 7), lam=LAMS),
        ),
        IdentitySpec(
            "eq29", "Bel_{n,lam}(x) = EGF of e_lam^x(e_lam(t)-1)",
            [lambda p: bell_deg(p["n"], p["x"], p["lam"]),
             lambda p: gf_extract_family(GF.BELL, p["n"], x=p["x"], lam=p["lam"])],
            grid(n=range(13), x=(F(0), F(1), F(2), F(1, 2)), lam=(F(0), F(1, 3), F(1, 2), F(1))),
        ),
        IdentitySpec(
            "eq31", "Bel_{n,lam}(x,y) = EGF of e_lam^x(y(e_lam(t)-1))",
            [lambda p: bell_deg_bivariate(p["n"], p["x"], p["y"], p["lam"]),
             lambda p: gf_extract_family(GF.BELL2, p["n"], x=p["x"], y=p["y"], lam=p["lam"])],
            grid(n=range(11), x=(F(0), F(1), F(2), F(1, 2)), y=(F(0), F(1), F(2), F(1, 2), F(2, 3)),
                 lam=(F(0), F(1, 3), F(1, 2), F(1))),
        ),
        IdentitySpec(
            "eq66", "S(m,n|lam1): explicit sum = EGF of (lam1 e^t - 1)^n/n!",
            [lambda p: apostol_s2(p["m"], p["n"], p["lam1"]),
             lambda p: gf_extract_family(GF.APOSTOL_S2, p["m"], n=p["n"], lam1=p["lam1"])],
            grid(m=range(13), n=range(9), lam1=LAM1S),
        ),
    ]


def _h_specs() -> list[IdentitySpec]:
    tg = terminating_grid()

    def series(p, pp=1):
        return h_p_series(p["n"], p["m"], p.get("p", pp), p["lam"])

    return [
        IdentitySpec(
            "thm2.1", "Q_lam(m,2) = sum_k binom(n,k)_lam^2 (k)_{m,lam} = EGF of F_lam(-n,-n;lam;lam e_lam(t))",
            [lambda p: series(p, 2), lambda p: gf_extract_family(GF.Q2, p["m"], n=p["n"], lam=p["lam"])],
            tg,
        ),
        IdentitySpec(
            "thm2.2", "H_lam(n,m): series = Stirling form = Bell form = EGF of (1+lam e_lam(t))^(n/lam)",
            [series,
             lambda p: h_stirling_form(p["n"], p["m"], 1, p["lam"]),
             lambda p: h_bell_form(p["n"], p["m"], p["lam"]),
             lambda p: gf_extract_family(GF.H, p["m"], n=p["n"], lam=p["lam"])],
            terminating_grid(),
        ),
        IdentitySpec(
            "thm2.2-numeric", "Stirling form of H_lam(n,m) at non-terminating lam in (0,1), in floating point",
            [lambda p: h_p_series(p["n"], p["m"], 1, p["lam"], NUMERIC),
             lambda p: h_stirling_form(p["n"], p["m"], 1, p["lam"], NUMERIC)],
            grid(n=range(1, 5), m=range(5), lam=(F(2, 3), F(3, 4), F(2, 5))),
            RelTol(1e-9),
        ),
        IdentitySpec(
            "cor2.3", "H_lam(n,m) = (1+lam)^(n/lam) Bel_{m,lam}(n, 1/(1+lam))",
            [series, lambda p: h_bell_form(p["n"], p["m"], p["lam"])],
            tg,
        ),
        IdentitySpec(
            "eq33", "H_lam(n,1) = n (1+lam)^(n/lam - 1)",
            [lambda p: h_p_series(p["n"], 1, 1, p["lam"]), lambda p: h_low_closed(p["n"], 1, p["lam"])],
            terminating_grid(max_m=0),
        ),
        IdentitySpec(
            "eq35", "H_lam(n,2) = n (n+1-lam-lam^2) (1+lam)^(n/lam - 2)",
            [lambda p: h_p_series(p["n"], 2, 1, p["lam"]), lambda p: h_low_closed(p["n"], 2, p["lam"])],
            terminating_grid(max_m=0), erratum="E2",
        ),
        IdentitySpec(
            "eq35-as-printed", "H_lam(n,2) against n (n+1-2 lam) (1+lam)^(n/lam - 2)",
            [lambda p: h2_as_printed(p["n"], p["lam"]), lambda p: h_p_series(p["n"], 2, 1, p["lam"])],
            terminating_grid(max_m=0), erratum="E2", expect_fail=True, witness={"n": 1, "lam": F(1, 2)},
        ),
        IdentitySpec(
            "h3-closed", "three-term closed form of H_lam(n,3)",
            [lambda p: h_p_series(p["n"], 3, 1, p["lam"]), lambda p: h_low_closed(p["n"], 3, p["lam"])],
            terminating_grid(max_m=0),
        ),
        IdentitySpec(
            "h3-lambda1", "H_1(n,3) = (n)_3 2^(n-3)",
            [lambda p: h_p_series(p["n"], 3, 1, 1), lambda p: falling(p["n"], 3) * F(2) ** (p["n"] - 3)],
            grid(n=range(1, 9)),
        ),
        IdentitySpec(
            "lim-lambda0-H", "H_lam(n,m) at lam=1e-3 against e^n sum_k n^k S2(m,k)",
            [lambda p: h_p_series(p["n"], p["m"], 1, F(1, 1000), NUMERIC),
             lambda p: math.exp(p["n"]) * sum(p["n"] ** k * float(s2_classical(p["m"], k)) for k in range(p["m"] + 1))],
            grid(n=range(1, 5), m=range(5)), RelTol(1e-2),
        ),
        IdentitySpec(
            "lim-lambda0-H3", "H_lam(n,3) at lam=1e-3 against n(n^2+3n+1) e^n",
            [lambda p: h_p_series(p["n"], 3, 1, F(1, 1000), NUMERIC),
             lambda p: p["n"] * (p["n"] ** 2 + 3 * p["n"] + 1) * math.exp(p["n"])],
            grid(n=range(1, 5)), RelTol(1e-2),
        ),
        IdentitySpec(
            "thm2.4", "sum_k lam^(-2k) binom(n,k)_lam^2 = (2 lam/n) Gamma(2n/lam)/Gamma(n/lam)^2",
            [lambda p: central_sum_deg(p["n"], p["lam"], _central_mode(p))[1],
             lambda p: central_sum_deg(p["n"], p["lam"], _central_mode(p))[0]],
            grid(n=range(1, 7), lam=(F(1, 3), F(1, 2), F(1), F(3, 2))), RelTol(1e-9),
        ),
        IdentitySpec(
            "thm2.4-lambda1", "at lam = 1 the central sum is C(2n, n)",
            [lambda p: central_sum_deg(p["n"], 1)[0], lambda p: comb(2 * p["n"], p["n"])],
            grid(n=range(1, 9)),
        ),
        IdentitySpec(
            "thm2.5", "H^(p)_lam(n,m) = sum_k binom(n,k)_lam^p (k)_{m,lam} = EGF of the order-p function",
            [series, lambda p: gf_extract_family(GF.HP, p["m"], n=p["n"], p=p["p"], lam=p["lam"])],
            terminating_grid(p=(1, 2, 3)),
        ),
        IdentitySpec(
            "thm2.5-lambda1", "H^(p)_1(n,m) = sum_k C(n,k)^p (k)_m",
            [lambda p: h_p_series(p["n"], p["m"], p["p"], 1), lambda p: lambda_hyper_H(p["n"], p["m"], p["p"], 1)],
            grid(n=range(1, 9), m=range(7), p=(1, 2, 3)),
        ),
        IdentitySpec(
            "thm2.6", "H^(p)_lam(n,m) = sum_k sum_l binom(n,k)_lam^p (k)_l S_{2,lam}(m,l)",
            [series, lambda p: h_double_sum(p["n"], p["m"], p["p"], p["lam"])],
            terminating_grid(p=(1, 2, 3)),
        ),
        IdentitySpec(
            "eq42-m0", "H^(p)_lam(n,0) = F_lam^(p,p-1)(-n..; lam..; (-1)^p lam^(p-1))",
            [lambda p: h_p_series(p["n"], 0, p["p"], p["lam"]),
             lambda p: hyper_deg_general(HyperParams(
                 (-p["n"],) * p["p"], (p["lam"],) * (p["p"] - 1), (-1) ** p["p"] * p["lam"] ** (p["p"] - 1), p["lam"]))],
            terminating_grid(max_m=0, p=(1, 2, 3)),
        ),
        IdentitySpec(
            "eq46", "sum_k (-1)^k binom(n,k)_lam^p = F_lam^(p,p-1)(-n..; lam..; (-lam)^(p-1))",
            [lambda p: alt_power_sum(p["n"], p["p"], p["lam"]),
             lambda p: hyper_deg_general(HyperParams(
                 (-p["n"],) * p["p"], (p["lam"],) * (p["p"] - 1), (-p["lam"]) ** (p["p"] - 1), p["lam"]))],
            terminating_grid(max_m=0, p=(1, 2, 3)),
        ),
        IdentitySpec(
            "eq46-lambda1", "at lam = 1 the alternating power sum is T^(p)_{0}(n)",
            [lambda p: alt_power_sum(p["n"], p["p"], 1), lambda p: lambda_hyper_T(p["n"], 0, p["p"], 1)],
            grid(n=range(1, 9), p=(1, 2, 3)),
        ),
    ]


def _hyper_function_specs() -> list[IdentitySpec]:
    def euler_point(p):
        return p["a"], p["b"], p["c"], p["z"], p["lam"]

    euler_points = [
        dict(a=a, b=b, c=c, z=z, lam=lam)
        for lam, a, b, c, z in [
            (F(1), F(-1), F(1), F(2), F(1, 3)),
            (F(1), F(-2), F(1), F(3), F(1, 2)),
            (F(1), F(-3), F(2), F(5), F(-1, 2)),
            (F(1), F(-2), F(3, 2), F(4), F(9, 10)),
            (F(1, 2), F(-1, 2), F(1), F(2), F(1, 2)),
            (F(1, 2), F(-1), F(1), F(5, 2), F(-1)),
            (F(1, 2), F(-3, 2), F(3, 2), F(3), F(1, 3)),
            (F(1, 3), F(-1), F(1, 2), F(4, 3), F(1)),
            (F(1, 3), F(-2, 3), F(2, 3), F(2), F(-3, 2)),
            (F(2), F(-4), F(2), F(6), F(1, 4)),
            (F(3, 2), F(-3), F(3), F(6), F(-1, 3)),
            (F(1), F(-4), F(7, 3), F(5), F(1)),
        ]
    ]
    gauss_points = [
        dict(a=a, b=b, c=c, lam=lam)
        for lam, a, b, c in [
            (F(1), F(-1), F(-1), F(1)),
            (F(1), F(-2), F(-2), F(1)),
            (F(1, 2), F(-1), F(-1), F(1, 2)),
            (F(1), F(-3), F(1, 2), F(5, 2)),
            (F(1, 2), F(-3, 2), F(2, 3), F(2)),
            (F(1, 3), F(-2, 3), F(1, 5), F(7, 4)),
            (F(2), F(-6), F(1), F(3)),
        ]
    ]
    return [
        IdentitySpec(
            "eq10-examples", "F(a,b;b;-1) = 2^-a for a = 1, 2, 3",
            [lambda p: hyper_deg_general(HyperParams((p["a"], p["b"]), (p["b"],), -1, 1), NUMERIC),
             lambda p: 2.0 ** -p["a"]],
            grid(a=(1, 2, 3), b=(F(1), F(2), F(5, 2))), RelTol(1e-12),
        ),
        IdentitySpec(
            "eq10-collapse", "F(a,b;b;z) = (1-z)^-a",
            [lambda p: hyper_deg_general(HyperParams((p["a"], p["b"]), (p["b"],), p["z"], 1), NUMERIC),
             lambda p: float((1 - p["z"]) ** -p["a"])],
            grid(a=(1, 2, 3), b=(F(1), F(2), F(5, 2)), z=(F(-1), F(-1, 2), F(1, 3))), RelTol(1e-12),
        ),
        IdentitySpec(
            "eq37", "Euler integral = degenerate hypergeometric series",
            [lambda p: float(hyper_deg_general(HyperParams((p["a"], p["b"]), (p["c"],), p["z"], p["lam"]))),
             lambda p: euler_integral_deg(*euler_point(p))],
            euler_points, RelTol(1e-6),
        ),
        IdentitySpec(
            "eq38", "F_lam(a,b;c;1/lam) = Gauss Gamma ratio",
            [lambda p: float(hyper_deg_general(HyperParams((p["a"], p["b"]), (p["c"],), 1 / p["lam"], p["lam"]))),
             lambda p: gauss_value_deg(p["a"], p["b"], p["c"], p["lam"])],
            gauss_points, RelTol(1e-8),
        ),
    ]


def _finite_sum_specs() -> list[IdentitySpec]:
    fin = (F(0), F(1, 3), F(1, 2), F(1), F(2))

    def delta(a, b):
        return 1 if a == b else 0

    h_examples = {
        0: lambda n, lam: F(2) ** n,
        1: lambda n, lam: n * F(2) ** (n - 1),
        2: lambda n, lam: n * (n + 1 - 2 * lam) * F(2) ** (n - 2),
        3: lambda n, lam: falling(n, 3) * F(2) ** (n - 3) + 3 * falling(n, 2) * (1 - lam) * F(2) ** (n - 2)
        + n * falling_lambda(1 - lam, 2, lam) * F(2) ** (n - 1),
    }
    t_examples = {
        0: lambda n, lam: 0,
        1: lambda n, lam: -delta(1, n),
        2: lambda n, lam: n * (n - 1) * delta(2, n) + (lam - 1) * delta(n, 1),
    }
    return [
        IdentitySpec(
            "lamH-examples", "H^(1)_{m,lam}(n) for m = 0..3",
            [lambda p: lambda_hyper_H(p["n"], p["m"], 1, p["lam"]), lambda p: h_examples[p["m"]](p["n"], p["lam"])],
            grid(n=range(1, 9), m=range(4), lam=LAMS),
        ),
        IdentitySpec(
            "lamT-examples", "T^(1)_{m,lam}(n) for m = 0..2",
            [lambda p: lambda_hyper_T(p["n"], p["m"], 1, p["lam"]), lambda p: t_examples[p["m"]](p["n"], p["lam"])],
            grid(n=range(1, 9), m=range(3), lam=LAMS),
        ),
        IdentitySpec(
            "eq49", "H^(p)_{m,lam}(n) = EGF of F^(p,p-1)(-n..;1..;(-1)^p e_lam(t))",
            [lambda p: lambda_hyper_H(p["n"], p["m"], p["p"], p["lam"]),
             lambda p: gf_extract_family(GF.LAM_H, p["m"], n=p["n"], p=p["p"], lam=p["lam"])],
            grid(n=range(1, 7), m=range(7), p=(1, 2, 3), lam=LAMS),
        ),
        IdentitySpec(
            "eq52", "T^(p)_{m,lam}(n) = EGF of F^(p,p-1)(-n..;1..;(-1)^(p-1) e_lam(t))",
            [lambda p: lambda_hyper_T(p["n"], p["m"], p["p"], p["lam"]),
             lambda p: gf_extract_family(GF.LAM_T, p["m"], n=p["n"], p=p["p"], lam=p["lam"])],
            grid(n=range(1, 7), m=range(7), p=(1, 2, 3), lam=LAMS),
        ),
        IdentitySpec(
            "thm3.1", "T^(1)_{m,lam}(n) = sum_j C(n,j)(-1)^j (j)_{m,lam} = (-1)^n n! S_{2,lam}(m,n), 0 if m < n",
            [lambda p: lambda_hyper_T(p["n"], p["m"], 1, p["lam"]),
             lambda p: sum((comb(p["n"], j) * (-1) ** j * falling_lambda(j, p["m"], p["lam"]) for j in range(p["n"] + 1)), F(0)),
             lambda p: t1_closed(p["n"], p["m"], p["lam"])],
            grid(n=range(1, 9), m=range(11), lam=fin), erratum="E5",
        ),
        IdentitySpec(
            "thm3.1-as-printed", "sum_j C(n,j)(-1)^(n-j) (j)_{m,lam} against (-1)^n n! S_{2,lam}(m,n)",
            [lambda p: sum((comb(p["n"], j) * (-1) ** (p["n"] - j) * falling_lambda(j, p["m"], p["lam"]) for j in range(p["n"] + 1)), F(0)),
             lambda p: t1_closed(p["n"], p["m"], p["lam"])],
            grid(n=range(1, 9), m=range(11), lam=fin, where=lambda p: p["m"] >= p["n"]),
            erratum="E5", expect_fail=True, witness={"n": 1, "m": 1, "lam": F(1, 2)},
        ),
        IdentitySpec(
            "cor3.2", "(1/n!) sum_j (-1)^(n-j) C(n,j) j^(n+k) = S2(n+k,n)",
            [lambda p: F(sum(comb(p["n"], j) * (-1) ** (p["n"] - j) * j ** (p["n"] + p["k"]) for j in range(p["n"] + 1)),
                         math.factorial(p["n"])),
             lambda p: s2_classical(p["n"] + p["k"], p["n"]),
             lambda p: (-1) ** p["n"] * lambda_hyper_T(p["n"], p["n"] + p["k"], 1, 0) / math.factorial(p["n"])],
            grid(n=range(1, 7), k=range(5)), erratum="E4",
        ),
        IdentitySpec(
            "cor3.2-as-printed", "(1/n!) sum_j (-1)^j C(n,j) j^(n+k) against S2(n+k,n)",
            [lambda p: F(sum(comb(p["n"], j) * (-1) ** j * j ** (p["n"] + p["k"]) for j in range(p["n"] + 1)),
                         math.factorial(p["n"])),
             lambda p: s2_classical(p["n"] + p["k"], p["n"])],
            grid(n=range(1, 7), k=range(5)), erratum="E4", expect_fail=True, witness={"n": 1, "k": 0},
        ),
        IdentitySpec(
            "eq59", "S2(n+k,n) = (1/n!) sum_j sum_l C(n,j) (j)_l (-1)^(n-j) S2(n+k,l)",
            [lambda p: s2_classical(p["n"] + p["k"], p["n"]),
             lambda p: F(sum(comb(p["n"], j) * falling(j, l) * (-1) ** (p["n"] - j) * s2_classical(p["n"] + p["k"], l)
                             for j in range(p["n"] + 1) for l in range(p["n"] + p["k"] + 1)), math.factorial(p["n"]))],
            grid(n=range(1, 7), k=range(5)),
        ),
        IdentitySpec(
            "thm3.3", "Apostol-type T: direct sum = Stirling double sum = EGF",
            [lambda p: apostol_T(p["n"], p["m"], p["lam"], p["lam1"])[0],
             lambda p: apostol_T(p["n"], p["m"], p["lam"], p["lam1"])[1],
             lambda p: gf_extract_family(GF.APOSTOL_T, p["m"], n=p["n"], p=1, lam=p["lam"], lam1=p["lam1"])],
            grid(n=range(1, 7), m=range(9), lam=(F(0), F(1, 2), F(1)), lam1=LAM1S),
        ),
        IdentitySpec(
            "eq60-lambda1", "Apostol-type T at lam1 = 1 is T^(1)_{m,lam}(n)",
            [lambda p: apostol_T(p["n"], p["m"], p["lam"], 1)[0], lambda p: lambda_hyper_T(p["n"], p["m"], 1, p["lam"])],
            grid(n=range(1, 7), m=range(9), lam=fin),
        ),
        IdentitySpec(
            "cor3.4", "at lam = 0: sum_j C(n,j) lam1^j (-1)^j j^(n+k) = (-1)^n n! S(n+k,n|lam1)",
            [lambda p: apostol_T(p["n"], p["n"] + p["k"], 0, p["lam1"])[0],
             lambda p: apostol_T(p["n"], p["n"] + p["k"], 0, p["lam1"])[1],
             lambda p: (-1) ** p["n"] * math.factorial(p["n"]) * apostol_s2(p["n"] + p["k"], p["n"], p["lam1"])],
            grid(n=range(1, 7), k=range(5), lam1=LAM1S),
        ),
        IdentitySpec(
            "eq69", "H^(p)_{m,lam}(n|lam1) = sum_k C(n,k)^p lam1^k (k)_{m,lam} = EGF",
            [lambda p: apostol_H(p["n"], p["m"], p["p"], p["lam"], p["lam1"]),
             lambda p: gf_extract_family(GF.APOSTOL_H, p["m"], n=p["n"], p=p["p"], lam=p["lam"], lam1=p["lam1"])],
            grid(n=range(1, 6), m=range(6), p=(1, 2, 3), lam=(F(0), F(1, 2), F(1)), lam1=LAM1S),
            erratum="E6",
        ),
        IdentitySpec(
            "eq68-as-printed", "Apostol-type H against sum_k C(n,k)^p lam1^p (k)_{m,lam}",
            [lambda p: apostol_H(p["n"], p["m"], p["p"], p["lam"], p["lam1"]),
             lambda p: sum((comb(p["n"], k) ** p["p"] * p["lam1"] ** p["p"] * falling_lambda(k, p["m"], p["lam"])
                            for k in range(p["n"] + 1)), F(0))],
            grid(n=range(1, 5), m=range(4), p=(1, 2), lam=(F(1, 2),), lam1=LAM1S),
            erratum="E6", expect_fail=True, witness={"n": 2, "m": 0, "p": 1, "lam": F(1, 2), "lam1": F(2)},
        ),
    ]


@lru_cache(maxsize=1)
def registry() -> dict[str, IdentitySpec]:
    specs = (
        _classical_binomial_specs()
        + _sequence_specs()
        + _h_specs()
        + _hyper_function_specs()
        + _finite_sum_specs()
    )
    out = {}
    for spec in specs:
        if spec.id in out:
            raise ValueError(f"duplicate identity id {spec.id}")
        out[spec.id] = spec
    return out


def run_all(ids: Sequence[str] | None = None) -> list[IdentityReport]:
    reg = registry()
    if ids is None:
        ids = list(reg)
    unknown = [i for i in ids if i not in reg]
    if unknown:
        raise KeyError(f"unknown identity ids: {', '.join(unknown)}")
    return [run_identity(reg[i]) for i in ids]


def classical_binomial_suite() -> list[IdentityReport]:
    return run_all(["eq13", "eq14", "eq15", "eq16-squares", "eq16-cubes", "eq16-as-printed", "dixon-eq17"])


def stirling_cross_suite() -> list[IdentityReport]:
    return run_all(["cor3.2", "cor3.2-as-printed", "eq59", "cor3.4"])
