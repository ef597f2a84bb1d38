"""Graded families of monomial ideals and their sequence-limit estimators.

A graded family is a rule m -> I_m with I_p * I_q contained in I_{p+q}.
Constructors cover powers of a fixed ideal, the doubling family
(x^2, x*y^(2^m)), families cut out by rational half-plane inequalities on the
exponents, single-variable ceiling families (x^ceil(m*q)), chain families
bounded by a concave staircase of rational breakpoints, and a periodic family
whose regularity sequence oscillates between two subsequence limits.

Limit estimators never claim convergence: they report the value sequence with
inf / tail-liminf / tail-limsup and oscillation or divergence flags.  Exact
closed-form limits live in the geometry module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Callable

from .hilbert import regularity_index
from .ideals import MonomialIdeal
from .rationals import format_rational, parse_rational

__all__ = [
    "ExactShape",
    "GradedFamily",
    "LimitEstimate",
    "GradednessReport",
    "GradednessViolation",
    "make_power_family",
    "make_doubling_family",
    "make_halfplane_family",
    "make_ceiling_family",
    "make_chain_family",
    "make_oscillating_family",
    "verify_graded",
    "waldschmidt_estimate",
    "areg_estimate",
    "ri_estimate",
    "family_from_json",
    "family_to_json",
    "BUILTIN_KINDS",
]

DEFAULT_TOLERANCE = Fraction(1, 20)


@dataclass(frozen=True)
class ExactShape:
    """Closed form of the limit staircase region lim NP(I_m)/m in the exponent
    plane: the set { A*x + B*y >= C for all half-planes } in the first
    quadrant.  `vertices` is the boundary chain of extremal points, listed
    from the x-axis towards the y-axis."""

    halfplanes: tuple  # ((A, B, C), ...) with A, B >= 0 Fractions
    vertices: tuple  # ((x, y), ...) Fractions


class GradedFamily:
    """Deterministic rule m -> MonomialIdeal, memoized, with declared claims.

    `claims_borel` is re-checked on every ideal actually evaluated, so a
    family constructed with a wrong claim fails loudly.  `period`, when set,
    asks estimators to also report subsequence values along residues mod the
    period.  `exact_shape` carries the closed-form limit staircase when one
    is known.
    """

    def __init__(
        self,
        nvars: int,
        rule: Callable[[int], MonomialIdeal],
        label: str,
        claims_borel: bool = False,
        claims_lbhr: bool = True,
        period: int | None = None,
        exact_shape: ExactShape | None = None,
        json_spec: dict | None = None,
    ):
        self.nvars = nvars
        self.label = label
        self.claims_borel = claims_borel
        self.claims_lbhr = claims_lbhr
        self.period = period
        self.exact_shape = exact_shape
        self.json_spec = json_spec
        self._rule = rule
        self._cache: dict[int, MonomialIdeal] = {}

    def ideal(self, m: int) -> MonomialIdeal:
        if m < 1:
            raise ValueError("family index m must be >= 1")
        cached = self._cache.get(m)
        if cached is not None:
            return cached
        ideal = self._rule(m)
        if ideal.nvars != self.nvars:
            raise RuntimeError(
                f"{self.label}: rule({m}) lives in {ideal.nvars} variables, expected {self.nvars}"
            )
        if self.claims_borel and not ideal.is_zero and not ideal.is_borel_fixed():
            raise RuntimeError(f"{self.label}: rule({m}) is not Borel-fixed as claimed")
        self._cache[m] = ideal
        return ideal

    def __repr__(self) -> str:
        return f"GradedFamily({self.label!r}, nvars={self.nvars})"


def make_power_family(I: MonomialIdeal) -> GradedFamily:
    """Ordinary powers m -> I^m of a fixed proper nonzero ideal."""
    if not I.is_proper:
        raise ValueError("power family needs a proper nonzero ideal")
    powers = {1: I}

    def rule(m: int) -> MonomialIdeal:
        top = max(k for k in powers if k <= m)
        out = powers[top]
        for k in range(top + 1, m + 1):
            out = out.product(I)
            powers[k] = out
        return out

    return GradedFamily(
        I.nvars,
        rule,
        label=f"powers of {I}",
        claims_borel=I.is_borel_fixed(),
        json_spec={"kind": "power", "params": {"ideal": I.to_json()}},
    )


def make_doubling_family(extra_vars: int = 0) -> GradedFamily:
    """m -> (x^2, x*y^(2^m)), optionally padded by one extra variable.

    Generator degrees grow like 2^m, so no linear regularity bound exists.
    """
    if extra_vars not in (0, 1):
        raise ValueError("extra_vars must be 0 or 1")
    nv = 2 + extra_vars
    pad = (0,) * extra_vars

    def rule(m: int) -> MonomialIdeal:
        return MonomialIdeal.from_gens(nv, [(2, 0) + pad, (1, 2**m) + pad])

    return GradedFamily(
        nv,
        rule,
        label=f"doubling[{nv} vars]",
        claims_borel=True,
        claims_lbhr=False,
        json_spec={"kind": "doubling", "params": {"extra_vars": extra_vars}},
    )


def make_halfplane_family(q1, q2, degree_cap: int | None = None) -> GradedFamily:
    """m -> ideal of all x^a*y^b with a*q2 + b*q1 >= m*q1*q2, 0 < q1 <= q2.

    The generating set is the boundary staircase of the half-plane, which is
    finite and independent of any search cap; an explicit `degree_cap` is
    accepted but rejected when it would truncate the staircase.
    """
    q1, q2 = parse_rational(q1), parse_rational(q2)
    if not 0 < q1 <= q2:
        raise ValueError(f"need 0 < q1 <= q2, got q1={q1}, q2={q2}")

    def rule(m: int) -> MonomialIdeal:
        rhs = m * q1 * q2
        a_top = ceil(m * q1)
        if degree_cap is not None and degree_cap < max(a_top, ceil(m * q2)):
            raise ValueError(
                f"degree_cap={degree_cap} truncates the staircase at m={m}"
            )
        gens = []
        prev_b = None
        for a in range(a_top + 1):
            need = rhs - a * q2
            b = max(0, ceil(need / q1)) if need > 0 else 0
            if prev_b is None or b < prev_b:
                gens.append((a, b))
                prev_b = b
            if b == 0:
                break
        return MonomialIdeal.from_gens(2, gens)

    return GradedFamily(
        2,
        rule,
        label=f"halfplane(q1={q1}, q2={q2})",
        claims_borel=True,
        exact_shape=ExactShape(
            halfplanes=((q2, q1, q1 * q2),),
            vertices=((q1, Fraction(0)), (Fraction(0), q2)),
        ),
        json_spec={
            "kind": "halfplane",
            "params": {"q1": format_rational(q1), "q2": format_rational(q2)},
        },
    )


def make_ceiling_family(q) -> GradedFamily:
    """m -> (x^ceil(m*q)) in one variable, q a positive rational."""
    q = parse_rational(q)
    if q <= 0:
        raise ValueError("ceiling family needs q > 0")

    def rule(m: int) -> MonomialIdeal:
        return MonomialIdeal.from_gens(1, [(ceil(m * q),)])

    return GradedFamily(
        1,
        rule,
        label=f"ceiling(q={q})",
        claims_borel=True,
        exact_shape=ExactShape(
            halfplanes=((Fraction(1), Fraction(0), q),),
            vertices=((q, Fraction(0)),),
        ),
        json_spec={"kind": "ceiling", "params": {"q": format_rational(q)}},
    )


def _chain_halfplanes(points: list) -> list:
    out = []
    for (s0, t0), (s1, t1) in zip(points, points[1:]):
        # line through consecutive scaled breakpoints: A*a + B*b >= C
        out.append((t1 - t0, s0 - s1, s0 * t1 - s1 * t0))
    return out


def make_chain_family(breakpoints) -> GradedFamily:
    """Family whose m-th ideal consists of the lattice points on or above the
    concave chain of breakpoints scaled by m.

    Breakpoints run (s_0, 0), (s_1, t_1), ..., (0, t_n) with s strictly
    decreasing and t strictly increasing; consecutive slopes must strictly
    steepen and start at -1 or steeper, which also makes every ideal
    Borel-fixed.
    """
    pts = [(parse_rational(s), parse_rational(t)) for s, t in breakpoints]
    if len(pts) < 2:
        raise ValueError("need at least two breakpoints")
    if pts[0][1] != 0:
        raise ValueError("first breakpoint must lie on the x-axis (t_0 = 0)")
    if pts[-1][0] != 0:
        raise ValueError("last breakpoint must lie on the y-axis (s_n = 0)")
    for (s0, t0), (s1, t1) in zip(pts, pts[1:]):
        if not s1 < s0:
            raise ValueError(f"s must strictly decrease: {s0} then {s1}")
        if not t1 > t0:
            raise ValueError(f"t must strictly increase: {t0} then {t1}")
    if any(s < 0 or t < 0 for s, t in pts):
        raise ValueError("breakpoints must be non-negative")
    slopes = [(t1 - t0) / (s1 - s0) for (s0, t0), (s1, t1) in zip(pts, pts[1:])]
    if slopes[0] > -1:
        raise ValueError(
            f"first slope {slopes[0]} exceeds -1: chain must start at -1 or steeper"
        )
    for i in range(1, len(slopes)):
        if not slopes[i] < slopes[i - 1]:
            raise ValueError(
                f"slopes must strictly steepen: segment {i} has slope "
                f"{slopes[i]}, previous {slopes[i - 1]}"
            )
    halfplanes = _chain_halfplanes(pts)
    s0 = pts[0][0]

    def rule(m: int) -> MonomialIdeal:
        gens = []
        prev_b = None
        for a in range(ceil(m * s0) + 1):
            b = 0
            for A, B, C in halfplanes:
                need = m * C - a * A
                if need > 0:
                    b = max(b, ceil(need / B))
            if prev_b is None or b < prev_b:
                gens.append((a, b))
                prev_b = b
            if b == 0:
                break
        return MonomialIdeal.from_gens(2, gens)

    chain_text = ";".join(f"({format_rational(s)},{format_rational(t)})" for s, t in pts)
    return GradedFamily(
        2,
        rule,
        label=f"chain[{chain_text}]",
        claims_borel=True,
        exact_shape=ExactShape(halfplanes=tuple(halfplanes), vertices=tuple(pts)),
        json_spec={
            "kind": "chain",
            "params": {
                "breakpoints": [
                    [format_rational(s), format_rational(t)] for s, t in pts
                ]
            },
        },
    )


def make_oscillating_family(a: int, b: int, d: int) -> GradedFamily:
    """Periodic family: (x^(a*k)) at m = d(k-1)+1, else (x^(a*k+1), x^(a*k)*y^(b*k)).

    The regularity sequence reg(I_m)/m accumulates at a/d along the first
    residue and at (a+b)/d along the last, so no asymptotic regularity exists.
    """
    if not (a >= 1 and a < b and d >= 2):
        raise ValueError("need 1 <= a < b and d >= 2")

    def rule(m: int) -> MonomialIdeal:
        k = (m - 1) // d + 1
        r = m - d * (k - 1)
        if r == 1:
            return MonomialIdeal.from_gens(2, [(a * k, 0)])
        return MonomialIdeal.from_gens(2, [(a * k + 1, 0), (a * k, b * k)])

    return GradedFamily(
        2,
        rule,
        label=f"oscillating(a={a}, b={b}, d={d})",
        claims_borel=True,
        period=d,
        json_spec={"kind": "oscillating", "params": {"a": a, "b": b, "d": d}},
    )


@dataclass(frozen=True)
class GradednessViolation:
    p: int
    q: int
    witness: tuple  # exponent of a product generator missing from I_{p+q}


@dataclass(frozen=True)
class GradednessReport:
    max_m: int
    checked_pairs: int
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_graded(family: GradedFamily, max_m: int) -> GradednessReport:
    """Check I_p * I_q <= I_{p+q} for every p <= q with p + q <= max_m."""
    if max_m < 2:
        raise ValueError("max_m must be at least 2")
    violations = []
    checked = 0
    for p in range(1, max_m // 2 + 1):
        for q in range(p, max_m - p + 1):
            product = family.ideal(p).product(family.ideal(q))
            target = family.ideal(p + q)
            checked += 1
            for g in product.gens:
                if not target.contains(g):
                    violations.append(GradednessViolation(p, q, g))
                    break
    return GradednessReport(max_m, checked, tuple(violations))


@dataclass(frozen=True)
class LimitEstimate:
    """Sequence data for v_m/m limits; no convergence is asserted.

    liminf/limsup are taken over the tail half m > M//2; `oscillating` means
    their gap exceeds the tolerance while the tail is not monotonically
    drifting upwards, which is flagged as `diverging` instead.
    """

    values: tuple  # ((m, Fraction), ...)
    inf_value: Fraction
    liminf: Fraction
    limsup: Fraction
    oscillating: bool
    diverging: bool
    tolerance: Fraction
    residue_values: tuple | None = None  # ((residue, tail value), ...)


def _estimate_from_values(values, tolerance, period) -> LimitEstimate:
    tolerance = Fraction(tolerance)
    max_m = values[-1][0]
    tail = [v for m, v in values if m > max_m // 2]
    liminf, limsup = min(tail), max(tail)
    increasing = all(x < y for x, y in zip(tail, tail[1:]))
    diverging = increasing and (tail[-1] - tail[0]) > tolerance
    oscillating = (not diverging) and (limsup - liminf) > tolerance
    residues = None
    if period:
        by_res: dict[int, Fraction] = {}
        for m, v in values:
            if m > max_m // 2:
                by_res[m % period] = v
        residues = tuple(sorted(by_res.items()))
    return LimitEstimate(
        values=tuple(values),
        inf_value=min(v for _, v in values),
        liminf=liminf,
        limsup=limsup,
        oscillating=oscillating,
        diverging=diverging,
        tolerance=tolerance,
        residue_values=residues,
    )


def waldschmidt_estimate(family: GradedFamily, max_m: int) -> LimitEstimate:
    """Sequence alpha(I_m)/m.  Subadditivity makes the limit equal the inf
    over all m, so `inf_value` over a prefix is an exact upper bound."""
    if max_m < 1:
        raise ValueError("max_m must be >= 1")
    values = []
    for m in range(1, max_m + 1):
        ideal = family.ideal(m)
        if ideal.is_zero:
            raise ValueError(f"{family.label}: rule({m}) is the zero ideal")
        values.append((m, Fraction(ideal.alpha(), m)))
    return _estimate_from_values(values, DEFAULT_TOLERANCE, family.period)


def areg_estimate(
    family: GradedFamily, max_m: int, tolerance=DEFAULT_TOLERANCE
) -> LimitEstimate:
    """Sequence reg(I_m)/m for Borel-fixed families (max generator degree)."""
    if not family.claims_borel:
        raise ValueError("asymptotic regularity estimate needs a Borel-fixed family")
    values = [
        (m, Fraction(family.ideal(m).max_generator_degree(), m))
        for m in range(1, max_m + 1)
    ]
    return _estimate_from_values(values, tolerance, family.period)


def ri_estimate(
    family: GradedFamily, max_m: int, tolerance=DEFAULT_TOLERANCE
) -> LimitEstimate:
    """Sequence ri(I_m)/m via the Hilbert-polynomial regularity index."""
    values = [
        (m, Fraction(regularity_index(family.ideal(m)), m))
        for m in range(1, max_m + 1)
    ]
    return _estimate_from_values(values, tolerance, family.period)


def _build_power(params: dict) -> GradedFamily:
    return make_power_family(MonomialIdeal.from_json(params["ideal"]))


def _build_doubling(params: dict) -> GradedFamily:
    return make_doubling_family(int(params.get("extra_vars", 0)))


def _build_halfplane(params: dict) -> GradedFamily:
    cap = params.get("degree_cap")
    return make_halfplane_family(
        params["q1"], params["q2"], None if cap is None else int(cap)
    )


def _build_ceiling(params: dict) -> GradedFamily:
    return make_ceiling_family(params["q"])


def _build_chain(params: dict) -> GradedFamily:
    return make_chain_family([tuple(p) for p in params["breakpoints"]])


def _build_oscillating(params: dict) -> GradedFamily:
    return make_oscillating_family(
        int(params["a"]), int(params["b"]), int(params["d"])
    )


_BUILDERS = {
    "power": _build_power,
    "doubling": _build_doubling,
    "halfplane": _build_halfplane,
    "ceiling": _build_ceiling,
    "chain": _build_chain,
    "oscillating": _build_oscillating,
}

BUILTIN_KINDS = tuple(sorted(_BUILDERS))


def family_from_json(obj: dict) -> GradedFamily:
    if "kind" not in obj:
        raise ValueError("family JSON needs a 'kind' field")
    kind = obj["kind"]
    builder = _BUILDERS.get(kind)
    if builder is None:
        raise ValueError(f"unknown family kind {kind!r}; known: {BUILTIN_KINDS}")
    params = obj.get("params", {})
    if not isinstance(params, dict):
        raise ValueError("family 'params' must be an object")
    try:
        return builder(params)
    except KeyError as exc:
        raise ValueError(f"family kind {kind!r} missing parameter {exc}") from None


def family_to_json(family: GradedFamily) -> dict:
    if family.json_spec is None:
        raise ValueError(f"{family.label} has no JSON form")
    return family.json_spec
