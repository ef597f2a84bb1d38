"""Staircase regions, exact lattice counts and volumes, and limiting shapes.

For an ideal in n+1 variables the staircase region at scale m and parameter t
lives in R^n: each minimal generator alpha contributes the truncated box
{ beta >= (alpha_0..alpha_{n-1}), sum(beta) <= m*t - alpha_n }, and the
complement region is the simplex { beta >= 0, sum(beta) <= m*t } minus that
union.  Lattice points of the complement count the quotient's monomial basis,
which is the bridge identity the test-suite leans on.

Shape computations for whole families work in the exponent plane: families in
fewer than three variables are padded so that the region drawn is the limit
of the scaled generator staircases (the picture the two-variable family
figures show); families in more than three variables are refused in exact
mode.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .ideals import MonomialIdeal

__all__ = [
    "UnsupportedDimensionError",
    "SimplexRegion",
    "StaircaseRegion",
    "ComplementRegion",
    "staircase_region",
    "gamma_region",
    "gamma_lattice_count",
    "lattice_count",
    "region_volume",
    "ShapePolygon",
    "ShapeResult",
    "AhfResult",
    "convex_hull",
    "limiting_shape",
    "gamma_limit",
    "waldschmidt_from_shape",
    "areg_from_shape",
    "ahf",
    "lift_slice",
]


class UnsupportedDimensionError(RuntimeError):
    """Raised when an exact computation is requested outside dimensions <= 2."""


@dataclass(frozen=True)
class SimplexRegion:
    """{ beta in R^dim, beta >= 0, sum(beta) <= bound }."""

    dim: int
    bound: Fraction


@dataclass(frozen=True)
class StaircaseRegion:
    """Union of truncated corner boxes inside the simplex of the same bound.

    Corners are (prefix, slack) pairs: { beta >= prefix, sum(beta) <= slack }.
    Only nonempty boxes are stored (slack >= sum(prefix)) and the corner set
    is an antichain under (prefix smaller, slack larger) domination.
    """

    dim: int
    bound: Fraction
    corners: tuple


@dataclass(frozen=True)
class ComplementRegion:
    """Simplex minus staircase; its lattice points count standard monomials."""

    staircase: StaircaseRegion


def _minimal_corners(corners: list) -> tuple:
    items = sorted(set(corners))
    keep = []
    for p, s in items:
        dominated = any(
            (q, r) != (p, s) and r >= s and all(a <= b for a, b in zip(q, p))
            for q, r in items
        )
        if not dominated:
            keep.append((p, s))
    return tuple(keep)


def staircase_region(I: MonomialIdeal, m: int, t) -> StaircaseRegion:
    """Scaled staircase of I: generator boxes clipped by per-generator slack."""
    if m < 1:
        raise ValueError("m must be >= 1")
    t = Fraction(t)
    if t < 0:
        raise ValueError("t must be >= 0")
    bound = m * t
    corners = []
    for g in I.gens:
        prefix, last = g[:-1], g[-1]
        slack = bound - last
        if slack >= sum(prefix):  # box nonempty
            corners.append((prefix, slack))
    return StaircaseRegion(I.nvars - 1, bound, _minimal_corners(corners))


def gamma_region(I: MonomialIdeal, m: int, t) -> ComplementRegion:
    return ComplementRegion(staircase_region(I, m, t))


def _floor(q: Fraction) -> int:
    return q.numerator // q.denominator


def _merge_intervals(intervals: list) -> list:
    out = []
    for lo, hi in sorted(intervals):
        if hi < lo:
            continue
        if out and lo <= out[-1][1]:
            out[-1] = (out[-1][0], max(out[-1][1], hi))
        else:
            out.append((lo, hi))
    return out


def _staircase_lattice(corners: tuple, dim: int, dfloor: int) -> int:
    if dfloor < 0:
        return 0
    if dim == 0:
        return 1 if corners else 0
    if dim == 1:
        ivs = [(p[0], _floor(Fraction(s))) for p, s in corners]
        return sum(hi - lo + 1 for lo, hi in _merge_intervals(ivs) if lo <= dfloor)
    if dim == 2:
        slacks = {s for _, s in corners}
        if len(slacks) == 1:
            # single hypotenuse: each column is one interval
            sfloor = _floor(Fraction(next(iter(slacks))))
            by_a = sorted((p[0], p[1]) for p, _ in corners)
            total = 0
            k = 0
            bmin = None
            for a in range(min(dfloor, sfloor) + 1):
                while k < len(by_a) and by_a[k][0] <= a:
                    b = by_a[k][1]
                    bmin = b if bmin is None else min(bmin, b)
                    k += 1
                if bmin is not None and sfloor - a >= bmin:
                    total += sfloor - a - bmin + 1
            return total
        total = 0
        for a in range(dfloor + 1):
            ivs = [
                (p[1], _floor(Fraction(s)) - a)
                for p, s in corners
                if p[0] <= a
            ]
            total += sum(hi - lo + 1 for lo, hi in _merge_intervals(ivs))
        return total
    # generic: slice along the first coordinate
    total = 0
    for a in range(dfloor + 1):
        sub = []
        for p, s in corners:
            if p[0] <= a and s - a >= sum(p[1:]):
                sub.append((p[1:], s - a))
        total += _staircase_lattice(_minimal_corners(sub), dim - 1, dfloor - a)
    return total


def lattice_count(region) -> int:
    """Exact number of integer points of the region.

    Boundary convention: the simplex and the staircase boxes are closed, so
    the complement's count equals the Hilbert function of the quotient at the
    floor of the bound.
    """
    if isinstance(region, SimplexRegion):
        if region.bound < 0:
            return 0
        d = _floor(Fraction(region.bound))
        return comb(d + region.dim, region.dim)
    if isinstance(region, StaircaseRegion):
        if region.bound < 0:
            return 0
        return _staircase_lattice(
            region.corners, region.dim, _floor(Fraction(region.bound))
        )
    if isinstance(region, ComplementRegion):
        stair = region.staircase
        simplex = SimplexRegion(stair.dim, stair.bound)
        return lattice_count(simplex) - lattice_count(stair)
    raise TypeError(f"not a region: {region!r}")


def gamma_lattice_count(I: MonomialIdeal, m: int, t) -> int:
    return lattice_count(gamma_region(I, m, t))


def _staircase_area(corners: tuple) -> Fraction:
    """Exact area of a union of corner triangles {x>=p0, y>=p1, x+y<=s}.

    Sweeps vertical strips cut at every combinatorial change; within a strip
    the column measure is linear in x, so the midpoint value integrates it
    exactly.
    """
    if not corners:
        return Fraction(0)
    cuts = set()
    lo = min(Fraction(p[0]) for p, _ in corners)
    hi = max(Fraction(s) - p[1] for p, s in corners)
    for p, _ in corners:
        cuts.add(Fraction(p[0]))
    for _, s in corners:
        for q, _ in corners:
            cuts.add(Fraction(s) - q[1])
    xs = sorted(x for x in cuts if lo <= x <= hi)
    area = Fraction(0)
    for x0, x1 in zip(xs, xs[1:]):
        if x1 <= x0:
            continue
        xm = (x0 + x1) / 2
        ivs = [
            (Fraction(p[1]), Fraction(s) - xm)
            for p, s in corners
            if p[0] <= xm and Fraction(s) - xm >= p[1]
        ]
        length = sum((b - a for a, b in _merge_intervals(ivs)), Fraction(0))
        area += (x1 - x0) * length
    return area


def region_volume(region) -> Fraction:
    """Exact measure; dimensions 0 (counting measure), 1 and 2 only."""
    if isinstance(region, SimplexRegion):
        if region.bound < 0:
            return Fraction(0)
        b = Fraction(region.bound)
        if region.dim == 0:
            return Fraction(1)
        if region.dim == 1:
            return b
        if region.dim == 2:
            return b * b / 2
        raise UnsupportedDimensionError(
            f"exact volume limited to dimension <= 2, got {region.dim}; "
            "use lattice counts for higher dimensions"
        )
    if isinstance(region, StaircaseRegion):
        if region.dim == 0:
            return Fraction(1 if region.corners else 0)
        if region.dim == 1:
            ivs = [(Fraction(p[0]), Fraction(s)) for p, s in region.corners]
            return sum((b - a for a, b in _merge_intervals(ivs)), Fraction(0))
        if region.dim == 2:
            return _staircase_area(region.corners)
        raise UnsupportedDimensionError(
            f"exact volume limited to dimension <= 2, got {region.dim}; "
            "use lattice counts for higher dimensions"
        )
    if isinstance(region, ComplementRegion):
        stair = region.staircase
        return region_volume(SimplexRegion(stair.dim, stair.bound)) - region_volume(
            stair
        )
    raise TypeError(f"not a region: {region!r}")


@dataclass(frozen=True)
class ShapePolygon:
    """Simple polygon with exact rational vertices in boundary (CCW) order.

    Limiting shapes are convex; their complements generally are not, so
    convexity is a property to query, not an invariant.
    """

    vertices: tuple

    @classmethod
    def make(cls, points) -> "ShapePolygon":
        pts = [(Fraction(x), Fraction(y)) for x, y in points]
        # drop cyclic duplicates
        out = []
        for p in pts:
            if not out or p != out[-1]:
                out.append(p)
        if len(out) > 1 and out[0] == out[-1]:
            out.pop()
        # merge cyclically collinear runs
        changed = True
        while changed and len(out) > 2:
            changed = False
            for i in range(len(out)):
                a, b, c = out[i - 1], out[i], out[(i + 1) % len(out)]
                if _cross(a, b, c) == 0:
                    out.pop(i)
                    changed = True
                    break
        return cls(tuple(out))

    @property
    def is_empty(self) -> bool:
        return len(self.vertices) == 0

    def signed_area(self) -> Fraction:
        v = self.vertices
        if len(v) < 3:
            return Fraction(0)
        twice = Fraction(0)
        for i in range(len(v)):
            x0, y0 = v[i]
            x1, y1 = v[(i + 1) % len(v)]
            twice += x0 * y1 - x1 * y0
        return twice / 2

    def area(self) -> Fraction:
        return abs(self.signed_area())

    def is_convex(self) -> bool:
        v = self.vertices
        if len(v) < 4:
            return True
        sign = 0
        for i in range(len(v)):
            c = _cross(v[i - 1], v[i], v[(i + 1) % len(v)])
            if c == 0:
                continue
            s = 1 if c > 0 else -1
            if sign == 0:
                sign = s
            elif s != sign:
                return False
        return True

    def clip_halfplane(self, a, b, c) -> "ShapePolygon":
        """Keep the part with a*x + b*y <= c (Sutherland-Hodgman step)."""
        a, b, c = Fraction(a), Fraction(b), Fraction(c)
        v = self.vertices
        if not v:
            return self
        out = []
        for i in range(len(v)):
            cur, nxt = v[i], v[(i + 1) % len(v)]
            cur_in = a * cur[0] + b * cur[1] <= c
            nxt_in = a * nxt[0] + b * nxt[1] <= c
            if cur_in:
                out.append(cur)
            if cur_in != nxt_in:
                dx, dy = nxt[0] - cur[0], nxt[1] - cur[1]
                denom = a * dx + b * dy
                lam = (c - a * cur[0] - b * cur[1]) / denom
                out.append((cur[0] + lam * dx, cur[1] + lam * dy))
        return ShapePolygon.make(out)

    def to_json(self) -> list:
        from .rationals import format_rational

        return [[format_rational(x), format_rational(y)] for x, y in self.vertices]


def _cross(a, b, c) -> Fraction:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def convex_hull(points) -> list:
    """Exact 2-D convex hull (monotone chain), CCW without repeated endpoint."""
    pts = sorted({(Fraction(x), Fraction(y)) for x, y in points})
    if len(pts) <= 2:
        return pts
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


@dataclass(frozen=True)
class ShapeResult:
    """Polygonal limiting shape (or complement) at parameter t.

    `exact` marks closed-form families; otherwise the polygon is an inner
    approximation of the limiting shape built from finitely many scaled
    staircases (and the complement is reported by area only).
    """

    kind: str  # "delta" or "gamma"
    t: Fraction
    exact: bool
    polygon: ShapePolygon | None
    area: Fraction
    staircase_vertices: tuple | None


def _plane_ideal(family, m: int) -> MonomialIdeal:
    I = family.ideal(m)
    if I.nvars > 3:
        raise UnsupportedDimensionError(
            f"{family.label}: shape computations need at most 3 variables, got {I.nvars}"
        )
    return I.padded(3)


def _exact_delta_polygon(shape, t: Fraction) -> ShapePolygon:
    poly = ShapePolygon.make([(0, 0), (t, 0), (0, t)])
    for A, B, C in shape.halfplanes:
        poly = poly.clip_halfplane(-A, -B, -C)  # keep A*x + B*y >= C
    return poly


def _exact_gamma_polygon(shape, t: Fraction) -> ShapePolygon:
    chain = [(Fraction(x), Fraction(y)) for x, y in shape.vertices]
    if chain[0][1] != 0:
        raise ValueError("staircase chain must start on the x-axis")
    big = max(t, max(y for _, y in chain)) + 1
    boundary = [(Fraction(0), Fraction(0))] + chain
    last = chain[-1]
    if last[0] != 0:
        # staircase leaves the plane upwards: close along a vertical ray
        boundary += [(last[0], big), (Fraction(0), big)]
    poly = ShapePolygon.make(boundary)
    return poly.clip_halfplane(1, 1, t)


def limiting_shape(family, t, max_m: int = 16) -> ShapeResult:
    """Limiting shape at parameter t as a polygon in the exponent plane.

    Exact for families carrying a closed form; otherwise the convex hull of
    the scaled staircases for m <= max_m, an inner approximation that is
    non-decreasing in max_m.
    """
    t = Fraction(t)
    if t < 0:
        raise ValueError("t must be >= 0")
    shape = getattr(family, "exact_shape", None)
    if shape is not None:
        poly = _exact_delta_polygon(shape, t)
        verts = tuple((Fraction(x), Fraction(y)) for x, y in shape.vertices)
        return ShapeResult("delta", t, True, poly, poly.area(), verts)
    if max_m < 1:
        raise ValueError("max_m must be >= 1")
    points = []
    for m in range(1, max_m + 1):
        region = staircase_region(_plane_ideal(family, m), m, t)
        for (p0, p1), s in region.corners:
            s = Fraction(s)
            points.append((Fraction(p0, m), Fraction(p1, m)))
            points.append((Fraction(p0, m), (s - p0) / m))
            points.append(((s - p1) / m, Fraction(p1, m)))
    hull = convex_hull(points)
    poly = ShapePolygon.make(hull)
    return ShapeResult("delta", t, False, poly, poly.area(), None)


def gamma_limit(family, t, max_m: int = 16) -> ShapeResult:
    """Complement of the limiting shape inside the simplex of bound t."""
    t = Fraction(t)
    if t < 0:
        raise ValueError("t must be >= 0")
    shape = getattr(family, "exact_shape", None)
    if shape is not None:
        poly = _exact_gamma_polygon(shape, t)
        verts = tuple((Fraction(x), Fraction(y)) for x, y in shape.vertices)
        return ShapeResult("gamma", t, True, poly, poly.area(), verts)
    delta = limiting_shape(family, t, max_m)
    area = t * t / 2 - delta.area
    return ShapeResult("gamma", t, False, None, area, None)


def waldschmidt_from_shape(result: ShapeResult) -> Fraction:
    """Axis intercept of an exact shape: where shape and complement meet the
    first axis.  Refuses inner approximations."""
    if not result.exact or result.staircase_vertices is None:
        raise ValueError("Waldschmidt from shape needs an exact limiting shape")
    first = result.staircase_vertices[0]
    if first[1] != 0:
        raise ValueError("staircase chain must start on the x-axis")
    return Fraction(first[0])


def areg_from_shape(result: ShapeResult) -> Fraction:
    """Largest coordinate sum over the extremal points of an exact shape."""
    if not result.exact or result.staircase_vertices is None:
        raise ValueError("asymptotic regularity from shape needs an exact shape")
    if not result.staircase_vertices:
        raise ValueError("shape has no extremal points below the simplex bound")
    return max(Fraction(x) + Fraction(y) for x, y in result.staircase_vertices)


@dataclass(frozen=True)
class AhfResult:
    """Value of the asymptotic Hilbert function with convergence diagnostics.

    `samples` lists (m, lattice count of the complement region, count/m^2) in
    the exponent plane; for exact families the value is the complement area.
    """

    t: Fraction
    value: Fraction
    exact: bool
    samples: tuple


def ahf(family, t, max_m: int = 16, diagnostics: bool = True) -> AhfResult:
    t = Fraction(t)
    gamma = gamma_limit(family, t, max_m)
    samples = []
    if diagnostics:
        for m in range(1, max_m + 1):
            count = lattice_count(gamma_region(_plane_ideal(family, m), m, t))
            samples.append((m, count, Fraction(count, m * m)))
    return AhfResult(t, gamma.area, gamma.exact, tuple(samples))


def lift_slice(points, t):
    """Append the slack coordinate: a slice point x maps to (x, t - sum(x))."""
    t = Fraction(t)
    if isinstance(points, ShapePolygon):
        points = points.vertices
    out = []
    for p in points:
        p = tuple(Fraction(v) for v in (p if isinstance(p, (tuple, list)) else (p,)))
        if len(p) > 2:
            raise UnsupportedDimensionError("lift defined for slices in R^1 and R^2")
        out.append(p + (t - sum(p),))
    return tuple(out)
