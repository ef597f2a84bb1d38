from fractions import Fraction

import pytest

from limshape import (
    GradedFamily,
    MonomialIdeal,
    ShapePolygon,
    SimplexRegion,
    UnsupportedDimensionError,
    ahf,
    areg_from_shape,
    convex_hull,
    gamma_lattice_count,
    gamma_limit,
    gamma_region,
    hilbert_function,
    hilbert_function_extended,
    lattice_count,
    lift_slice,
    limiting_shape,
    make_ceiling_family,
    make_chain_family,
    make_doubling_family,
    make_halfplane_family,
    make_oscillating_family,
    make_power_family,
    region_volume,
    staircase_region,
    waldschmidt_from_shape,
)
from limshape.geometry import StaircaseRegion, _staircase_area

from conftest import area_by_inclusion_exclusion

DOUBLING_1 = MonomialIdeal.from_gens(2, [(2, 0), (1, 2)])
CHAIN_POINTS = [(4, 0), (3, 1), (1, 4), (0, 7)]


def builtin_families():
    return [
        make_power_family(DOUBLING_1),
        make_doubling_family(),
        make_doubling_family(extra_vars=1),
        make_halfplane_family(2, 3),
        make_ceiling_family(Fraction(22, 7)),
        make_chain_family(CHAIN_POINTS),
        make_oscillating_family(1, 2, 2),
    ]


def test_staircase_region_corners():
    region = staircase_region(DOUBLING_1, 1, 3)
    assert set(region.corners) == {((2,), Fraction(3)), ((1,), Fraction(1))}
    assert staircase_region(MonomialIdeal.zero(2), 1, 3).corners == ()
    # corner with empty truncated box is dropped
    region = staircase_region(DOUBLING_1, 1, 2)
    assert set(region.corners) == {((2,), Fraction(2))}


def test_staircase_region_four_corner_example():
    I = MonomialIdeal.from_gens(3, [(1, 6, 0), (3, 5, 1), (2, 1, 3), (4, 0, 1)])
    region = staircase_region(I, 1, 9)
    assert set(region.corners) == {
        ((1, 6), Fraction(9)),
        ((3, 5), Fraction(8)),
        ((2, 1), Fraction(6)),
        ((4, 0), Fraction(8)),
    }


def test_gamma_lattice_counts():
    assert gamma_lattice_count(DOUBLING_1, 1, 3) == 1
    assert gamma_lattice_count(DOUBLING_1, 1, 2) == 2
    assert gamma_lattice_count(DOUBLING_1.padded(3), 1, 1) == 3
    empty = StaircaseRegion(2, Fraction(-1), ())
    assert lattice_count(empty) == 0


def test_volumes():
    assert region_volume(SimplexRegion(2, Fraction(3))) == Fraction(9, 2)
    # the slack-truncated staircase [1,1] u [2,3] has length 1, and its
    # complement [0,1) u (1,2) has length 2; they tile the interval [0,3]
    region = staircase_region(DOUBLING_1, 1, 3)
    assert region_volume(region) == 1
    assert region_volume(gamma_region(DOUBLING_1, 1, 3)) == 2
    with pytest.raises(UnsupportedDimensionError):
        region_volume(SimplexRegion(3, Fraction(1)))


def test_complement_identity_exact():
    # vol(L) + vol(Gamma) = bound^n / n! for every built-in family
    for fam in builtin_families():
        for m in (1, 2, 3):
            for twice_t in range(1, 9):
                t = Fraction(twice_t, 2)
                I = fam.ideal(m)
                stair = staircase_region(I, m, t)
                total = region_volume(stair) + region_volume(gamma_region(I, m, t))
                n = I.nvars - 1
                bound = Fraction(m * t)
                expected = (
                    Fraction(1)
                    if n == 0
                    else (bound if n == 1 else bound * bound / 2)
                )
                assert total == expected, (fam.label, m, t)


def test_staircase_area_matches_inclusion_exclusion(rng):
    for _ in range(40):
        corners = []
        for _ in range(rng.randint(1, 6)):
            p = (rng.randint(0, 6), rng.randint(0, 6))
            s = sum(p) + Fraction(rng.randint(0, 17), rng.choice([1, 2, 3]))
            corners.append((p, s))
        assert _staircase_area(tuple(corners)) == area_by_inclusion_exclusion(corners)


def test_lattice_count_bridge_all_families():
    # complement lattice points = extended Hilbert function at m*t
    for fam in builtin_families():
        for m in range(1, 7):
            I = fam.ideal(m)
            for twice_t in range(1, 13):
                t = Fraction(twice_t, 2)
                assert gamma_lattice_count(I, m, t) == hilbert_function_extended(
                    I, m * t
                ), (fam.label, m, t)


def test_minkowski_monotonicity_sampled(rng):
    # lattice points of L_p + lattice points of L_q land inside L_{p+q}
    def member(region, point):
        return any(
            all(point[i] >= p[i] for i in range(len(p))) and sum(point) <= s
            for p, s in region.corners
        )

    def sample_points(region, limit):
        pts = []
        top = int(region.bound) + 1
        for p, s in region.corners:
            for _ in range(limit):
                cand = tuple(
                    rng.randint(p[i], min(top, p[i] + 3)) for i in range(len(p))
                )
                if sum(cand) <= s:
                    pts.append(cand)
        return pts

    for fam in (make_halfplane_family(2, 3), make_doubling_family(extra_vars=1)):
        t = Fraction(4)
        for p, q in [(1, 1), (1, 2), (2, 2)]:
            Lp = staircase_region(fam.ideal(p), p, t)
            Lq = staircase_region(fam.ideal(q), q, t)
            Lpq = staircase_region(fam.ideal(p + q), p + q, t)
            for a in sample_points(Lp, 4):
                for b in sample_points(Lq, 4):
                    s = tuple(x + y for x, y in zip(a, b))
                    assert member(Lpq, s), (fam.label, p, q, a, b)


def test_limiting_shape_halfplane():
    fam = make_halfplane_family(2, 3)
    delta = limiting_shape(fam, 10)
    assert delta.exact
    assert delta.polygon.is_convex()
    gamma = gamma_limit(fam, 10)
    assert set(gamma.polygon.vertices) == {
        (Fraction(0), Fraction(0)),
        (Fraction(2), Fraction(0)),
        (Fraction(0), Fraction(3)),
    }
    assert waldschmidt_from_shape(delta) == 2
    assert areg_from_shape(delta) == 3


def test_limiting_shape_chain():
    fam = make_chain_family(CHAIN_POINTS)
    delta = limiting_shape(fam, 12)
    assert delta.staircase_vertices == tuple(
        (Fraction(s), Fraction(t)) for s, t in CHAIN_POINTS
    )
    assert waldschmidt_from_shape(delta) == 4
    assert areg_from_shape(delta) == 7
    gamma = gamma_limit(fam, 12)
    assert gamma.area == 11  # area below the chain


def test_limiting_shape_ceiling():
    fam = make_ceiling_family(Fraction(22, 7))
    delta = limiting_shape(fam, 10)
    assert waldschmidt_from_shape(delta) == Fraction(22, 7)
    assert areg_from_shape(delta) == Fraction(22, 7)
    gamma = gamma_limit(fam, 10)
    # complement is the t-clipped strip left of x = 22/7
    assert gamma.area == Fraction(22, 7) * 10 - Fraction(22, 7) ** 2 / 2


def test_limiting_shape_small_t_clips():
    fam = make_halfplane_family(2, 3)
    delta = limiting_shape(fam, 1)
    assert delta.polygon.is_empty or delta.area == 0
    gamma = gamma_limit(fam, 1)
    assert gamma.area == Fraction(1, 2)


def test_inexact_shape_is_inner_approximation():
    fam = make_power_family(DOUBLING_1)
    t = Fraction(6)
    inner = limiting_shape(fam, t, max_m=4)
    outer = limiting_shape(fam, t, max_m=8)
    assert not inner.exact
    assert inner.area <= outer.area <= t * t / 2
    with pytest.raises(ValueError):
        waldschmidt_from_shape(inner)
    with pytest.raises(ValueError):
        areg_from_shape(inner)
    # hull contains the staircase sample points it was built from
    region = staircase_region(fam.ideal(3).padded(3), 3, t)
    poly = inner.polygon
    for (p0, p1), _ in region.corners:
        pt = (Fraction(p0, 3), Fraction(p1, 3))
        assert _point_in_convex(poly, pt)


def _point_in_convex(poly: ShapePolygon, pt) -> bool:
    v = poly.vertices
    for i in range(len(v)):
        a, b = v[i], v[(i + 1) % len(v)]
        cross = (b[0] - a[0]) * (pt[1] - a[1]) - (b[1] - a[1]) * (pt[0] - a[0])
        if cross < 0:
            return False
    return True


def test_degenerate_families():
    nothing = GradedFamily(2, lambda m: MonomialIdeal.zero(2), "nothing")
    shape = limiting_shape(nothing, 5, max_m=4)
    assert shape.polygon.is_empty and shape.area == 0
    everything = GradedFamily(2, lambda m: MonomialIdeal.unit(2), "everything")
    gamma = gamma_limit(everything, 5, max_m=4)
    assert gamma.area == 0


def test_shape_refused_above_three_variables():
    wide = MonomialIdeal.from_gens(4, [(2, 0, 0, 0), (1, 2, 0, 0)])
    fam = make_power_family(wide)
    with pytest.raises(UnsupportedDimensionError):
        limiting_shape(fam, 4)


def test_ahf_chain_exact():
    fam = make_chain_family(CHAIN_POINTS)
    result = ahf(fam, 7, max_m=6)
    assert result.exact and result.value == 11
    result = ahf(fam, 12, max_m=4)
    assert result.value == 11  # complement saturates once t exceeds the chain
    assert ahf(fam, 0, max_m=2).value == 0


def test_ahf_doubling_diagnostics():
    # counts in the exponent plane follow 2d+1 below the jump, d+1+2^m above
    fam = make_doubling_family()
    result = ahf(fam, 5, max_m=8)
    for m, count, ratio in result.samples:
        d = 5 * m
        expected = 2 * d + 1 if d <= 2**m else d + 1 + 2**m
        assert count == expected
        assert ratio == Fraction(count, m * m)
    # exponent-plane counts of a padded ideal accumulate the planar ones
    I = fam.ideal(3)
    assert gamma_lattice_count(I.padded(3), 3, 5) == sum(
        hilbert_function(I, e) for e in range(16)
    )


def test_ahf_convergence_trend_halfplane():
    fam = make_halfplane_family(2, 3)
    result = ahf(fam, 4, max_m=24)
    assert result.value == 3
    errors = [abs(ratio - 3) for _, _, ratio in result.samples]
    assert all(err < Fraction(10, m) for (m, _, _), err in zip(result.samples, errors))
    head = sum(errors[:12]) / 12
    tail = sum(errors[12:]) / 12
    assert tail < head


def test_lift_slice():
    assert lift_slice([(1, 0)], 3) == ((Fraction(1), Fraction(0), Fraction(2)),)
    assert lift_slice([(0, 0)], 5) == ((Fraction(0), Fraction(0), Fraction(5)),)
    assert lift_slice([(2,)], 5) == ((Fraction(2), Fraction(3)),)


def test_convex_hull_and_polygon_ops():
    pts = [(0, 0), (2, 0), (2, 2), (0, 2), (1, 1), (2, 0)]
    hull = convex_hull(pts)
    assert set(hull) == {
        (Fraction(0), Fraction(0)),
        (Fraction(2), Fraction(0)),
        (Fraction(2), Fraction(2)),
        (Fraction(0), Fraction(2)),
    }
    square = ShapePolygon.make(hull)
    assert square.area() == 4
    assert square.is_convex()
    clipped = square.clip_halfplane(1, 1, 2)
    assert clipped.area() == 2
    merged = ShapePolygon.make([(0, 0), (1, 0), (2, 0), (2, 2), (0, 2)])
    assert len(merged.vertices) == 4


def test_gamma_region_vs_brute_force_random(rng):
    # complement counting agrees with direct membership over the simplex
    from conftest import compositions

    for _ in range(20):
        gens = [tuple(rng.randint(0, 3) for _ in range(2)) for _ in range(rng.randint(1, 4))]
        if all(sum(g) == 0 for g in gens):
            continue
        I = MonomialIdeal.from_gens(2, gens)
        m = rng.randint(1, 3)
        t = Fraction(rng.randint(1, 9), rng.choice([1, 2]))
        bound = int(m * t)
        direct = sum(
            1
            for d in range(bound + 1)
            for mono in compositions(d, 2)
            if not I.contains(mono)
        )
        # padding by one variable turns degree-wise counts into the cumulative
        # count over the simplex
        assert gamma_lattice_count(I.padded(3), m, t) == direct
        assert gamma_lattice_count(I, m, t) == hilbert_function_extended(I, m * t)
