"""Acceptance suite: one test per criterion, each printing a pass line.

All tolerances are pinned here.  Most checks are exact rational equalities;
the only inexact ones are the 10/m convergence envelope (criterion 7) and the
1/20 recovery tolerance for the oscillating subsequence limits (criterion 10).
"""

import json
import time
from fractions import Fraction
from itertools import combinations
from math import lcm

from limshape import (
    MonomialIdeal,
    area_under_graph,
    areg_estimate,
    areg_from_shape,
    dhf_envelope,
    dhf_vertices_closed_form,
    divisibility_modulus,
    gamma_lattice_count,
    gamma_limit,
    gamma_vertices,
    hilbert_function,
    hilbert_function_extended,
    limiting_shape,
    make_ceiling_family,
    make_chain_family,
    make_doubling_family,
    make_halfplane_family,
    make_oscillating_family,
    make_power_family,
    reduction_vector,
    regularity_index,
    two_line_vertices,
    validate_configuration,
    verify_graded,
    waldschmidt_from_shape,
)
from limshape.cli import main as cli_main
from limshape.families import GradedFamily
from limshape.geometry import ahf

CHAIN_POINTS = [(4, 0), (3, 1), (1, 4), (0, 7)]


def builtin_families():
    return [
        make_power_family(MonomialIdeal.from_gens(2, [(2, 0), (1, 2)])),
        make_doubling_family(),
        make_halfplane_family(2, 3),
        make_ceiling_family(Fraction(22, 7)),
        make_chain_family(CHAIN_POINTS),
        make_oscillating_family(1, 2, 2),
    ]


def _report(name: str) -> None:
    print(f"[acceptance] {name}: PASS")


def test_criterion_01_four_line_vertices_cli(capsys):
    start = time.perf_counter()
    code = cli_main(["planar-vertices", "--counts", "10,8,5,3"])
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out
    assert code == 0
    payload = json.loads(out)
    assert payload["vertices"] == [
        ["0", "0"],
        ["4", "4"],
        ["189/40", "69/40"],
        ["47/8", "7/8"],
        ["41/5", "1/5"],
        ["10", "0"],
    ]
    assert elapsed < 1.0, f"took {elapsed:.3f}s"
    with capsys.disabled():
        _report("01 four-line closed-form vertices via CLI, exact, < 1s")


def test_criterion_02_envelope_equals_closed_form_sweep(capsys):
    start = time.perf_counter()
    checked = 0
    for k in range(1, 5):
        for counts in combinations(range(12, 0, -1), k):
            closed = dhf_vertices_closed_form(counts)
            config = validate_configuration(counts)
            base = lcm(*counts)
            for mult in (1, 2):
                vec = reduction_vector(config, base * mult)
                assert dhf_envelope(vec).vertices == closed.vertices, (
                    counts,
                    base * mult,
                )
                checked += 1
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0, f"sweep took {elapsed:.1f}s"
    with capsys.disabled():
        _report(
            f"02 oracle equivalence on {checked} (counts, m) pairs, exact, "
            f"{elapsed:.1f}s < 60s"
        )


def test_criterion_03_two_line_configurations(capsys):
    checked = 0
    for a1 in range(1, 11):
        for a2 in range(1, a1 + 1):
            if a1 * a2 <= a1 + a2:
                continue
            closed = two_line_vertices(a1, a2)
            config = validate_configuration((a1, a2), shared_intersection=True)
            m = divisibility_modulus(config)
            vec = reduction_vector(config, m)
            assert vec.exact
            assert dhf_envelope(vec).vertices == closed.vertices, (a1, a2)
            assert area_under_graph(closed) == Fraction(a1 + a2 + 1, 2), (a1, a2)
            checked += 1
    with capsys.disabled():
        _report(f"03 two-line envelope and area on {checked} pairs, exact")


def test_criterion_04_doubling_hilbert_data(capsys):
    plain = make_doubling_family()
    padded = make_doubling_family(extra_vars=1)
    for m in range(1, 9):
        I, J = plain.ideal(m), padded.ideal(m)
        jump = 2**m
        for d in range(0, 40 * m + 1):
            expected = 1 if (d == 0 or d > jump) else 2
            assert hilbert_function(I, d) == expected, (m, d)
            expected3 = 2 * d + 1 if d <= jump else d + 1 + jump
            assert hilbert_function(J, d) == expected3, (m, d)
        for k in range(1, 81):  # t = k/2 <= 40
            t = Fraction(k, 2)
            assert hilbert_function_extended(I, m * t) == (
                1 if m * t >= jump + 1 else (2 if m * t >= 1 else 1)
            )
    # the agreement degree of each rule sits right after the plateau, one
    # past the top generator degree (the printed source conflates this with
    # its scaled threshold; see the decisions ledger)
    for m in range(1, 9):
        ri = regularity_index(plain.ideal(m))
        assert ri == 2**m + 1, m
        assert ri // m == (2**m + 1) // m
    with capsys.disabled():
        _report("04 doubling-family Hilbert data and regularity indices, exact")


def test_criterion_05_halfplane_invariants(capsys):
    for q1, q2 in [(Fraction(2), Fraction(3)), (Fraction(7, 5), Fraction(9, 4))]:
        fam = make_halfplane_family(q1, q2)
        delta = limiting_shape(fam, q1 + q2 + 3)
        assert delta.exact
        assert waldschmidt_from_shape(delta) == q1
        assert areg_from_shape(delta) == q2
    with capsys.disabled():
        _report("05 half-plane shape invariants at both parameter pairs, exact")


def test_criterion_06_chain_shape(capsys):
    fam = make_chain_family(CHAIN_POINTS)
    delta = limiting_shape(fam, 20)
    expected = tuple((Fraction(s), Fraction(t)) for s, t in CHAIN_POINTS)
    assert delta.staircase_vertices == expected
    assert waldschmidt_from_shape(delta) == 4
    assert areg_from_shape(delta) == 7
    with capsys.disabled():
        _report("06 chain-family shape vertices and invariants, exact")


def test_criterion_07_volume_convergence(capsys):
    fam = make_halfplane_family(2, 3)
    for t in (3, 4, 5):
        result = ahf(fam, t, max_m=60)
        assert result.exact and result.value == 3
        errors = []
        for m, _, ratio in result.samples:
            err = abs(ratio - result.value)
            assert err < Fraction(10, m), (t, m, err)
            errors.append(err)
        head = sum(errors[:30]) / 30
        tail = sum(errors[30:]) / 30
        assert tail < head, t
    with capsys.disabled():
        _report("07 lattice/volume convergence within 10/m up to m=60, tail shrinking")


def test_criterion_08_hilbert_bridge(capsys):
    checked = 0
    for fam in builtin_families():
        for m in range(1, 9):
            I = fam.ideal(m)
            for k in range(1, 13):
                t = Fraction(k, 2)
                assert gamma_lattice_count(I, m, t) == hilbert_function_extended(
                    I, m * t
                ), (fam.label, m, t)
                checked += 1
    with capsys.disabled():
        _report(f"08 lattice-count/Hilbert bridge on {checked} cases, exact")


def test_criterion_09_graph_area_equals_complement_volume(capsys):
    graph = dhf_vertices_closed_form((10, 8, 5, 3))
    assert area_under_graph(graph) == 13
    for t in (Fraction(2), Fraction(4), Fraction(47, 8), Fraction(10)):
        poly = gamma_vertices(graph, t)
        assert area_under_graph(graph, t) == poly.area(), t
    with capsys.disabled():
        _report("09 graph area equals complement-polygon area at all cuts, total 13")


def test_criterion_10_oscillating_regularity(capsys):
    est = areg_estimate(make_oscillating_family(1, 2, 2), 40)
    assert est.oscillating
    assert abs(est.liminf - Fraction(1, 2)) <= Fraction(1, 20)
    assert abs(est.limsup - Fraction(3, 2)) <= Fraction(1, 20)
    residues = dict(est.residue_values)
    assert abs(residues[1] - Fraction(1, 2)) <= Fraction(1, 20)
    assert abs(residues[0] - Fraction(3, 2)) <= Fraction(1, 20)
    with capsys.disabled():
        _report("10 oscillation detected; subsequence limits within 1/20")


def test_criterion_11_fekete_subadditivity(capsys):
    checked = 0
    for fam in builtin_families():
        alphas = {m: fam.ideal(m).alpha() for m in range(1, 17)}
        for p in range(1, 16):
            for q in range(p, 17 - p):
                assert alphas[p + q] <= alphas[p] + alphas[q], (fam.label, p, q)
                checked += 1
    with capsys.disabled():
        _report(f"11 Fekete subadditivity on {checked} cases, exact")


def test_criterion_12_gradedness_suite(capsys):
    for fam in builtin_families():
        report = verify_graded(fam, 10)
        assert report.ok, (fam.label, report.violations)

    def corrupted(m):
        return MonomialIdeal.from_gens(1, [(5,) if m == 2 else (2 * m,)])

    broken = GradedFamily(1, corrupted, "corrupted")
    report = verify_graded(broken, 10)
    assert not report.ok
    first = report.violations[0]
    assert (first.p, first.q) == (1, 1) and first.witness == (4,)
    with capsys.disabled():
        _report("12 gradedness holds for all built-ins; corruption caught with witness")
