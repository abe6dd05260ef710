import itertools
import random

import pytest

from persforge.exactfield import GF2, GF5, Matrix
from persforge.fixtures import overlap_pair, staircase_three_maxima, staircase_three_minima
from persforge.homlab import HomElement, hom_basis, is_homomorphism
from persforge.intervals import (
    IntervalSupport,
    NotAnIntervalError,
    Rectangle,
    canonical_hom_blocks,
    check_interval,
    hom_dim_intervals,
    intersect_components,
    interval_defect,
    interval_module,
    lower_envelope,
    maximal_elements,
    minimal_elements,
    upper_envelope,
)
from persforge.pmodule import box_points, leq, lt, validate
from persforge.verify import random_interval_support


def test_check_interval_rectangle():
    pts = list(box_points((0, 0), (2, 1)))
    assert check_interval(pts) is not None


def test_check_interval_diagonal_pair_fails_with_witness():
    assert check_interval([(0, 0), (1, 1)]) is None
    kind, (a, gap, b) = interval_defect([(0, 0), (1, 1)])
    assert kind == "not-order-convex"
    assert a == (0, 0) and b == (1, 1) and gap in {(0, 1), (1, 0)}


def test_check_interval_disconnected():
    # an incomparable pair is order-convex but split into two components
    kind, _ = interval_defect([(0, 1), (1, 0)])
    assert kind == "disconnected"
    # in one dimension a gap also breaks order-convexity, reported first
    kind, _ = interval_defect([(0,), (2,)])
    assert kind == "not-order-convex"


def brute_force_order_convex(pts):
    pts = set(pts)
    for a in pts:
        for b in pts:
            if not leq(a, b):
                continue
            for gap in box_points(a, b):
                if gap not in pts:
                    return False
    return True


def test_check_interval_staircase_and_brute_force_agreement():
    assert check_interval([(0, 1), (1, 1), (1, 0)]) is not None
    rng = random.Random(2)
    for _ in range(60):
        pts = {(rng.randrange(4), rng.randrange(4)) for _ in range(rng.randint(1, 8))}
        got = interval_defect(pts)
        convex = brute_force_order_convex(pts)
        connected = got is None or got[0] != "disconnected"
        if got is None:
            assert convex
        elif got[0] == "not-order-convex":
            assert not convex
        else:
            assert convex  # disconnection is only reported for convex sets


def test_intersect_identical_supports():
    s = random_interval_support(random.Random(7), 5, 5)
    rep = intersect_components(s, s)
    assert len(rep) == 1
    assert rep.components[0].viable


def test_intersect_disjoint_supports():
    a = IntervalSupport([(0, 0)])
    b = IntervalSupport([(3, 3)])
    assert len(intersect_components(a, b)) == 0


def test_overlap_pair_exact_component_report():
    m, n = overlap_pair()
    rep = intersect_components(m, n)
    assert len(rep) == 3
    comps = rep.components
    assert [min(c.points) for c in comps] == [(1, 5), (2, 2), (4, 0)]
    assert [c.viable for c in comps] == [False, False, True]
    assert rep.viable_count == 1
    left, mid, right = comps
    assert left.witness.side == "N-side"
    assert (left.witness.beta, left.witness.alpha) == ((1, 6), (1, 5))
    assert mid.witness.side == "M-side"
    assert (mid.witness.beta, mid.witness.alpha) == ((2, 1), (2, 2))
    assert right.witness is None


def test_overlap_pair_viability_brute_force():
    m, n = overlap_pair()
    a_only = m.points - n.points
    b_only = n.points - m.points
    rep = intersect_components(m, n)
    for comp in rep.components:
        bad = any(lt(beta, alpha) for beta in a_only for alpha in comp.points) or any(
            lt(alpha, beta) for beta in b_only for alpha in comp.points
        )
        assert comp.viable == (not bad)


def reflect(s: IntervalSupport, corner) -> IntervalSupport:
    return IntervalSupport([tuple(c - x for c, x in zip(corner, p)) for p in s.points])


def test_swapping_inputs_equals_reflecting_both():
    # viability is direction-specific (the two hom spaces differ in general);
    # the honest symmetry is: swap the arguments = reflect both supports
    rng = random.Random(13)
    for _ in range(40):
        a = random_interval_support(rng, 5, 5)
        b = random_interval_support(rng, 5, 5)
        corner = tuple(
            max(max(p[j] for p in a.points), max(p[j] for p in b.points)) for j in range(2)
        )
        swapped = intersect_components(b, a)
        reflected = intersect_components(reflect(a, corner), reflect(b, corner))
        assert swapped.viable_count == reflected.viable_count
        flags = sorted(
            (frozenset(reflect(IntervalSupport(c.points, _trusted=True), corner).points), c.viable)
            for c in reflected.components
        )
        flags_swapped = sorted((frozenset(c.points), c.viable) for c in swapped.components)
        assert flags == flags_swapped
        # witness sides exchange roles between the two presentations
        for c_sw, c_re in zip(
            sorted(swapped.components, key=lambda c: min(c.points)),
            sorted(
                reflected.components,
                key=lambda c: min(reflect(IntervalSupport(c.points, _trusted=True), corner).points),
            ),
        ):
            if c_sw.witness is not None and c_re.witness is not None:
                assert {c_sw.witness.side, c_re.witness.side} <= {"M-side", "N-side"}


def test_hom_dim_nested_bars():
    a = Rectangle((1,), (4,)).support()
    b = Rectangle((0,), (3,)).support()
    assert hom_dim_intervals(a, b) == 1
    assert hom_dim_intervals(b, a) == 0


def test_hom_dim_overlap_pair():
    m, n = overlap_pair()
    assert hom_dim_intervals(m, n) == 1


def test_canonical_hom_identity_case():
    s = random_interval_support(random.Random(3), 4, 4)
    blocks = canonical_hom_blocks(s, s, 0, GF2)
    assert set(blocks) == set(s.points)
    m = interval_module(s, GF2)
    f = HomElement(m, m, blocks)
    assert is_homomorphism(f)


def test_canonical_hom_nested_bars_support():
    a = Rectangle((1,), (4,)).support()
    b = Rectangle((0,), (3,)).support()
    blocks = canonical_hom_blocks(a, b, 0, GF5)
    assert set(blocks) == {(1,), (2,), (3,)}
    assert all(mat == Matrix.identity(GF5, 1) for mat in blocks.values())
    f = HomElement(interval_module(a, GF5), interval_module(b, GF5), blocks)
    assert is_homomorphism(f)


def test_canonical_hom_rejects_nonviable_component():
    m, n = overlap_pair()
    with pytest.raises(ValueError):
        canonical_hom_blocks(m, n, 0, GF2)
    canonical_hom_blocks(m, n, 2, GF2)


def test_canonical_hom_composition_on_nested_rectangles():
    a = Rectangle((2, 2), (5, 5)).support()
    b = Rectangle((1, 1), (4, 4)).support()
    c = Rectangle((0, 0), (3, 3)).support()
    ma, mb, mc = (interval_module(s, GF5) for s in (a, b, c))
    from persforge.homlab import compose

    f_ab = HomElement(ma, mb, canonical_hom_blocks(a, b, 0, GF5))
    f_bc = HomElement(mb, mc, canonical_hom_blocks(b, c, 0, GF5))
    f_ac = HomElement(ma, mc, canonical_hom_blocks(a, c, 0, GF5))
    assert compose(f_bc, f_ab) == f_ac


def minimal_oracle(s):
    return {p for p in s.points if not any(lt(q, p) for q in s.points)}


def maximal_oracle(s):
    return {p for p in s.points if not any(lt(p, q) for q in s.points)}


def test_minimal_maximal_rectangle():
    r = Rectangle((1, 2), (3, 4)).support()
    assert minimal_elements(r) == {(1, 2)}
    assert maximal_elements(r) == {(3, 4)}


def test_minimal_elements_fixture():
    s = staircase_three_minima()
    assert minimal_elements(s) == {(2, 0), (1, 2), (0, 4)}


def test_maximal_elements_fixture():
    s = staircase_three_maxima()
    assert maximal_elements(s) == {(2, 4), (3, 2), (4, 0)}


def test_extremal_elements_against_pairwise_oracle():
    rng = random.Random(21)
    for _ in range(100):
        s = random_interval_support(rng, 6, 6)
        assert minimal_elements(s) == minimal_oracle(s)
        assert maximal_elements(s) == maximal_oracle(s)


def test_every_point_dominates_a_minimal_and_is_dominated_by_a_maximal():
    rng = random.Random(34)
    for _ in range(50):
        s = random_interval_support(rng, 6, 6)
        mins, maxs = minimal_elements(s), maximal_elements(s)
        for p in s.points:
            assert any(leq(q, p) for q in mins)
            assert any(leq(p, q) for q in maxs)


def test_envelopes_of_rectangle_are_identity():
    r = Rectangle((1, 1), (3, 4)).support()
    up, corner_up = upper_envelope(r)
    lo, corner_lo = lower_envelope(r)
    assert up.points == r.points and corner_up == (3, 4)
    assert lo.points == r.points and corner_lo == (1, 1)


def test_upper_envelope_fixture_includes_far_corner():
    s = staircase_three_minima()
    env, corner = upper_envelope(s)
    assert corner == (4, 4)
    assert (4, 4) not in s
    assert (4, 4) in env
    assert s.points <= env.points


def test_lower_envelope_fixture_includes_origin():
    s = staircase_three_maxima()
    env, corner = lower_envelope(s)
    assert corner == (0, 0)
    assert (0, 0) not in s
    assert (0, 0) in env
    assert s.points <= env.points


def test_envelopes_against_box_scan():
    rng = random.Random(55)
    for _ in range(40):
        s = random_interval_support(rng, 5, 5)
        lo, hi = s.bounding_box()
        env_up, corner = upper_envelope(s)
        want = {
            g
            for g in box_points(lo, hi)
            if leq(g, corner) and any(leq(a, g) for a in s.points)
        }
        assert env_up.points == frozenset(want)
        env_lo, corner_lo = lower_envelope(s)
        want_lo = {
            g
            for g in box_points(lo, hi)
            if leq(corner_lo, g) and any(leq(g, b) for b in s.points)
        }
        assert env_lo.points == frozenset(want_lo)
        # envelope outputs are themselves valid interval supports
        assert check_interval(env_up.points) is not None
        assert check_interval(env_lo.points) is not None


def test_interval_module_shapes():
    single = interval_module(IntervalSupport([(2, 3)]), GF2)
    assert single.total_dim() == 1 and not single.edges
    sq = interval_module(Rectangle((0, 0), (1, 1)), GF2)
    assert sq.total_dim() == 4 and len(sq.edges) == 4
    stair = interval_module(IntervalSupport([(0, 1), (1, 1), (1, 0)]), GF5)
    assert validate(stair) == []


def test_hom_dim_matches_linear_algebra_on_fixture():
    m, n = overlap_pair()
    for field in (GF2, GF5):
        hb = hom_basis(interval_module(m, field), interval_module(n, field))
        assert hb.dimension == 1
