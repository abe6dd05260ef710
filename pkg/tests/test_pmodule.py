import random

import pytest

from persforge.exactfield import GF2, GF5, QQ, Matrix
from persforge.intervals import IntervalSupport, Rectangle, interval_module
from persforge.pmodule import (
    FORWARD,
    HomomorphismError,
    OrderError,
    PathSpec,
    PersistenceModule,
    composite_map,
    direct_sum,
    direct_sum_list,
    interval_decomposition,
    module_generators,
    modules_equal_on_grid,
    restrict_hyperplane,
    restrict_path,
    shift,
    spans_module,
    stack_layers,
    validate,
    zero_module,
    zigzag_from_intervals,
)


def rect(lo, hi, field=GF2):
    return interval_module(Rectangle(lo, hi), field)


def test_validate_unit_square_interval():
    m = rect((0, 0), (1, 1))
    assert validate(m) == []
    assert m.dim((0, 0)) == 1 and m.dim((1, 1)) == 1
    assert len(m.edges) == 4


def test_validate_names_broken_square():
    m = rect((0, 0), (1, 1))
    edges = dict(m.edges)
    # redirect one edge to zero so the square no longer commutes
    del edges[((0, 1), 0)]
    bad = PersistenceModule(GF2, 2, dict(m.dims), edges)
    vs = validate(bad)
    assert len(vs) == 1
    assert vs[0].kind == "non-commuting-square"
    assert vs[0].where == ((0, 0), 0, 1)


def test_composite_identity_at_equal_points():
    m = rect((0, 0), (2, 2))
    assert composite_map(m, (1, 1), (1, 1)).is_identity()


def test_composite_order_error():
    m = rect((0, 0), (2, 2))
    with pytest.raises(OrderError):
        composite_map(m, (2, 0), (0, 2))


def test_composite_inside_rectangle_is_one():
    m = rect((0, 0), (2, 2), GF5)
    c = composite_map(m, (0, 0), (2, 2))
    assert c == Matrix.identity(GF5, 1)


def test_composite_path_independence_on_random_modules():
    # random conjugated sums of intervals stay valid; staircase choice of the
    # composite never matters
    from persforge.verify import random_conjugated_module

    rng = random.Random(99)
    for _ in range(100):
        m = random_conjugated_module(rng, GF5, box=(3, 3), max_summands=3)
        assert validate(m) == []
        pts = sorted(m.support)
        if len(pts) < 2:
            continue
        a = pts[0]
        b = max(pts, key=lambda p: sum(p))
        lo = tuple(min(x, y) for x, y in zip(a, b))
        direct = composite_map(m, lo, b)
        # alternative staircase: axis 1 first, then axis 0
        cur = lo
        mat = Matrix.identity(m.field, m.dim(lo))
        for j in reversed(range(m.n)):
            while cur[j] < b[j]:
                mat = m.edge(cur, j) @ mat
                cur = cur[:j] + (cur[j] + 1,) + cur[j + 1 :]
        assert mat == direct


def test_direct_sum_with_zero_module():
    m = rect((0,), (3,))
    assert direct_sum(m, zero_module(GF2, 1)) == m


def test_direct_sum_doubles_dims_with_identity_edges():
    m = rect((0,), (1,))
    s = direct_sum(m, m)
    assert s.dim((0,)) == 2 and s.dim((1,)) == 2
    assert s.edge((0,), 0) == Matrix.identity(GF2, 2)


def test_direct_sum_three_rectangles_dims():
    summands = [rect((3,), (3,)), rect((0,), (4,)), rect((1,), (2,))]
    m = direct_sum_list(summands)
    assert [m.dim((g,)) for g in range(5)] == [1, 2, 2, 2, 1]


def test_restrict_hyperplane_drops_last_axis():
    m = rect((0, 0), (2, 1))
    layer = restrict_hyperplane(m, 0)
    assert layer == rect((0,), (2,))
    assert restrict_hyperplane(m, 5).is_zero()


def test_shift_and_unshift():
    m = rect((0, 0), (1, 1), GF5)
    s = shift(m, (2, 3))
    assert s == rect((2, 3), (3, 4), GF5)
    assert shift(s, (-2, -3)) == m
    assert shift(m, (0, 0)) == m
    with pytest.raises(ValueError):
        shift(m, (-1, 0))


def test_stack_single_layer():
    m = rect((0,), (2,))
    st = stack_layers([m], [])
    assert st.n == 2
    assert restrict_hyperplane(st, 0) == m


def test_stack_two_intervals_with_identity_map():
    m = rect((0,), (1,))
    fam = {(0,): Matrix.identity(GF2, 1), (1,): Matrix.identity(GF2, 1)}
    st = stack_layers([m, m], [fam])
    assert st == rect((0, 0), (1, 1))


def test_stack_rejects_non_commuting_map():
    a = rect((0,), (1,))
    b = rect((0,), (1,))
    fam = {(0,): Matrix.identity(GF2, 1)}  # dies at 1: fails against identity edges
    with pytest.raises(HomomorphismError):
        stack_layers([a, b], [fam])


def test_stack_restrict_round_trip_bit_exact():
    layers = [rect((0, 0), (2, 2), GF5), rect((0, 0), (2, 1), GF5)]
    one = Matrix.identity(GF5, 1)
    fam = {pt: one for pt in layers[1].support}
    st = stack_layers(layers, [fam])
    assert validate(st) == []
    for i, lay in enumerate(layers):
        assert restrict_hyperplane(st, i) == lay


def test_modules_equal_on_grid_translation_only():
    a = rect((0, 0), (1, 1))
    b = rect((5, 2), (6, 3))
    assert modules_equal_on_grid(a, b)
    assert not modules_equal_on_grid(a, rect((0, 0), (1, 2)))


# -- paths and zigzags --------------------------------------------------------


def test_pathspec_rejects_non_unit_steps():
    with pytest.raises(ValueError):
        PathSpec([(0, 0), (1, 1)])
    with pytest.raises(ValueError):
        PathSpec([(0, 0), (2, 0)])


def test_restrict_constant_path():
    m = rect((0, 0), (2, 2))
    z = restrict_path(m, PathSpec([(1, 1)]))
    assert z.length == 1 and z.dims == (1,)


def test_restrict_path_inside_rectangle_all_identity():
    m = rect((0, 0), (2, 2))
    path = PathSpec([(0, 0), (1, 0), (1, 1), (2, 1), (2, 2)])
    z = restrict_path(m, path)
    assert z.dims == (1, 1, 1, 1, 1)
    assert all(o == FORWARD for o in z.orientations)
    assert all(mat == Matrix.identity(GF2, 1) for mat in z.maps)


def test_restrict_path_backward_step_reads_edge_against_direction():
    m = rect((0, 0), (1, 1))
    path = PathSpec([(0, 1), (0, 0), (1, 0)])
    z = restrict_path(m, path)
    assert z.orientations == ("b", "f")
    assert z.maps[0] == Matrix.identity(GF2, 1)  # the edge (0,0)->(0,1)


def test_zigzag_from_intervals_dims_and_maps():
    z = zigzag_from_intervals(GF2, 4, "fbf", [(0, 3), (1, 2)])
    assert z.dims == (1, 2, 2, 1)
    assert z.maps[0].rows == 2 and z.maps[0].cols == 1
    assert z.maps[1].rows == 2 and z.maps[1].cols == 2
    with pytest.raises(ValueError):
        zigzag_from_intervals(GF2, 3, "fb", [(0, 3)])


def test_interval_decomposition_recovers_interval_form():
    rng = random.Random(4)
    for field in (GF2, GF5, QQ):
        for _ in range(20):
            L = rng.randint(1, 6)
            orientations = "".join(rng.choice("fb") for _ in range(L - 1))
            k = rng.randint(0, 3)
            intervals = []
            for _ in range(k):
                a = rng.randrange(L)
                b = rng.randrange(a, L)
                intervals.append((a, b))
            z = zigzag_from_intervals(field, L, orientations, intervals)
            assert interval_decomposition(z) == sorted(intervals)


def test_monotone_path_through_interval_gives_single_bar():
    s = IntervalSupport([(0, 1), (1, 1), (1, 0), (2, 0), (2, 1), (0, 0)])
    m = interval_module(s, GF2)
    path = PathSpec([(0, 0), (1, 0), (1, 1), (2, 1)])
    z = restrict_path(m, path)
    assert all(o == FORWARD for o in z.orientations)
    bars = interval_decomposition(z)
    assert len(bars) == 1
    assert bars[0] == (0, 3)


# -- generators ---------------------------------------------------------------


def test_generators_of_interval_are_minimal_elements():
    s = IntervalSupport([(0, 1), (1, 1), (1, 0)])
    m = interval_module(s, GF2)
    gens = module_generators(m)
    assert sorted(pt for pt, _ in gens) == [(0, 1), (1, 0)]
    assert spans_module(m, gens)


def test_generators_two_overlapping_bars():
    m = direct_sum(rect((0,), (2,)), rect((1,), (3,)))
    gens = module_generators(m)
    assert [pt for pt, _ in gens] == [(0,), (1,)]
    assert spans_module(m, gens)


def test_generators_drop_one_fails_to_span():
    m = direct_sum(rect((0,), (2,)), rect((1,), (3,)))
    gens = module_generators(m)
    for i in range(len(gens)):
        reduced = gens[:i] + gens[i + 1 :]
        assert not spans_module(m, reduced)
