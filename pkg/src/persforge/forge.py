"""The layered constructions: embed a finite persistence module as a
hyperplane restriction of an indecomposable module one dimension up.

Three construction families, each placing the input verbatim in one layer and
surrounding it with interval layers whose maps are canonical one-on-a-
component homs:

* rectangular (main / dual / glued): input is a labeled sum of box modules;
* interval (main / dual / glued): input is a labeled sum of interval modules,
  reduced to the rectangular case through envelope layers and extremal
  elements;
* general (main only): any finite module, reduced to the interval case
  through the spans of a minimal generating set.

Also here: the placement of a finite zigzag onto a right/down staircase in
the plane and its lift to an indecomposable three-dimensional module whose
restriction along the staircase path reproduces the zigzag.

Everything is computed first on integer (possibly negative) corner data; a
single recorded translation then moves the whole stack into the nonnegative
grid.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactfield import Field, Matrix
from .homlab import HomElement
from .intervals import (
    IntervalSupport,
    Rectangle,
    intersect_components,
    interval_module,
    lower_envelope,
    maximal_elements,
    minimal_elements,
    upper_envelope,
)
from .pmodule import (
    PathSpec,
    PersistenceModule,
    Point,
    ZigzagModule,
    add_pt,
    composite_map,
    direct_sum_list,
    join,
    leq,
    lt,
    meet,
    module_generators,
    restrict_path,
    shift as shift_module,
    spans_module,
    stack_layers,
    step,
    zigzag_from_intervals,
)


class ConstructionError(ValueError):
    pass


class ChooserError(ConstructionError):
    """A parameter chooser produced values violating its own constraints."""


class ViabilityError(ConstructionError):
    """A component that a construction relies on failed the viability check."""


# -- parameter systems ---------------------------------------------------------


@dataclass(frozen=True)
class ConstructionParams:
    mode: str                      # "main" or "dual"
    beta_primes: tuple             # per input summand
    alpha_primes: tuple
    mu: Point
    order: tuple                   # permutation putting the parameters in nested order
    base: int                      # the B constant of the diagonal rule


def _all_coords(rects):
    for r in rects:
        yield from r.lo
        yield from r.hi


def _ones(n: int, v: int) -> Point:
    return (v,) * n


def choose_rect_params(rects: list[Rectangle], mode: str) -> ConstructionParams:
    """Deterministic parameters for the rectangular constructions.

    Main mode: the diagonal rule b'_i = (B + i)*1 with B = (largest coordinate
    in any corner) + (number of summands); every constraint is re-verified
    before returning.  Dual mode: reflect through the common upper corner, run
    the main rule, reflect back; the reflected constraints become the dual
    ones and are re-verified in their own form.
    """
    if not rects:
        raise ConstructionError("empty input")
    n = rects[0].n
    m = len(rects)
    if mode == "main":
        base = max(_all_coords(rects)) + m
        beta_primes = tuple(_ones(n, base + i + 1) for i in range(m))
        mu = tuple(
            max(r.lo[j] + bp[j] for r, bp in zip(rects, beta_primes)) for j in range(n)
        )
        alpha_primes = tuple(tuple(mu[j] - bp[j] for j in range(n)) for bp in beta_primes)
        params = ConstructionParams("main", beta_primes, alpha_primes, mu,
                                    tuple(range(m)), base)
        assert_rect_params(rects, params)
        return params
    if mode == "dual":
        corner = rects[0].hi
        for r in rects[1:]:
            corner = join(corner, r.hi)
        reflected = [Rectangle(tuple(c - h for c, h in zip(corner, r.hi)),
                               tuple(c - l for c, l in zip(corner, r.lo))) for r in rects]
        inner = choose_rect_params(reflected, "main")
        alpha_primes = tuple(tuple(c - bp[j] for j, c in enumerate(corner))
                             for bp in inner.beta_primes)
        mu = tuple(min(ap[j] + r.hi[j] for ap, r in zip(alpha_primes, rects)) for j in range(n))
        beta_primes = tuple(tuple(mu[j] - ap[j] for j in range(n)) for ap in alpha_primes)
        params = ConstructionParams("dual", beta_primes, alpha_primes, mu,
                                    tuple(reversed(range(m))), inner.base)
        assert_rect_params(rects, params)
        return params
    raise ValueError(f"unknown mode {mode!r}")


def assert_rect_params(rects: list[Rectangle], params: ConstructionParams) -> None:
    """Re-verify every chooser constraint; raises ChooserError with the
    violated inequality.  Half-sum comparisons are doubled to stay integral."""
    m = len(rects)
    n = rects[0].n
    bp, ap, order = params.beta_primes, params.alpha_primes, params.order
    if params.mode == "main":
        for i, (r, b) in enumerate(zip(rects, bp)):
            if not leq(r.hi, b):
                raise ChooserError(f"beta[{i}] <= beta'[{i}] fails: {r.hi} !<= {b}")
        for a, b in zip(order, order[1:]):
            if not all(bp[a][j] < bp[b][j] for j in range(n)):
                raise ChooserError(f"beta'[{a}] < beta'[{b}] fails coordinatewise")
        for i, r in enumerate(rects):
            for jdx in range(m):
                if not all(r.lo[j] + bp[i][j] <= 2 * bp[jdx][j] for j in range(n)):
                    raise ChooserError(
                        f"(alpha[{i}]+beta'[{i}])/2 <= beta'[{jdx}] fails")
        # strict nesting of the third layer boxes along the recorded order
        for a, b in zip(order, order[1:]):
            if not (all(ap[b][j] < ap[a][j] for j in range(n))
                    and all(bp[a][j] < bp[b][j] for j in range(n))):
                raise ChooserError("strict nesting of nested-layer boxes fails")
        return
    # dual mode
    seen = set()
    for i, (r, a) in enumerate(zip(rects, ap)):
        if not leq(a, r.lo):
            raise ChooserError(f"alpha'[{i}] <= alpha[{i}] fails: {a} !<= {r.lo}")
        if a in seen:
            raise ChooserError("alpha' values are not distinct")
        seen.add(a)
    for i in range(m):
        for jdx in range(m):
            if not all(2 * ap[i][j] <= ap[jdx][j] + rects[jdx].hi[j] for j in range(n)):
                raise ChooserError(
                    f"alpha'[{i}] <= (alpha'[{jdx}]+beta[{jdx}])/2 fails")
    for a, b in zip(params.order, params.order[1:]):
        if not (all(ap[a][j] < ap[b][j] for j in range(n))
                and all(bp[b][j] < bp[a][j] for j in range(n))):
            raise ChooserError("strict nesting of widened-layer boxes fails")


# -- layer plans ----------------------------------------------------------------


@dataclass
class _Summand:
    key: tuple
    points: frozenset | None          # interval summand support (in Z^n)
    module: PersistenceModule | None  # explicit module summand

    def dim(self, pt) -> int:
        if self.points is not None:
            return 1 if pt in self.points else 0
        return self.module.dim(pt)

    def all_points(self):
        return self.points if self.points is not None else self.module.support


@dataclass
class _Plan:
    """Layers bottom-to-top plus block specs for the maps between them."""

    layers: list[list[_Summand]]
    maps: list[dict]  # (dst_key, src_key) -> {point: Matrix}


def _rect_summand(key, rect: Rectangle) -> _Summand:
    from .pmodule import box_points

    return _Summand(key, frozenset(box_points(rect.lo, rect.hi)), None)


def _rect_hom_block(src: Rectangle, dst: Rectangle, field: Field, what: str) -> dict:
    """Indicator block of the canonical map between two box modules.

    Nonzero exactly when dst.lo <= src.lo <= dst.hi <= src.hi; the component
    is then the box [src.lo, dst.hi].
    """
    if not (leq(dst.lo, src.lo) and leq(src.lo, dst.hi) and leq(dst.hi, src.hi)):
        raise ViabilityError(
            f"{what}: no canonical map {src} -> {dst} (corner chain fails)")
    from .pmodule import box_points

    one = Matrix.identity(field, 1)
    return {pt: one for pt in box_points(src.lo, dst.hi)}


def _interval_hom_block(src: IntervalSupport, dst: IntervalSupport, field: Field, what: str) -> dict:
    """Indicator block of the canonical map between two interval modules whose
    overlap is a single component; re-checks viability and aborts otherwise."""
    report = intersect_components(src, dst)
    if len(report.components) != 1:
        raise ViabilityError(
            f"{what}: expected one overlap component, found {len(report.components)}")
    comp = report.components[0]
    if not comp.viable:
        raise ViabilityError(f"{what}: overlap component not viable, witness {comp.witness}")
    one = Matrix.identity(field, 1)
    return {pt: one for pt in comp.points}


def _rect_plan(rects: list[Rectangle], field: Field, mode: str,
               params: ConstructionParams | None, keys: list[tuple] | None = None) -> tuple[_Plan, ConstructionParams]:
    """Layer plan of the main or dual rectangular construction.

    Main: input on top (plan layers bottom-up: wide box, nested boxes,
    stretched boxes, input).  Dual: input at the bottom.
    """
    if not rects:
        raise ConstructionError("empty input")
    if keys is None:
        keys = [(i,) for i in range(len(rects))]
    if params is None:
        params = choose_rect_params(rects, mode)
    else:
        assert_rect_params(rects, params)
    n = rects[0].n
    bp, ap = params.beta_primes, params.alpha_primes

    if mode == "main":
        stretched = [Rectangle(r.lo, b) for r, b in zip(rects, bp)]
        nested = [Rectangle(a, b) for a, b in zip(ap, bp)]
        lo0 = ap[0]
        hi0 = bp[0]
        for a in ap[1:]:
            lo0 = join(lo0, a)
        for b in bp[1:]:
            hi0 = join(hi0, b)
        wide = Rectangle(lo0, hi0)
        layers = [
            [_rect_summand((0,), wide)],
            [_rect_summand(k, r) for k, r in zip(keys, nested)],
            [_rect_summand(k, r) for k, r in zip(keys, stretched)],
            [_rect_summand(k, r) for k, r in zip(keys, rects)],
        ]
        maps = [
            {(k, (0,)): _rect_hom_block(wide, nr, field, "wide box into nested box")
             for k, nr in zip(keys, nested)},
            {(k, k): _rect_hom_block(nr, sr, field, "nested box into stretched box")
             for k, nr, sr in zip(keys, nested, stretched)},
            {(k, k): _rect_hom_block(sr, r, field, "stretched box onto input box")
             for k, sr, r in zip(keys, stretched, rects)},
        ]
        return _Plan(layers, maps), params

    # dual: input at the bottom
    lowered = [Rectangle(a, r.hi) for a, r in zip(ap, rects)]
    widened = [Rectangle(a, b) for a, b in zip(ap, bp)]
    lo3 = ap[0]
    hi3 = bp[0]
    for a in ap[1:]:
        lo3 = meet(lo3, a)
    for b in bp[1:]:
        hi3 = meet(hi3, b)
    tip = Rectangle(lo3, hi3)
    layers = [
        [_rect_summand(k, r) for k, r in zip(keys, rects)],
        [_rect_summand(k, r) for k, r in zip(keys, lowered)],
        [_rect_summand(k, r) for k, r in zip(keys, widened)],
        [_rect_summand((0,), tip)],
    ]
    maps = [
        {(k, k): _rect_hom_block(r, lr, field, "input box into lowered box")
         for k, r, lr in zip(keys, rects, lowered)},
        {(k, k): _rect_hom_block(lr, wr, field, "lowered box into widened box")
         for k, lr, wr in zip(keys, lowered, widened)},
        {((0,), k): _rect_hom_block(wr, tip, field, "widened box onto the tip box")
         for k, wr in zip(keys, widened)},
    ]
    return _Plan(layers, maps), params


def _interval_main_plan(supports: list[IntervalSupport], field: Field,
                        keys: list[tuple] | None = None) -> tuple[_Plan, dict]:
    """Plan of the main interval construction with the input layer on top."""
    if not supports:
        raise ConstructionError("empty input")
    if keys is None:
        keys = [(i,) for i in range(len(supports))]
    envelopes = []
    corners = []
    for s in supports:
        env, corner = upper_envelope(s)
        envelopes.append(env)
        corners.append(corner)
    env_map = {}
    for k, env, s in zip(keys, envelopes, supports):
        env_map[(k, k)] = _interval_hom_block(env, s, field, "envelope onto summand")
    rect_keys = []
    rects = []
    rect_map = {}
    for k, env, corner in zip(keys, envelopes, corners):
        mins = sorted(minimal_elements(env))
        for j, mn in enumerate(mins):
            rk = k + (j,)
            rect = Rectangle(mn, corner)
            rect_keys.append(rk)
            rects.append(rect)
            rect_map[(k, rk)] = _interval_hom_block(
                rect.support(), env, field, "corner box into envelope")
    rect_plan, rect_params = _rect_plan(rects, field, "main", None, keys=rect_keys)
    layers = rect_plan.layers[:3] + [
        [_rect_summand(rk, r) for rk, r in zip(rect_keys, rects)],
        [_Summand(k, env.points, None) for k, env in zip(keys, envelopes)],
        [_Summand(k, s.points, None) for k, s in zip(keys, supports)],
    ]
    maps = rect_plan.maps + [rect_map, env_map]
    return _Plan(layers, maps), {"rect": rect_params}


def _interval_dual_plan(supports: list[IntervalSupport], field: Field,
                        keys: list[tuple] | None = None) -> tuple[_Plan, dict]:
    """Plan of the dual interval construction with the input layer at the bottom."""
    if not supports:
        raise ConstructionError("empty input")
    if keys is None:
        keys = [(i,) for i in range(len(supports))]
    envelopes = []
    corners = []
    for s in supports:
        env, corner = lower_envelope(s)
        envelopes.append(env)
        corners.append(corner)
    env_map = {}
    for k, env, s in zip(keys, envelopes, supports):
        env_map[(k, k)] = _interval_hom_block(s, env, field, "summand into envelope")
    rect_keys = []
    rects = []
    rect_map = {}
    for k, env, corner in zip(keys, envelopes, corners):
        maxes = sorted(maximal_elements(env))
        for j, mx in enumerate(maxes):
            rk = k + (j,)
            rect = Rectangle(corner, mx)
            rect_keys.append(rk)
            rects.append(rect)
            rect_map[(rk, k)] = _interval_hom_block(
                env, rect.support(), field, "envelope onto corner box")
    rect_plan, rect_params = _rect_plan(rects, field, "dual", None, keys=rect_keys)
    layers = [
        [_Summand(k, s.points, None) for k, s in zip(keys, supports)],
        [_Summand(k, env.points, None) for k, env in zip(keys, envelopes)],
    ] + rect_plan.layers
    maps = [env_map, rect_map] + rect_plan.maps
    # rect_plan's bottom layer duplicates our corner-box layer: drop the copy
    layers.pop(2)
    maps.pop(2)
    return _Plan(layers, maps), {"rect": rect_params}


# -- assembly -------------------------------------------------------------------


@dataclass(frozen=True)
class LayerInfo:
    index: int
    summands: tuple  # (key, frozenset of points) after the global shift


@dataclass
class LayeredConstruction:
    result: PersistenceModule
    m_layer: int
    layers: list[LayerInfo]
    params: dict
    method: str
    shift: Point
    field: Field

    def layer_module(self, index: int) -> PersistenceModule:
        from .pmodule import restrict_hyperplane

        return restrict_hyperplane(self.result, index)

    def input_matches(self, original: PersistenceModule) -> bool:
        """Bit-exact equality of the designated layer with the (translated) input."""
        return self.layer_module(self.m_layer) == shift_module(original, self.shift)


def _materialize(plan: _Plan, field: Field, m_layer: int, method: str,
                 params: dict, check: bool) -> LayeredConstruction:
    n = None
    low = None
    for layer in plan.layers:
        for s in layer:
            for pt in s.all_points():
                if n is None:
                    n = len(pt)
                    low = list(pt)
                else:
                    for j in range(n):
                        low[j] = min(low[j], pt[j])
    if n is None:
        raise ConstructionError("empty input")
    offset = tuple(-min(c, 0) for c in low)

    def mv(pt):
        return add_pt(pt, offset)

    layer_mods = []
    infos = []
    for r, layer in enumerate(plan.layers):
        mods = []
        summaries = []
        for s in layer:
            if s.points is not None:
                mods.append(interval_module(
                    IntervalSupport((mv(p) for p in s.points), _trusted=True), field))
                summaries.append((s.key, frozenset(mv(p) for p in s.points)))
            else:
                mods.append(shift_module(s.module, offset))
                summaries.append((s.key, frozenset(mv(p) for p in s.module.support)))
        layer_mods.append(direct_sum_list(mods))
        infos.append(LayerInfo(r, tuple(summaries)))

    fams = []
    for r, blocks in enumerate(plan.maps):
        src_layer, dst_layer = plan.layers[r], plan.layers[r + 1]
        src_keys = [s.key for s in src_layer]
        dst_keys = [s.key for s in dst_layer]
        by_pair = {}
        pts = set()
        for (dk, sk), bdict in blocks.items():
            by_pair[(dk, sk)] = bdict
            pts.update(bdict)
        fam = {}
        for pt in pts:
            src_alive = [(k, s.dim(pt)) for k, s in zip(src_keys, src_layer) if s.dim(pt)]
            dst_alive = [(k, s.dim(pt)) for k, s in zip(dst_keys, dst_layer) if s.dim(pt)]
            cols = sum(d for _, d in src_alive)
            rows = sum(d for _, d in dst_alive)
            if rows == 0 or cols == 0:
                continue
            zero = field.zero
            data = [[zero] * cols for _ in range(rows)]
            r0 = 0
            for dk, dd in dst_alive:
                c0 = 0
                for sk, sd in src_alive:
                    bdict = by_pair.get((dk, sk))
                    blk = bdict.get(pt) if bdict is not None else None
                    if blk is not None:
                        for i in range(blk.rows):
                            for jj in range(blk.cols):
                                data[r0 + i][c0 + jj] = blk.data[i][jj]
                    c0 += sd
                r0 += dd
            fam[mv(pt)] = Matrix(field, rows, cols, data)
        fams.append(fam)

    result = stack_layers(layer_mods, fams, check=check)
    return LayeredConstruction(result, m_layer, infos, params, method, offset, field)


# -- public constructions ---------------------------------------------------------


def main_rectangular(rects: list[Rectangle], field: Field,
                     params: ConstructionParams | None = None, check: bool = True) -> LayeredConstruction:
    plan, p = _rect_plan(rects, field, "main", params)
    return _materialize(plan, field, 3, "main-rect", {"main": p}, check)


def dual_rectangular(rects: list[Rectangle], field: Field,
                     params: ConstructionParams | None = None, check: bool = True) -> LayeredConstruction:
    plan, p = _rect_plan(rects, field, "dual", params)
    return _materialize(plan, field, 0, "dual-rect", {"dual": p}, check)


def glued_rectangular(rects: list[Rectangle], field: Field, check: bool = True) -> LayeredConstruction:
    main_plan, mp = _rect_plan(rects, field, "main", None)
    dual_plan, dp = _rect_plan(rects, field, "dual", None)
    layers = main_plan.layers + dual_plan.layers[1:]
    maps = main_plan.maps + dual_plan.maps
    plan = _Plan(layers, maps)
    return _materialize(plan, field, 3, "glued-rect", {"main": mp, "dual": dp}, check)


def main_interval(supports: list[IntervalSupport], field: Field, check: bool = True) -> LayeredConstruction:
    plan, p = _interval_main_plan(supports, field)
    return _materialize(plan, field, 5, "main-int", p, check)


def dual_interval(supports: list[IntervalSupport], field: Field, check: bool = True) -> LayeredConstruction:
    plan, p = _interval_dual_plan(supports, field)
    return _materialize(plan, field, 0, "dual-int", p, check)


def glued_interval(supports: list[IntervalSupport], field: Field, check: bool = True) -> LayeredConstruction:
    main_plan, mp = _interval_main_plan(supports, field)
    dual_plan, dp = _interval_dual_plan(supports, field)
    layers = main_plan.layers + dual_plan.layers[1:]
    maps = main_plan.maps + dual_plan.maps
    plan = _Plan(layers, maps)
    return _materialize(plan, field, 5, "glued-int",
                        {"main": mp["rect"], "dual": dp["rect"]}, check)


# -- minimal generators and spans ---------------------------------------------


def minimal_generators(m: PersistenceModule, verify: bool = True) -> list[tuple[Point, Matrix]]:
    """Homogeneous generators, one chunk per grade where the module outgrows
    the images of its incoming maps.  With ``verify`` on, re-spanning and
    drop-one minimality are asserted."""
    gens = module_generators(m)
    if verify:
        if not spans_module(m, gens):
            raise AssertionError("generator extraction failed to span the module")
        for i in range(len(gens)):
            if spans_module(m, gens[:i] + gens[i + 1 :]):
                raise AssertionError(f"generator {i} at {gens[i][0]} is redundant")
    return gens


def generator_span(m: PersistenceModule, grade: Point, vec: Matrix) -> tuple[PersistenceModule, HomElement]:
    """The cyclic interval submodule traced by one homogeneous vector.

    Returns the interval module on {b >= grade : image of vec at b is nonzero}
    together with the inclusion, whose block at b is that image column.
    """
    grade = tuple(grade)
    if vec.rows != m.dim(grade) or vec.cols != 1:
        raise ValueError("vector does not live in the stated grade")
    if vec.is_zero():
        raise ValueError("zero vector spans nothing")
    b = m.box()
    lo, hi = b
    vals: dict[Point, Matrix] = {grade: vec}
    support = set()
    from .pmodule import box_points

    for pt in sorted(box_points(grade, hi), key=lambda p: (sum(p), p)):
        if pt == grade:
            val = vec
        else:
            val = None
            for j in range(m.n):
                if pt[j] > grade[j]:
                    prev = step(pt, j, -1)
                    pv = vals.get(prev)
                    if pv is None:
                        continue
                    val = m.edge(prev, j) @ pv
                    break
            if val is None:
                continue
            vals[pt] = val
        if not val.is_zero():
            support.add(pt)
    sup = IntervalSupport(support)  # order-convex by the factoring of composites
    inc = HomElement(interval_module(sup, m.field), m,
                     {pt: vals[pt] for pt in support})
    return interval_module(sup, m.field), inc


def main_general(summands, field: Field | None = None, check: bool = True) -> LayeredConstruction:
    """The one-construction route for arbitrary finite modules.

    ``summands`` is a module or a list of modules (a labeled direct-sum
    decomposition; a single module counts as one summand).  The input sits in
    the top layer; below it the spans of a minimal generating set, then the
    main interval construction of those spans.
    """
    if isinstance(summands, PersistenceModule):
        summands = [summands]
    if not summands:
        raise ConstructionError("empty input")
    field = field or summands[0].field
    for s in summands:
        if s.field != field:
            raise ConstructionError("summands over different fields")
    if all(s.is_zero() for s in summands):
        raise ConstructionError("empty input")

    span_keys = []
    span_supports = []
    phi_top = {}
    for i, s in enumerate(summands):
        gens = minimal_generators(s, verify=check)
        for j, (grade, vec) in enumerate(gens):
            _mod, inc = generator_span(s, grade, vec)
            key = (i, j)
            span_keys.append(key)
            span_supports.append(IntervalSupport(inc.blocks.keys(), _trusted=True))
            phi_top[((i,), key)] = dict(inc.blocks)

    plan, p = _interval_main_plan(span_supports, field, keys=span_keys)
    layers = plan.layers + [[_Summand((i,), None, s) for i, s in enumerate(summands)]]
    maps = plan.maps + [phi_top]
    return _materialize(_Plan(layers, maps), field, 6, "main-general", p, check)


# -- zigzag placement and lift --------------------------------------------------


@dataclass
class EmbeddedZigzag:
    module: PersistenceModule
    path: PathSpec
    segments: list  # (key, IntervalSupport) per interval summand


def embed_zigzag(z: ZigzagModule) -> EmbeddedZigzag:
    """Place a zigzag onto a right/down staircase in the plane.

    Forward steps run along +x; backward steps drop along -y so that the grid
    edge from the lower point back up carries the backward map.  Each interval
    summand becomes the segment of path points it occupies, and restricting
    the resulting planar module along the path reproduces the zigzag.
    """
    if z.interval_form is None:
        raise ConstructionError("zigzag must be given in interval form")
    back = sum(1 for o in z.orientations if o == "b")
    pts = [(0, back)]
    for o in z.orientations:
        x, y = pts[-1]
        pts.append((x + 1, y) if o == "f" else (x, y - 1))
    path = PathSpec(pts)
    segments = []
    mods = []
    for i, (a, b) in enumerate(z.interval_form):
        seg = IntervalSupport(pts[a : b + 1], _trusted=True)
        segments.append(((i,), seg))
        mods.append(interval_module(seg, z.field))
    module = direct_sum_list(mods)
    got = restrict_path(module, path)
    want = zigzag_from_intervals(z.field, z.length, z.orientations, z.interval_form)
    if got != want:
        raise AssertionError("staircase placement failed to reproduce the zigzag")
    return EmbeddedZigzag(module, path, segments)


def lift_zigzag(z: ZigzagModule, check: bool = True) -> tuple[LayeredConstruction, PathSpec]:
    """Indecomposable 3D module restricting to the zigzag along a path.

    The zigzag is placed on a planar staircase and the main interval
    construction lifts the placement; the returned path lives in the layer
    holding the placement.
    """
    emb = embed_zigzag(z)
    lc = main_interval([seg for _, seg in emb.segments], z.field, check=check)
    lifted = PathSpec([add_pt(p, lc.shift[:2]) + (lc.m_layer,) for p in emb.path.points])
    return lc, lifted
