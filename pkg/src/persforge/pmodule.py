"""Finite n-dimensional persistence modules on the integer grid.

A module assigns a finite-dimensional vector space to every point of N^n
(almost all zero) and an exact matrix to every unit step along a coordinate
axis, with all squares commuting.  Storage is sparse over the bounding box of
the support: absent points have dimension zero, absent edge matrices are zero
maps, and zero matrices are never stored, so two equal modules are equal as
dictionaries.

Also here: zigzag modules (a line of spaces with per-step orientations),
lattice paths, restriction of a grid module to a hyperplane or a path, direct
sums, translation, stacking of layers into one higher dimension, and the exact
interval decomposition of a zigzag via limit/colimit ranks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .exactfield import EchelonAccumulator, Field, Matrix, nullspace_basis

Point = tuple[int, ...]


class OrderError(ValueError):
    """Two grid points were expected to be comparable but are not."""


class HomomorphismError(ValueError):
    """A graded family of matrices fails to commute with the structure maps."""


# -- lattice helpers ---------------------------------------------------------


def leq(a: Point, b: Point) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lt(a: Point, b: Point) -> bool:
    return a != b and leq(a, b)


def join(a: Point, b: Point) -> Point:
    return tuple(max(x, y) for x, y in zip(a, b))


def meet(a: Point, b: Point) -> Point:
    return tuple(min(x, y) for x, y in zip(a, b))


def add_pt(a: Point, b) -> Point:
    return tuple(x + y for x, y in zip(a, b))


def step(a: Point, j: int, delta: int = 1) -> Point:
    return a[:j] + (a[j] + delta,) + a[j + 1 :]


def box_points(lo: Point, hi: Point):
    """All lattice points of the box [lo, hi], lexicographic order."""
    return itertools.product(*(range(l, h + 1) for l, h in zip(lo, hi)))


@dataclass(frozen=True)
class Violation:
    kind: str
    where: tuple
    detail: str

    def __str__(self):
        return f"{self.kind} at {self.where}: {self.detail}"


class PersistenceModule:
    """Graded dimensions plus exact edge matrices, immutable once built.

    ``dims`` maps points with nonzero dimension to that dimension; ``edges``
    maps ``(point, axis)`` to the matrix of the map from ``point`` to
    ``point + e_axis`` (shape  dims(target) x dims(source)), storing only
    nonzero matrices between nonzero spaces.
    """

    __slots__ = ("field", "n", "dims", "edges", "_support")

    def __init__(self, field: Field, n: int, dims: dict, edges: dict):
        clean_dims = {}
        for pt, d in dims.items():
            pt = tuple(int(c) for c in pt)
            if len(pt) != n:
                raise ValueError(f"point {pt} has wrong length for n={n}")
            if any(c < 0 for c in pt):
                raise ValueError(f"point {pt} has negative coordinates")
            if d < 0:
                raise ValueError(f"negative dimension at {pt}")
            if d > 0:
                clean_dims[pt] = int(d)
        clean_edges = {}
        for (pt, j), mat in edges.items():
            pt = tuple(int(c) for c in pt)
            if not 0 <= j < n:
                raise ValueError(f"edge axis {j} out of range")
            src = clean_dims.get(pt, 0)
            tgt = clean_dims.get(step(pt, j), 0)
            if mat.rows != tgt or mat.cols != src:
                raise ValueError(
                    f"edge at {pt} axis {j} has shape {mat.rows}x{mat.cols}, expected {tgt}x{src}"
                )
            if mat.field != field:
                raise ValueError("edge matrix over the wrong field")
            if src and tgt and not mat.is_zero():
                clean_edges[(pt, j)] = mat
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "dims", clean_dims)
        object.__setattr__(self, "edges", clean_edges)
        object.__setattr__(self, "_support", frozenset(clean_dims))

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("PersistenceModule is immutable")

    # -- structure ---------------------------------------------------------

    def dim(self, pt: Point) -> int:
        return self.dims.get(tuple(pt), 0)

    @property
    def support(self) -> frozenset:
        return self._support

    def is_zero(self) -> bool:
        return not self.dims

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def box(self) -> tuple[Point, Point] | None:
        """Bounding box (lo, hi) of the support, None for the zero module."""
        if not self.dims:
            return None
        pts = list(self.dims)
        lo = tuple(min(p[j] for p in pts) for j in range(self.n))
        hi = tuple(max(p[j] for p in pts) for j in range(self.n))
        return lo, hi

    def edge(self, pt: Point, j: int) -> Matrix:
        """Edge matrix from pt to pt + e_j (synthesized zero when absent)."""
        pt = tuple(pt)
        mat = self.edges.get((pt, j))
        if mat is not None:
            return mat
        return Matrix.zeros(self.field, self.dim(step(pt, j)), self.dim(pt))

    def __eq__(self, other):
        return (
            isinstance(other, PersistenceModule)
            and self.field == other.field
            and self.n == other.n
            and self.dims == other.dims
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.field, self.n, tuple(sorted(self.dims.items()))))

    def __repr__(self):
        return f"PersistenceModule({self.field}, n={self.n}, |supp|={len(self.dims)}, total={self.total_dim()})"


# -- validation --------------------------------------------------------------


def validate(m: PersistenceModule) -> list[Violation]:
    """Empty list iff every commuting square actually commutes.

    Shape errors cannot occur on constructed modules (the constructor refuses
    them) but squares are checked here, each failure naming (point, axes).
    """
    out = []
    for pt in m.support:
        for j in range(m.n):
            for k in range(j + 1, m.n):
                top = step(step(pt, j), k)
                if m.dim(top) == 0:
                    continue
                ej, ek = m.edges.get((pt, j)), m.edges.get((pt, k))
                fj = m.edges.get((step(pt, k), j))
                fk = m.edges.get((step(pt, j), k))
                # all-identity squares commute; all-absent sides are zero maps
                if ej is None and ek is None:
                    continue
                via_j = (fk @ ej) if (fk is not None and ej is not None) else None
                via_k = (fj @ ek) if (fj is not None and ek is not None) else None
                if via_j is None and via_k is None:
                    continue
                za = via_j if via_j is not None else Matrix.zeros(m.field, m.dim(top), m.dim(pt))
                zb = via_k if via_k is not None else Matrix.zeros(m.field, m.dim(top), m.dim(pt))
                if za != zb:
                    out.append(Violation("non-commuting-square", (pt, j, k),
                                         f"routes through {step(pt, j)} and {step(pt, k)} differ"))
    return out


def composite_map(m: PersistenceModule, a: Point, b: Point) -> Matrix:
    """Matrix of the map from grade a to grade b (a <= b required).

    Walks axis by axis; path independence is exactly the commutativity
    invariant, so any staircase gives the same answer on a valid module.
    """
    a, b = tuple(a), tuple(b)
    if not leq(a, b):
        raise OrderError(f"{a} is not below {b}")
    mat = Matrix.identity(m.field, m.dim(a))
    cur = a
    for j in range(m.n):
        while cur[j] < b[j]:
            mat = m.edge(cur, j) @ mat
            cur = step(cur, j)
    return mat


# -- constructions on modules ------------------------------------------------


def direct_sum(a: PersistenceModule, b: PersistenceModule) -> PersistenceModule:
    return direct_sum_list([a, b])


def direct_sum_list(mods: list[PersistenceModule]) -> PersistenceModule:
    if not mods:
        raise ValueError("empty direct sum needs an ambient field and dimension")
    field, n = mods[0].field, mods[0].n
    for m in mods:
        if m.field != field or m.n != n:
            raise ValueError("direct sum of modules over different fields or grids")
    dims: dict[Point, int] = {}
    for m in mods:
        for pt, d in m.dims.items():
            dims[pt] = dims.get(pt, 0) + d
    edges = {}
    keys = set()
    for m in mods:
        keys |= set(m.edges)
    for (pt, j) in keys:
        tgt = step(pt, j)
        blocks = []
        for m in mods:
            blocks.append(m.edge(pt, j))
        rows = dims.get(tgt, 0)
        cols = dims.get(pt, 0)
        zero = field.zero
        out = [[zero] * cols for _ in range(rows)]
        r0 = c0 = 0
        for blk in blocks:
            for i in range(blk.rows):
                row = out[r0 + i]
                brow = blk.data[i]
                for c in range(blk.cols):
                    row[c0 + c] = brow[c]
            r0 += blk.rows
            c0 += blk.cols
        edges[(pt, j)] = Matrix(field, rows, cols, out)
    return PersistenceModule(field, n, dims, edges)


def zero_module(field: Field, n: int) -> PersistenceModule:
    return PersistenceModule(field, n, {}, {})


def restrict_hyperplane(m: PersistenceModule, value: int) -> PersistenceModule:
    """Pin the final coordinate to ``value``; drops edges along the last axis."""
    if m.n < 2:
        raise ValueError("hyperplane restriction needs ambient dimension >= 2")
    dims = {pt[:-1]: d for pt, d in m.dims.items() if pt[-1] == value}
    edges = {
        (pt[:-1], j): mat
        for (pt, j), mat in m.edges.items()
        if pt[-1] == value and j < m.n - 1
    }
    return PersistenceModule(m.field, m.n - 1, dims, edges)


def shift(m: PersistenceModule, offset) -> PersistenceModule:
    """Translate the module by an integer vector; support must stay in N^n."""
    offset = tuple(int(x) for x in offset)
    if len(offset) != m.n:
        raise ValueError("offset has wrong length")
    for pt in m.support:
        if any(c + o < 0 for c, o in zip(pt, offset)):
            raise ValueError(f"shift by {offset} moves {pt} to negative coordinates")
    dims = {add_pt(pt, offset): d for pt, d in m.dims.items()}
    edges = {(add_pt(pt, offset), j): mat for (pt, j), mat in m.edges.items()}
    return PersistenceModule(m.field, m.n, dims, edges)


def normalize_to_origin(m: PersistenceModule) -> PersistenceModule:
    b = m.box()
    if b is None:
        return m
    lo, _ = b
    return shift(m, tuple(-c for c in lo))


def modules_equal_on_grid(a: PersistenceModule, b: PersistenceModule) -> bool:
    """Graded equality after translating both supports to the origin."""
    if a.field != b.field or a.n != b.n:
        return False
    return normalize_to_origin(a) == normalize_to_origin(b)


def stack_layers(layers: list[PersistenceModule], layer_maps: list[dict], check: bool = True) -> PersistenceModule:
    """Stack n-dimensional layers into an (n+1)-dimensional module.

    ``layer_maps[i]`` maps grid points to the matrix of the map from layer i
    to layer i+1 at that point (absent = zero map).  With ``check`` on, each
    layer map is verified to commute with the in-layer edges; the offending
    edge is named on failure.
    """
    if not layers:
        raise ValueError("no layers to stack")
    field, n = layers[0].field, layers[0].n
    for lay in layers:
        if lay.field != field or lay.n != n:
            raise ValueError("layers over different fields or grids")
    if len(layer_maps) != len(layers) - 1:
        raise ValueError("need exactly one map family between consecutive layers")

    for i, fam in enumerate(layer_maps):
        src, tgt = layers[i], layers[i + 1]
        for pt, mat in fam.items():
            if mat.rows != tgt.dim(pt) or mat.cols != src.dim(pt):
                raise ValueError(f"layer map {i} at {pt} has wrong shape")
        if check:
            pts = set(src.support) | set(fam)
            for pt in pts:
                for j in range(n):
                    up = step(pt, j)
                    if tgt.dim(up) == 0 or src.dim(pt) == 0:
                        continue
                    f_up = fam.get(up)
                    f_pt = fam.get(pt)
                    e_src = src.edges.get((pt, j))
                    e_tgt = tgt.edges.get((pt, j))
                    if f_pt is None and (f_up is None or e_src is None):
                        continue
                    lhs = (f_up @ e_src) if (f_up is not None and e_src is not None) else Matrix.zeros(field, tgt.dim(up), src.dim(pt))
                    rhs = (e_tgt @ f_pt) if (e_tgt is not None and f_pt is not None) else Matrix.zeros(field, tgt.dim(up), src.dim(pt))
                    if lhs != rhs:
                        raise HomomorphismError(
                            f"layer map {i} does not commute with edge at {pt} along axis {j}"
                        )

    dims = {}
    edges = {}
    for r, lay in enumerate(layers):
        for pt, d in lay.dims.items():
            dims[pt + (r,)] = d
        for (pt, j), mat in lay.edges.items():
            edges[(pt + (r,), j)] = mat
    for r, fam in enumerate(layer_maps):
        for pt, mat in fam.items():
            if not mat.is_zero() and mat.rows and mat.cols:
                edges[(pt + (r,), n)] = mat
    return PersistenceModule(field, n + 1, dims, edges)


# -- zigzag modules ----------------------------------------------------------

FORWARD = "f"
BACKWARD = "b"


class ZigzagModule:
    """A line of spaces with per-step orientations and exact maps.

    ``maps[k]`` connects positions k and k+1: shape dims(k+1) x dims(k) for a
    forward step, dims(k) x dims(k+1) for a backward one.  ``interval_form``
    optionally records the module as a sum of interval summands [a, b].
    """

    __slots__ = ("field", "length", "dims", "orientations", "maps", "interval_form")

    def __init__(self, field, dims, orientations, maps, interval_form=None):
        dims = tuple(int(d) for d in dims)
        orientations = tuple(orientations)
        maps = tuple(maps)
        if len(orientations) != max(len(dims) - 1, 0) or len(maps) != len(orientations):
            raise ValueError("orientations/maps must have length len(dims) - 1")
        for k, (o, mat) in enumerate(zip(orientations, maps)):
            if o not in (FORWARD, BACKWARD):
                raise ValueError(f"orientation {o!r} at step {k}")
            want = (dims[k + 1], dims[k]) if o == FORWARD else (dims[k], dims[k + 1])
            if (mat.rows, mat.cols) != want:
                raise ValueError(f"map {k} has shape {(mat.rows, mat.cols)}, expected {want}")
            if mat.field != field:
                raise ValueError("zigzag map over the wrong field")
        if interval_form is not None:
            interval_form = tuple((int(a), int(b)) for a, b in interval_form)
            for a, b in interval_form:
                if not 0 <= a <= b < len(dims):
                    raise ValueError(f"interval [{a},{b}] outside positions 0..{len(dims)-1}")
            for g in range(len(dims)):
                if dims[g] != sum(1 for a, b in interval_form if a <= g <= b):
                    raise ValueError(f"dims[{g}] disagrees with the interval form")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "length", len(dims))
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "orientations", orientations)
        object.__setattr__(self, "maps", maps)
        object.__setattr__(self, "interval_form", interval_form)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("ZigzagModule is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, ZigzagModule)
            and self.field == other.field
            and self.dims == other.dims
            and self.orientations == other.orientations
            and self.maps == other.maps
        )

    def __repr__(self):
        return f"ZigzagModule(len={self.length}, dims={self.dims}, orient={''.join(self.orientations)})"


def zigzag_from_intervals(field: Field, length: int, orientations, intervals) -> ZigzagModule:
    """Canonical zigzag for a list of interval summands.

    Summand i occupies positions a_i..b_i; every map is the identity on the
    summands alive at both ends (ordered by summand index) and zero otherwise.
    """
    orientations = tuple(orientations)
    intervals = [(int(a), int(b)) for a, b in intervals]
    dims = [sum(1 for a, b in intervals if a <= g <= b) for g in range(length)]
    maps = []
    for k, o in enumerate(orientations):
        alive_k = [i for i, (a, b) in enumerate(intervals) if a <= k <= b]
        alive_k1 = [i for i, (a, b) in enumerate(intervals) if a <= k + 1 <= b]
        src, tgt = (alive_k, alive_k1) if o == FORWARD else (alive_k1, alive_k)
        zero, one = field.zero, field.one
        data = [[one if s == t else zero for t in src] for s in tgt]
        maps.append(Matrix(field, len(tgt), len(src), data))
    return ZigzagModule(field, dims, orientations, maps, interval_form=intervals)


class PathSpec:
    """An edge path in the grid: consecutive points differ by one unit step."""

    __slots__ = ("points", "steps")

    def __init__(self, points):
        points = tuple(tuple(int(c) for c in p) for p in points)
        if not points:
            raise ValueError("empty path")
        n = len(points[0])
        steps = []
        for a, b in zip(points, points[1:]):
            if len(b) != n:
                raise ValueError("path points of mixed dimension")
            delta = [y - x for x, y in zip(a, b)]
            nz = [j for j, d in enumerate(delta) if d != 0]
            if len(nz) != 1 or abs(delta[nz[0]]) != 1:
                raise ValueError(f"path step {a} -> {b} is not a unit step")
            steps.append((nz[0], delta[nz[0]]))
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "steps", tuple(steps))

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("PathSpec is immutable")

    def __len__(self):
        return len(self.points)

    def __eq__(self, other):
        return isinstance(other, PathSpec) and self.points == other.points


def restrict_path(m: PersistenceModule, path: PathSpec) -> ZigzagModule:
    """Zigzag of the module along an edge path.

    A + step along axis j reads the edge matrix forward; a - step reads the
    edge from the later point back against the walking direction.
    """
    if not isinstance(path, PathSpec):
        path = PathSpec(path)
    for p in path.points:
        if len(p) != m.n:
            raise ValueError("path lives in a different ambient grid")
    dims = [m.dim(p) for p in path.points]
    orientations = []
    maps = []
    for k, (j, d) in enumerate(path.steps):
        if d > 0:
            orientations.append(FORWARD)
            maps.append(m.edge(path.points[k], j))
        else:
            orientations.append(BACKWARD)
            maps.append(m.edge(path.points[k + 1], j))
    return ZigzagModule(m.field, dims, orientations, maps)


# -- zigzag interval decomposition -------------------------------------------


def _zigzag_limit_colimit_rank(z: ZigzagModule, a: int, b: int) -> int:
    """Number of interval summands whose span covers positions a..b.

    Computed as the rank of the canonical map from the limit to the colimit of
    the restriction to a..b, which is one per covering summand and zero for
    every summand that only partially meets the window.
    """
    field = z.field
    dims = z.dims[a : b + 1]
    total = sum(dims)
    offs = []
    o = 0
    for d in dims:
        offs.append(o)
        o += d
    if total == 0:
        return 0

    # limit: compatible tuples; one equation block per arrow
    eq_rows = []
    zero = field.zero
    for k in range(a, b):
        mat = z.maps[k]
        if z.orientations[k] == FORWARD:
            src, tgt = k - a, k + 1 - a
        else:
            src, tgt = k + 1 - a, k - a
        for r in range(dims[tgt]):
            row = [zero] * total
            row[offs[tgt] + r] = field.one
            for c in range(dims[src]):
                row[offs[src] + c] = field.sub(row[offs[src] + c], mat.data[r][c])
            eq_rows.append(row)
    if eq_rows:
        lim_basis = nullspace_basis(Matrix.from_rows(field, eq_rows))
    else:
        lim_basis = [Matrix.column(field, [field.one if i == j else zero for i in range(total)])
                     for j in range(total)]
    if not lim_basis:
        return 0

    # colimit: quotient of the big sum by im(f e) - e over all arrows
    rel = EchelonAccumulator(field, total)
    for k in range(a, b):
        mat = z.maps[k]
        if z.orientations[k] == FORWARD:
            src, tgt = k - a, k + 1 - a
        else:
            src, tgt = k + 1 - a, k - a
        for c in range(dims[src]):
            row = [zero] * total
            row[offs[src] + c] = field.one
            for r in range(dims[tgt]):
                row[offs[tgt] + r] = field.sub(row[offs[tgt] + r], mat.data[r][c])
            rel.add(row)
    # image of each limit element in the colimit, via its first component
    img = EchelonAccumulator(field, total)
    for row in rel.rows:
        img.add(row)
    cnt = 0
    for v in lim_basis:
        vec = [zero] * total
        for i in range(dims[0]):
            vec[offs[0] + i] = v.data[i][0]
        if img.add(vec):
            cnt += 1
    return cnt


def interval_decomposition(z: ZigzagModule) -> list[tuple[int, int]]:
    """Multiset of interval summands [a, b] of a finite zigzag, sorted.

    Uses inclusion-exclusion over window-covering counts; exact over any
    field supported by the kernel.
    """
    L = z.length
    if L == 0:
        return []
    r = {}
    for a in range(L):
        for b in range(a, L):
            r[(a, b)] = _zigzag_limit_colimit_rank(z, a, b)

    def rr(a, b):
        if a < 0 or b > L - 1:
            return 0
        return r[(a, b)]

    bars = []
    for a in range(L):
        for b in range(a, L):
            mult = rr(a, b) - rr(a - 1, b) - rr(a, b + 1) + rr(a - 1, b + 1)
            if mult < 0:
                raise AssertionError(f"negative multiplicity for [{a},{b}]")
            bars.extend([(a, b)] * mult)
    if sum(b - a + 1 for a, b in bars) != sum(z.dims):
        raise AssertionError("interval decomposition does not fill the dimensions")
    return sorted(bars)


# -- graded generators -------------------------------------------------------


def module_generators(m: PersistenceModule) -> list[tuple[Point, Matrix]]:
    """A minimal homogeneous generating set, traversing grades bottom-up.

    At each grade the incoming edge images are spanned first and standard
    basis vectors are added to complete the space; those completions are the
    generators at that grade.  Deterministic for a fixed module.
    """
    gens = []
    order = sorted(m.support, key=lambda p: (sum(p), p))
    for pt in order:
        d = m.dim(pt)
        acc = EchelonAccumulator(m.field, d)
        for j in range(m.n):
            if pt[j] == 0:
                continue
            prev = step(pt, j, -1)
            mat = m.edges.get((prev, j))
            if mat is None:
                continue
            for c in range(mat.cols):
                acc.add(mat.col_entries(c))
        for r in range(d):
            unit = [m.field.one if i == r else m.field.zero for i in range(d)]
            if acc.add(unit):
                gens.append((pt, Matrix.column(m.field, unit)))
    return gens


def spans_module(m: PersistenceModule, gens: list[tuple[Point, Matrix]]) -> bool:
    """Check that pushing the given homogeneous vectors through the structure
    maps spans every graded piece (independent re-spanning oracle)."""
    reach: dict[Point, EchelonAccumulator] = {}
    order = sorted(m.support, key=lambda p: (sum(p), p))
    by_grade: dict[Point, list[Matrix]] = {}
    for pt, vec in gens:
        by_grade.setdefault(tuple(pt), []).append(vec)
    for pt in order:
        d = m.dim(pt)
        acc = EchelonAccumulator(m.field, d)
        for j in range(m.n):
            if pt[j] == 0:
                continue
            prev = step(pt, j, -1)
            pacc = reach.get(prev)
            if pacc is None:
                continue
            mat = m.edges.get((prev, j))
            if mat is None:
                continue
            for row in pacc.rows:
                img = mat @ Matrix.column(m.field, row)
                acc.add([x for (x,) in img.data])
        for vec in by_grade.get(pt, []):
            acc.add([x for (x,) in vec.data])
        if acc.rank < d:
            return False
        reach[pt] = acc
    return True
