"""Interval-support combinatorics on the integer grid.

An interval support is a finite, edge-connected, order-convex set of lattice
points; it carries an indecomposable module with one-dimensional spaces and
identity internal maps.  This module provides the support-level machinery the
constructions lean on: viability of connected components of an intersection
(which counts the homomorphisms between the two interval modules), canonical
one-on-a-component homs, minimal/maximal elements, and the upward/downward
envelope supports.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactfield import Field, Matrix
from .pmodule import (
    PersistenceModule,
    Point,
    box_points,
    join,
    leq,
    lt,
    meet,
    step,
)


class NotAnIntervalError(ValueError):
    pass


def _ambient_dim(points) -> int:
    it = iter(points)
    try:
        first = next(it)
    except StopIteration:
        raise NotAnIntervalError("empty support")
    return len(first)


def _neighbors_in(pt: Point, pts: frozenset):
    for j in range(len(pt)):
        up = step(pt, j)
        if up in pts:
            yield up
        if pt[j] > 0:
            dn = step(pt, j, -1)
            if dn in pts:
                yield dn


def _components(pts: frozenset) -> list[frozenset]:
    """Edge-connected components, sorted by their lexicographic minimum."""
    seen = set()
    comps = []
    for start in sorted(pts):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        seen.add(start)
        while stack:
            cur = stack.pop()
            for nb in _neighbors_in(cur, pts):
                if nb not in seen:
                    seen.add(nb)
                    comp.add(nb)
                    stack.append(nb)
        comps.append(frozenset(comp))
    return sorted(comps, key=min)


def _strict_shadow(marked: frozenset, lo: Point, hi: Point, upward: bool) -> set:
    """Points of [lo, hi] with a marked point strictly below (or above)."""
    out: set[Point] = set()
    n = len(lo)
    pts = sorted(box_points(lo, hi), reverse=not upward)
    for pt in pts:
        for j in range(n):
            prev = step(pt, j, -1 if upward else 1)
            ok = (prev[j] >= lo[j]) if upward else (prev[j] <= hi[j])
            if ok and (prev in out or prev in marked):
                out.add(pt)
                break
    return out


def interval_defect(points) -> tuple | None:
    """None when the set is a valid interval support, else a witness.

    Returns ("not-order-convex", (a, gap, b)) with a <= gap <= b, a and b in
    the set and gap missing, or ("disconnected", (p, q)) with p, q in distinct
    components.
    """
    pts = frozenset(tuple(int(c) for c in p) for p in points)
    if not pts:
        return ("empty", ())
    n = _ambient_dim(pts)
    if any(len(p) != n for p in pts):
        raise ValueError("points of mixed dimension")
    lo = tuple(min(p[j] for p in pts) for j in range(n))
    hi = tuple(max(p[j] for p in pts) for j in range(n))
    above = _strict_shadow(pts, lo, hi, upward=True)
    below = _strict_shadow(pts, lo, hi, upward=False)
    for gap in box_points(lo, hi):
        if gap in pts:
            continue
        if gap in above and gap in below:
            a = max((p for p in pts if leq(p, gap)), key=lambda p: sum(p))
            b = min((p for p in pts if leq(gap, p)), key=lambda p: sum(p))
            return ("not-order-convex", (a, gap, b))
    comps = _components(pts)
    if len(comps) > 1:
        return ("disconnected", (min(comps[0]), min(comps[1])))
    return None


@dataclass(frozen=True)
class IntervalSupport:
    """Validated interval support; construction fails on bad point sets."""

    points: frozenset

    def __init__(self, points, _trusted: bool = False):
        pts = frozenset(tuple(int(c) for c in p) for p in points)
        if not _trusted:
            defect = interval_defect(pts)
            if defect is not None:
                raise NotAnIntervalError(f"not an interval support: {defect[0]} {defect[1]}")
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return _ambient_dim(self.points)

    def __contains__(self, pt) -> bool:
        return tuple(pt) in self.points

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(sorted(self.points))

    def bounding_box(self) -> tuple[Point, Point]:
        n = self.n
        lo = tuple(min(p[j] for p in self.points) for j in range(n))
        hi = tuple(max(p[j] for p in self.points) for j in range(n))
        return lo, hi


@dataclass(frozen=True)
class Rectangle:
    """The support {lo <= x <= hi}; the basic box-shaped interval."""

    lo: Point
    hi: Point

    def __post_init__(self):
        lo = tuple(int(c) for c in self.lo)
        hi = tuple(int(c) for c in self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if len(lo) != len(hi) or not leq(lo, hi):
            raise ValueError(f"bad rectangle corners {lo}, {hi}")

    @property
    def n(self) -> int:
        return len(self.lo)

    def support(self) -> IntervalSupport:
        return IntervalSupport(box_points(self.lo, self.hi), _trusted=True)


def check_interval(points) -> IntervalSupport | None:
    """The validated support, or None (see interval_defect for the witness)."""
    if interval_defect(points) is not None:
        return None
    return IntervalSupport(points, _trusted=True)


# -- components and viability --------------------------------------------------


@dataclass(frozen=True)
class Witness:
    beta: Point
    alpha: Point
    side: str  # "M-side": beta in Supp(M)\Supp(N) below alpha;  "N-side": above


@dataclass(frozen=True)
class Component:
    points: frozenset
    viable: bool
    witness: Witness | None


@dataclass(frozen=True)
class ComponentReport:
    components: tuple

    @property
    def viable_count(self) -> int:
        return sum(1 for c in self.components if c.viable)

    def __len__(self):
        return len(self.components)


def _find_witness(comp: frozenset, first_diff: frozenset, second_diff: frozenset) -> Witness | None:
    """Lexicographically least witness pair, trying the M side first."""
    for beta in sorted(first_diff):
        alphas = [a for a in comp if lt(beta, a)]
        if alphas:
            return Witness(beta, min(alphas), "M-side")
    for beta in sorted(second_diff):
        alphas = [a for a in comp if lt(a, beta)]
        if alphas:
            return Witness(beta, min(alphas), "N-side")
    return None


def intersect_components(a: IntervalSupport, b: IntervalSupport) -> ComponentReport:
    """Connected components of the overlap, each flagged viable or not.

    A component is spoiled by a point of one support sticking out of the other
    strictly below it (M side) or strictly above it (N side); a spoiled
    component carries a concrete witness pair.
    """
    if a.n != b.n:
        raise ValueError("supports in different ambient dimensions")
    inter = a.points & b.points
    if not inter:
        return ComponentReport(())
    a_only = a.points - b.points
    b_only = b.points - a.points
    all_pts = a.points | b.points
    n = a.n
    lo = tuple(min(p[j] for p in all_pts) for j in range(n))
    hi = tuple(max(p[j] for p in all_pts) for j in range(n))
    above_a_only = _strict_shadow(a_only, lo, hi, upward=True)   # points with a-only strictly below
    below_b_only = _strict_shadow(b_only, lo, hi, upward=False)  # points with b-only strictly above
    comps = []
    for comp in _components(inter):
        bad = any(p in above_a_only or p in below_b_only for p in comp)
        witness = _find_witness(comp, a_only, b_only) if bad else None
        comps.append(Component(comp, not bad, witness))
    return ComponentReport(tuple(comps))


def hom_dim_intervals(a: IntervalSupport, b: IntervalSupport) -> int:
    """Dimension of the space of maps between the two interval modules,
    counted combinatorially as the number of viable overlap components."""
    return intersect_components(a, b).viable_count


# -- extremal elements and envelopes -------------------------------------------


def minimal_elements(s: IntervalSupport) -> frozenset:
    """Points with no strictly smaller point in the support."""
    lo, hi = s.bounding_box()
    shadow = _strict_shadow(s.points, lo, hi, upward=True)
    return frozenset(p for p in s.points if p not in shadow)


def maximal_elements(s: IntervalSupport) -> frozenset:
    lo, hi = s.bounding_box()
    shadow = _strict_shadow(s.points, lo, hi, upward=False)
    return frozenset(p for p in s.points if p not in shadow)


def upper_envelope(s: IntervalSupport) -> tuple[IntervalSupport, Point]:
    """Close the support upward toward its componentwise maximum corner.

    Returns ({g : exists a in s with a <= g <= corner}, corner).
    """
    lo, hi = s.bounding_box()
    corner = hi
    weak_above = set(s.points) | _strict_shadow(s.points, lo, hi, upward=True)
    pts = [g for g in box_points(lo, hi) if g in weak_above and leq(g, corner)]
    return IntervalSupport(pts, _trusted=True), corner


def lower_envelope(s: IntervalSupport) -> tuple[IntervalSupport, Point]:
    """Close the support downward toward its componentwise minimum corner."""
    lo, hi = s.bounding_box()
    corner = lo
    weak_below = set(s.points) | _strict_shadow(s.points, lo, hi, upward=False)
    pts = [g for g in box_points(lo, hi) if g in weak_below and leq(corner, g)]
    return IntervalSupport(pts, _trusted=True), corner


# -- interval modules and canonical homs ---------------------------------------


def interval_module(s: IntervalSupport | Rectangle, field: Field) -> PersistenceModule:
    """One-dimensional spaces over the support, identity maps inside it."""
    if isinstance(s, Rectangle):
        s = s.support()
    one = Matrix.identity(field, 1)
    dims = {p: 1 for p in s.points}
    edges = {}
    for p in s.points:
        for j in range(s.n):
            if step(p, j) in s.points:
                edges[(p, j)] = one
    return PersistenceModule(field, s.n, dims, edges)


def canonical_hom_blocks(a: IntervalSupport, b: IntervalSupport, component_index: int, field: Field) -> dict:
    """Blocks of the hom that is 1 on the indexed viable component, 0 elsewhere."""
    report = intersect_components(a, b)
    if not 0 <= component_index < len(report.components):
        raise IndexError(f"component index {component_index} out of range")
    comp = report.components[component_index]
    if not comp.viable:
        raise ValueError(f"component {component_index} is not viable: witness {comp.witness}")
    one = Matrix.identity(field, 1)
    return {p: one for p in comp.points}
