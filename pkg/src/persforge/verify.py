"""Randomized instance generators and the batch verification harness.

Every generator takes an explicit ``random.Random`` so that suites are
reproducible from a single seed and any failing instance can be replayed
bit-exactly.
"""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field as dc_field

from .exactfield import Field, Matrix, inverse
from .intervals import IntervalSupport, Rectangle
from .pmodule import PersistenceModule, direct_sum_list, validate
from . import intervals as iv


# -- random instances ----------------------------------------------------------


def random_interval_support(rng, width: int, height: int) -> IntervalSupport:
    """Random 2D staircase support inside a width x height box.

    Column ranges [f(x), g(x)] with both envelopes non-increasing and sampled
    so that consecutive columns share a row; this parameterizes exactly the
    connected order-convex subsets of the grid.
    """
    x0 = rng.randrange(width)
    x1 = rng.randrange(x0, width)
    cols = list(range(x0, x1 + 1))
    g_top = height - 1
    g = []
    cur = rng.randint(0, g_top)
    for _ in cols:
        g.append(cur)
        cur = rng.randint(0, cur)
    f = []
    prev_f = None
    for i, x in enumerate(cols):
        hi_bound = g[i] if prev_f is None else min(prev_f, g[i])
        lo = rng.randint(0, hi_bound)
        f.append(lo)
        prev_f = lo
    # repair connectivity: column x+1 must reach up to at least f(x)
    for i in range(1, len(cols)):
        if g[i] < f[i - 1]:
            g[i] = f[i - 1]
    # repairs may break monotonicity of g only by pushing values up toward a
    # feasible staircase; re-enforce from the left
    for i in range(1, len(cols)):
        if g[i] > g[i - 1]:
            g[i] = g[i - 1]
        if g[i] < f[i]:
            # give up on this column split; clamp f down
            f[i] = g[i]
    for i in range(1, len(cols)):
        if f[i] > f[i - 1]:
            f[i] = f[i - 1]
        if g[i] < f[i - 1]:
            g[i] = f[i - 1]
    pts = [(x, y) for i, x in enumerate(cols) for y in range(f[i], g[i] + 1)]
    return IntervalSupport(pts)


def random_rect_list(rng, n: int, max_summands: int, cmax: int) -> list[Rectangle]:
    m = rng.randint(1, max_summands)
    out = []
    for _ in range(m):
        lo = tuple(rng.randint(0, cmax) for _ in range(n))
        hi = tuple(rng.randint(c, cmax) for c in lo)
        out.append(Rectangle(lo, hi))
    return out


def random_zigzag(rng, field: Field, max_len: int = 6, max_intervals: int = 3):
    from .pmodule import zigzag_from_intervals

    L = rng.randint(1, max_len)
    orientations = "".join(rng.choice("fb") for _ in range(L - 1))
    k = rng.randint(1, max_intervals)
    intervals = []
    for _ in range(k):
        a = rng.randrange(L)
        b = rng.randrange(a, L)
        intervals.append((a, b))
    return zigzag_from_intervals(field, L, orientations, intervals)


def random_invertible(rng, field: Field, d: int) -> Matrix:
    while True:
        mat = Matrix(field, d, d, [[field.rand(rng) for _ in range(d)] for _ in range(d)])
        if inverse(mat) is not None:
            return mat


def conjugate_module(rng, m: PersistenceModule) -> PersistenceModule:
    """Random graded basis change; preserves validity and all hom dimensions."""
    field = m.field
    U = {pt: random_invertible(rng, field, d) for pt, d in m.dims.items()}
    Uinv = {pt: inverse(mat) for pt, mat in U.items()}
    edges = {}
    for (pt, j), mat in m.edges.items():
        tgt = pt[:j] + (pt[j] + 1,) + pt[j + 1 :]
        edges[(pt, j)] = U[tgt] @ mat @ Uinv[pt]
    return PersistenceModule(field, m.n, dict(m.dims), edges)


def random_conjugated_module(rng, field: Field, box=(3, 3), max_summands: int = 3,
                             total_dim_cap: int | None = None) -> PersistenceModule:
    """Random validated module: a sum of staircase intervals in a disguised basis."""
    w, h = box[0] + 1, box[1] + 1
    while True:
        k = rng.randint(1, max_summands)
        summands = [random_interval_support(rng, w, h) for _ in range(k)]
        total = sum(len(s) for s in summands)
        if total_dim_cap is None or total <= total_dim_cap:
            break
    mods = [iv.interval_module(s, field) for s in summands]
    return conjugate_module(rng, direct_sum_list(mods))
