"""Shipped test fixtures: hand-built supports and modules with known facts.

Each fixture freezes a configuration whose structural properties (component
counts, viability witnesses, extremal elements, envelope corners, layer
contents) are asserted exactly by the test-suite and the CLI verification
harness.
"""

from __future__ import annotations

from .exactfield import Field
from .intervals import IntervalSupport, Rectangle


def _staircase(columns: dict[int, tuple[int, int]]) -> IntervalSupport:
    pts = [(x, y) for x, (lo, hi) in columns.items() for y in range(lo, hi + 1)]
    return IntervalSupport(pts)


def overlap_pair() -> tuple[IntervalSupport, IntervalSupport]:
    """Two staircase supports whose overlap has three components.

    Exactly one component (the rightmost, {(4,0),(5,0)}) is viable.  The
    leftmost component {(1,5)} is spoiled from above by (1,6), which only the
    second support contains; the middle one is spoiled from below by (2,1),
    which only the first support contains.
    """
    m = _staircase({1: (5, 5), 2: (1, 5), 3: (1, 2), 4: (0, 1), 5: (0, 0)})
    n = _staircase({1: (2, 7), 2: (2, 3), 3: (0, 2), 4: (0, 0), 5: (0, 0)})
    return m, n


def three_rectangles_1d() -> list[Rectangle]:
    """The three-bar module: bars [3,3], [0,4], [1,2], in this order."""
    return [Rectangle((3,), (3,)), Rectangle((0,), (4,)), Rectangle((1,), (2,))]


def staircase_three_minima() -> IntervalSupport:
    """Staircase whose minimal elements are (0,4), (1,2), (2,0); both
    coordinates reach 4 but the corner (4,4) is outside the support."""
    return _staircase({0: (4, 4), 1: (2, 4), 2: (0, 3), 3: (0, 2), 4: (0, 1)})


def staircase_three_maxima() -> IntervalSupport:
    """Staircase whose maximal elements are (2,4), (3,2), (4,0); both
    coordinate minima are 0 but the corner (0,0) is outside the support."""
    return _staircase({0: (3, 4), 1: (2, 4), 2: (1, 4), 3: (0, 2), 4: (0, 0)})


def zigzag_placements() -> list[tuple[str, list[tuple[int, int]]]]:
    """Three zigzag fixtures: orientation string plus interval summands."""
    return [
        ("ffffb", [(0, 5), (2, 5), (1, 3)]),
        ("bffbf", [(0, 2), (1, 5), (3, 4)]),
        ("fbfbb", [(0, 4), (1, 3), (2, 5)]),
    ]
