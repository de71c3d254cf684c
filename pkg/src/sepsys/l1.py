"""Real L1 space: segments are coordinate-wise boxes.

The segment from x to y under the sum-of-absolute-values norm is the
standard box spanned by x and y, so hulls are interval products and
(2,1)-separation asks that no point lie in the box of two others.
Exact rational arithmetic throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import SepsysError

Point = tuple  # exact rational coordinates


def _check_dims(*points: Point) -> int:
    dims = {len(p) for p in points}
    if len(dims) != 1:
        raise SepsysError("dimension mismatch")
    return dims.pop()


def l1_norm(x: Point) -> Fraction:
    return sum((abs(Fraction(c)) for c in x), Fraction(0))


def l1_distance(x: Point, y: Point) -> Fraction:
    _check_dims(x, y)
    return sum((abs(Fraction(a) - Fraction(b)) for a, b in zip(x, y)), Fraction(0))


def l1_segment_contains(x: Point, y: Point, z: Point) -> bool:
    """Whether z lies in the box spanned by x and y.

    Coordinate-wise betweenness; equivalent to the metric condition
    |x-z|_1 + |z-y|_1 = |x-y|_1.
    """
    _check_dims(x, y, z)
    return all(min(a, b) <= c <= max(a, b) for a, b, c in zip(x, y, z))


def l1_segment_contains_metric(x: Point, y: Point, z: Point) -> bool:
    """The triangle-equality form of box membership (independent route)."""
    return l1_distance(x, z) + l1_distance(z, y) == l1_distance(x, y)


def box_hull(points: Sequence[Point]) -> list[tuple[Fraction, Fraction]]:
    """Per-coordinate [min, max] intervals spanned by the points."""
    pts = [tuple(Fraction(c) for c in p) for p in points]
    if not pts:
        raise SepsysError("box hull of an empty set")
    dim = _check_dims(*pts)
    return [
        (min(p[i] for p in pts), max(p[i] for p in pts)) for i in range(dim)
    ]


def box_contains(box: Sequence[tuple[Fraction, Fraction]], z: Point) -> bool:
    if len(box) != len(z):
        raise SepsysError("dimension mismatch")
    return all(lo <= c <= hi for (lo, hi), c in zip(box, z))


@dataclass(frozen=True)
class L1Report:
    separating: bool
    violation: Optional[tuple[Point, Point, Point]] = None  # (x, y, inner z)

    def to_json(self) -> dict:
        viol = None
        if self.violation is not None:
            viol = {
                "x": [str(c) for c in self.violation[0]],
                "y": [str(c) for c in self.violation[1]],
                "inner": [str(c) for c in self.violation[2]],
            }
        return {"separating": self.separating, "violation": viol}


def l1_check_21(points: Sequence[Point]) -> L1Report:
    """(2,1)-separation in L1: no point inside the box of two others."""
    pts = [tuple(Fraction(c) for c in p) for p in points]
    if len(set(pts)) != len(pts):
        raise SepsysError("duplicate points")
    if len(pts) < 3:
        return L1Report(True)
    _check_dims(*pts)
    for k, z in enumerate(pts):
        for i in range(len(pts)):
            if i == k:
                continue
            for j in range(i + 1, len(pts)):
                if j == k:
                    continue
                if l1_segment_contains(pts[i], pts[j], z):
                    return L1Report(False, (pts[i], pts[j], z))
    return L1Report(True)
