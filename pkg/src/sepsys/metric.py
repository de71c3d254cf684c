"""Convexity in generic finite metric spaces.

Segments by the triangle-equality test, convexity checks, and hulls by
fixpoint saturation.  Distances are exact rationals (ints for graph
metrics), so every membership test is an exact equality.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable

from . import hamming
from .errors import SepsysError

Point = Hashable


@dataclass(frozen=True)
class FiniteMetricSpace:
    """A finite point set with an exact distance matrix.

    Validates symmetry, positivity and the triangle inequality on
    construction (O(|points|^3); these spaces are small by design).
    """

    points: tuple[Point, ...]
    dist: dict = field(compare=False)

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            raise SepsysError("duplicate point identifiers")
        pts = self.points
        d = self.dist
        for p in pts:
            if d[p, p] != 0:
                raise SepsysError(f"d({p},{p}) != 0")
        for p, q in itertools.combinations(pts, 2):
            if d[p, q] != d[q, p]:
                raise SepsysError(f"asymmetric distance between {p} and {q}")
            if d[p, q] <= 0:
                raise SepsysError(f"non-positive distance between {p} and {q}")
        for p, q, r in itertools.permutations(pts, 3):
            if d[p, r] > d[p, q] + d[q, r]:
                raise SepsysError(f"triangle inequality fails on ({p},{q},{r})")

    def d(self, p: Point, q: Point):
        self._check(p)
        self._check(q)
        return self.dist[p, q]

    def _check(self, p: Point):
        if p not in self.dist_index:
            raise SepsysError(f"unknown point {p!r}")

    @property
    def dist_index(self) -> frozenset:
        return frozenset(self.points)


def segment_generic(space: FiniteMetricSpace, x: Point, y: Point) -> frozenset:
    """All z with d(x,z) + d(z,y) = d(x,y); always contains x and y."""
    dxy = space.d(x, y)
    return frozenset(
        z for z in space.points if space.dist[x, z] + space.dist[z, y] == dxy
    )


def is_convex(space: FiniteMetricSpace, members: Iterable[Point]) -> bool:
    """Whether the set contains the segment of each of its point pairs."""
    k = set(members)
    unknown = k - set(space.points)
    if unknown:
        raise SepsysError(f"points not in space: {sorted(map(str, unknown))}")
    return all(
        segment_generic(space, x, y) <= k for x, y in itertools.combinations(k, 2)
    )


def hull_fixpoint(
    space: FiniteMetricSpace, members: Iterable[Point]
) -> tuple[frozenset, int]:
    """Least convex superset by segment saturation, with the round count.

    Iterates K_{i+1} = union of segments over pairs of K_i until stable;
    returns (hull, depth) where depth is the least k with K_k stable.
    The hull of the empty set is the empty set, by convention.
    """
    cur = frozenset(members)
    if not cur:
        return cur, 0
    unknown = cur - set(space.points)
    if unknown:
        raise SepsysError(f"points not in space: {sorted(map(str, unknown))}")
    depth = 0
    for _ in range(len(space.points) + 1):
        nxt = set(cur)
        for x, y in itertools.combinations(cur, 2):
            nxt |= segment_generic(space, x, y)
        if nxt == cur:
            return cur, depth
        cur = frozenset(nxt)
        depth += 1
    raise SepsysError("saturation failed to stabilize (invalid metric?)")


def from_edges(edges: Iterable[tuple[Point, Point]]) -> FiniteMetricSpace:
    """Metric space of a connected undirected simple graph, with the
    unweighted shortest-path distance."""
    adj: dict[Point, set[Point]] = {}
    seen: set[frozenset] = set()
    for u, v in edges:
        if u == v:
            raise SepsysError(f"self-loop at {u!r}")
        e = frozenset((u, v))
        if e in seen:
            raise SepsysError(f"duplicate edge {u!r}-{v!r}")
        seen.add(e)
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    if not adj:
        raise SepsysError("empty edge list")
    points = tuple(sorted(adj, key=str))
    dist: dict = {}
    for src in points:
        level = {src: 0}
        queue = deque([src])
        while queue:
            p = queue.popleft()
            for q in adj[p]:
                if q not in level:
                    level[q] = level[p] + 1
                    queue.append(q)
        if len(level) != len(points):
            missing = sorted(str(p) for p in set(points) - set(level))
            raise SepsysError(f"graph is disconnected (unreachable: {missing})")
        for q, d in level.items():
            dist[src, q] = d
    return FiniteMetricSpace(points, dist)


def from_hamming(space: hamming.HammingSpace, guard: int = 2**14) -> FiniteMetricSpace:
    """Import a (small) Hamming space as a generic finite metric space."""
    words = list(space.words(guard))
    dist = {
        (x, y): hamming.distance(x, y)
        for x in words
        for y in words
    }
    return FiniteMetricSpace(tuple(words), dist)


K32_EDGES: tuple[tuple[str, str], ...] = (
    ("x", "top"),
    ("x", "bottom"),
    ("y", "top"),
    ("y", "bottom"),
    ("center", "top"),
    ("center", "bottom"),
)


def k32_space() -> FiniteMetricSpace:
    """The complete bipartite graph on {x, y, center} and {top, bottom}.

    The standard example of a graph metric where the segment [x, y] is
    strictly smaller than the convex hull of {x, y}.
    """
    return from_edges(K32_EDGES)
