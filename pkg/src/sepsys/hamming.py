"""Hamming-space convexity.

Segments, the three equivalent convex-hull constructions, coordinate
half-spaces, and the separation witness for a point outside a hull.
All words are tuples of small ints; binary words additionally admit a
packed integer representation (bit i = coordinate i) for popcount-based
fast paths.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .errors import GuardExceeded, SepsysError

Word = tuple[int, ...]

#: Refuse whole-space enumerations above this many words unless overridden.
DEFAULT_GUARD = 2**24


@dataclass(frozen=True)
class HammingSpace:
    """The ambient space: length-n sequences over the alphabet {0..q-1}."""

    q: int
    n: int

    def __post_init__(self):
        if self.q < 2:
            raise SepsysError(f"alphabet size must be >= 2, got {self.q}")
        if self.n < 1:
            raise SepsysError(f"length must be >= 1, got {self.n}")

    @property
    def size(self) -> int:
        return self.q**self.n

    def check_word(self, w: Sequence[int]) -> Word:
        w = tuple(w)
        if len(w) != self.n:
            raise SepsysError(f"word length {len(w)} != space length {self.n}")
        for s in w:
            if not 0 <= s < self.q:
                raise SepsysError(f"symbol {s} outside alphabet 0..{self.q - 1}")
        return w

    def words(self, guard: int = DEFAULT_GUARD) -> Iterator[Word]:
        """Enumerate all q^n words in lexicographic order (guarded)."""
        if self.size > guard:
            raise GuardExceeded(
                f"enumeration of {self.q}^{self.n} words exceeds guard {guard}"
            )
        return itertools.product(range(self.q), repeat=self.n)


def distance(x: Word, y: Word) -> int:
    """Hamming distance."""
    if len(x) != len(y):
        raise SepsysError("length mismatch")
    return sum(a != b for a, b in zip(x, y))


def pack(w: Word) -> int:
    """Pack a binary word into an int, coordinate 0 at the most
    significant bit, so integer order matches word lexicographic order."""
    v = 0
    for s in w:
        v = (v << 1) | s
    return v


def unpack(v: int, n: int) -> Word:
    return tuple((v >> (n - 1 - i)) & 1 for i in range(n))


@dataclass(frozen=True)
class HalfSpace:
    """The words whose i-th symbol differs from `excluded` (coordinate 0-based)."""

    coordinate: int
    excluded: int

    def contains(self, w: Word) -> bool:
        return w[self.coordinate] != self.excluded

    def members(self, space: HammingSpace, guard: int = DEFAULT_GUARD) -> frozenset[Word]:
        return frozenset(w for w in space.words(guard) if self.contains(w))


@dataclass(frozen=True)
class ProjectionHull:
    """A Hamming convex hull as a per-coordinate product of symbol sets.

    Membership and cardinality are O(n); the member set is the product
    A_1 x ... x A_n and is enumerated only on request, under a guard.
    """

    space: HammingSpace
    sets: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.sets) != self.space.n:
            raise SepsysError("coordinate count mismatch")
        if any(not a for a in self.sets):
            raise SepsysError("empty coordinate set in projection hull")

    @property
    def cardinality(self) -> int:
        c = 1
        for a in self.sets:
            c *= len(a)
        return c

    def contains(self, w: Word) -> bool:
        w = self.space.check_word(w)
        return all(s in a for s, a in zip(w, self.sets))

    def members(self, guard: int = DEFAULT_GUARD) -> frozenset[Word]:
        if self.cardinality > guard:
            raise GuardExceeded(
                f"hull has {self.cardinality} members, exceeds guard {guard}"
            )
        return frozenset(itertools.product(*(sorted(a) for a in self.sets)))


def segment(space: HammingSpace, x: Word, y: Word) -> ProjectionHull:
    """The segment [x, y]: per coordinate, the symbol pair {x_i, y_i}.

    Its member set equals { z | d(x,z) + d(z,y) = d(x,y) }.
    """
    x = space.check_word(x)
    y = space.check_word(y)
    return ProjectionHull(space, tuple(frozenset((a, b)) for a, b in zip(x, y)))


def hull_p3(space: HammingSpace, words: Iterable[Word]) -> ProjectionHull:
    """Convex hull as the product of coordinate projections of the generators."""
    ws = [space.check_word(w) for w in words]
    if not ws:
        raise SepsysError("hull of an empty generator set")
    return ProjectionHull(
        space, tuple(frozenset(w[i] for w in ws) for i in range(space.n))
    )


def hull_p2(
    space: HammingSpace, words: Sequence[Word], guard: int = DEFAULT_GUARD
) -> frozenset[Word]:
    """Convex hull by the recursive segment construction.

    hull(x1) = {x1}; hull(x1..xm) = union over x in hull(x1..x_{m-1})
    of the members of [x, xm].  Enumerates explicitly, so guarded.
    """
    ws = [space.check_word(w) for w in words]
    if not ws:
        raise SepsysError("hull of an empty generator set")
    if space.size > guard:
        raise GuardExceeded(f"space size {space.size} exceeds guard {guard}")
    acc: frozenset[Word] = frozenset({ws[0]})
    for w in ws[1:]:
        nxt: set[Word] = set()
        for x in acc:
            nxt.update(segment(space, x, w).members(guard))
        acc = frozenset(nxt)
    return acc


def hull_p1(
    space: HammingSpace, words: Sequence[Word], guard: int = DEFAULT_GUARD
) -> frozenset[Word]:
    """Convex hull as the intersection of all half-spaces containing the generators."""
    ws = [space.check_word(w) for w in words]
    if not ws:
        raise SepsysError("hull of an empty generator set")
    candidates = list(space.words(guard))
    for i in range(space.n):
        seen = {w[i] for w in ws}
        for alpha in range(space.q):
            if alpha in seen:
                continue
            # half-space H_{i,alpha} contains every generator; intersect
            candidates = [w for w in candidates if w[i] != alpha]
    return frozenset(candidates)


def hull_contains(hull: ProjectionHull, w: Word) -> bool:
    return hull.contains(w)


def hahn_banach_witness(hull: ProjectionHull, w: Word) -> Optional[int]:
    """Separating coordinate for a word outside a hull, 1-based.

    Returns the smallest coordinate i with w_i outside the hull's i-th
    symbol set, or None when the word lies inside.
    """
    w = hull.space.check_word(w)
    for i, (s, a) in enumerate(zip(w, hull.sets)):
        if s not in a:
            return i + 1
    return None


def _binary_round(space: HammingSpace, current: set[int], hull_members: list[int]) -> set[int]:
    """One saturation round on packed binary words: all z covered by some segment."""
    arr = np.fromiter(current, dtype=np.int64, count=len(current))
    out = set()
    for z in hull_members:
        if z in current:
            out.add(z)
            continue
        v = arr ^ z
        if np.any((v[:, None] & v[None, :]) == 0):
            out.add(z)
    return out


def _generic_round(current: set[Word], hull_members: list[Word]) -> set[Word]:
    out = set()
    pts = list(current)
    for z in hull_members:
        if z in current:
            out.add(z)
            continue
        found = False
        for i, x in enumerate(pts):
            for y in pts[i:]:
                if all(c in (a, b) for c, a, b in zip(z, x, y)):
                    found = True
                    break
            if found:
                break
        if found:
            out.add(z)
    return out


def saturation_depth(
    space: HammingSpace, words: Sequence[Word], guard: int = DEFAULT_GUARD
) -> int:
    """Number of segment-saturation rounds needed to reach the hull.

    Starting from K_0 = S and K_{i+1} = union of [x, y] over x, y in K_i,
    returns the least k with K_k = hull(S).  Always <= ceil(log2 |S|).
    """
    ws = [space.check_word(w) for w in words]
    if not ws:
        raise SepsysError("saturation depth of an empty set")
    hull = hull_p3(space, ws)
    target = hull.cardinality
    members = sorted(hull.members(guard))
    depth = 0
    if space.q == 2:
        cur = {pack(w) for w in ws}
        packed = [pack(w) for w in members]
        while len(cur) < target:
            cur = _binary_round(space, cur, packed)
            depth += 1
    else:
        cur = set(ws)
        while len(cur) < target:
            cur = _generic_round(cur, members)
            depth += 1
    return depth
