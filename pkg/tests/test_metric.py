import itertools

import pytest

from sepsys import hamming
from sepsys.errors import SepsysError
from sepsys.metric import (
    FiniteMetricSpace,
    from_edges,
    from_hamming,
    hull_fixpoint,
    is_convex,
    k32_space,
    segment_generic,
)


def brute_segment(space, x, y):
    """Independent oracle: scan every point against the triangle equality."""
    dxy = space.dist[x, y]
    return {z for z in space.points if space.dist[x, z] + space.dist[z, y] == dxy}


@pytest.fixture
def k32():
    return k32_space()


class TestGraphLoading:
    def test_k32_has_five_points_and_distance_two(self, k32):
        assert len(k32.points) == 5
        assert k32.d("x", "y") == 2

    def test_single_edge(self):
        sp = from_edges([("a", "b")])
        assert len(sp.points) == 2
        assert sp.d("a", "b") == 1

    def test_triangle_all_distances_one(self):
        sp = from_edges([("a", "b"), ("b", "c"), ("a", "c")])
        for p, q in itertools.combinations(sp.points, 2):
            assert sp.d(p, q) == 1

    def test_disconnected_rejected(self):
        with pytest.raises(SepsysError, match="disconnected"):
            from_edges([("a", "b"), ("c", "d")])

    def test_self_loop_rejected(self):
        with pytest.raises(SepsysError, match="self-loop"):
            from_edges([("a", "a")])

    def test_duplicate_edge_rejected(self):
        with pytest.raises(SepsysError, match="duplicate"):
            from_edges([("a", "b"), ("b", "a")])


class TestSegment:
    def test_k32_segment_xy(self, k32):
        assert segment_generic(k32, "x", "y") == {"x", "y", "top", "bottom"}
        assert segment_generic(k32, "x", "y") == brute_segment(k32, "x", "y")

    def test_degenerate_segment_is_singleton(self, k32):
        assert segment_generic(k32, "x", "x") == {"x"}

    def test_path_graph_midpoint(self):
        sp = from_edges([("a", "b"), ("b", "c")])
        assert segment_generic(sp, "a", "c") == {"a", "b", "c"}

    def test_unknown_point(self, k32):
        with pytest.raises(SepsysError, match="unknown point"):
            segment_generic(k32, "x", "nope")

    def test_endpoints_always_inside(self, k32):
        for x, y in itertools.combinations(k32.points, 2):
            seg = segment_generic(k32, x, y)
            assert {x, y} <= seg


class TestConvexity:
    def test_k32_segment_not_convex(self, k32):
        assert not is_convex(k32, {"x", "y", "top", "bottom"})

    def test_whole_space_convex(self, k32):
        assert is_convex(k32, k32.points)

    def test_singleton_convex(self, k32):
        assert is_convex(k32, {"x"})

    def test_unknown_member_rejected(self, k32):
        with pytest.raises(SepsysError):
            is_convex(k32, {"x", "nope"})


class TestHullFixpoint:
    def test_k32_xy_hull_and_depth(self, k32):
        hull, depth = hull_fixpoint(k32, {"x", "y"})
        assert hull == set(k32.points)
        assert depth == 2

    def test_singleton(self, k32):
        assert hull_fixpoint(k32, {"x"}) == (frozenset({"x"}), 0)

    def test_empty_set_convention(self, k32):
        assert hull_fixpoint(k32, set()) == (frozenset(), 0)

    def test_hamming_square_depth_one(self):
        sp = from_hamming(hamming.HammingSpace(2, 2))
        hull, depth = hull_fixpoint(sp, {(0, 0), (1, 1)})
        assert hull == set(sp.points)
        assert depth == 1

    def test_strict_inclusion_reproduced(self, k32):
        seg = segment_generic(k32, "x", "y")
        hull, _ = hull_fixpoint(k32, {"x", "y"})
        assert seg < hull

    def test_hull_is_convex_and_minimal(self, k32):
        # minimality checked exhaustively: every convex superset contains the hull
        for size in (1, 2, 3):
            for gen in itertools.combinations(k32.points, size):
                hull, _ = hull_fixpoint(k32, gen)
                assert is_convex(k32, hull)
                for sup in itertools.combinations(k32.points, len(hull)):
                    sset = set(sup)
                    if set(gen) <= sset and is_convex(k32, sset):
                        assert hull <= sset

    def test_segment_between_endpoints_and_hull(self, k32):
        for x, y in itertools.combinations(k32.points, 2):
            seg = segment_generic(k32, x, y)
            hull, _ = hull_fixpoint(k32, {x, y})
            assert {x, y} <= seg <= hull


class TestHammingCrossModule:
    @pytest.mark.parametrize("q,n", [(2, 2), (2, 3), (3, 2)])
    def test_fixpoint_matches_projection_hull(self, q, n):
        hs = hamming.HammingSpace(q, n)
        sp = from_hamming(hs)
        words = list(hs.words())
        for gen in itertools.combinations(words, 2):
            hull, _ = hull_fixpoint(sp, gen)
            assert hull == hamming.hull_p3(hs, gen).members()


class TestValidation:
    def test_triangle_violation_rejected(self):
        pts = ("a", "b", "c")
        dist = {}
        vals = {("a", "b"): 1, ("a", "c"): 5, ("b", "c"): 1}
        for (p, q), v in vals.items():
            dist[p, q] = dist[q, p] = v
        for p in pts:
            dist[p, p] = 0
        with pytest.raises(SepsysError, match="triangle"):
            FiniteMetricSpace(pts, dist)

    def test_asymmetry_rejected(self):
        dist = {("a", "a"): 0, ("b", "b"): 0, ("a", "b"): 1, ("b", "a"): 2}
        with pytest.raises(SepsysError, match="asymmetric"):
            FiniteMetricSpace(("a", "b"), dist)
