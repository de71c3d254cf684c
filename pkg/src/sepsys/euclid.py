"""Euclidean epsilon-(2,1)-separation via angles.

A point set is epsilon-(2,1)-separating exactly when every angle formed
by three of its points is strictly less than (1-epsilon)*pi; at
epsilon = 1/2 this is the acute-set property.  Includes the unit-cube
embedding of binary codes, the dot-product identity tying cube triples
to Hamming separating coordinates, and a Monte Carlo estimator of the
separating-direction fraction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .errors import SepsysError
from .separation import separating_coordinates
from .hamming import Word

Point = tuple  # coordinates: Fraction/int (exact) or float

DEFAULT_TOL = 1e-9

HALF = Fraction(1, 2)


def _sub(a: Point, b: Point) -> tuple:
    if len(a) != len(b):
        raise SepsysError("dimension mismatch")
    return tuple(x - y for x, y in zip(a, b))


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _is_exact(*points: Point) -> bool:
    return all(isinstance(c, (int, Fraction)) for p in points for c in p)


def _antiparallel(a, b) -> bool:
    """Whether b points exactly opposite to a (exact arithmetic)."""
    if _dot(a, b) >= 0:
        return False
    # proportionality: a_i * b_j == a_j * b_i for all i < j
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            if a[i] * b[j] != a[j] * b[i]:
                return False
    return True


def signed_cos2(x: Point, y: Point, z: Point):
    """sign(cos) * cos^2 of the angle at z, exact when inputs are rational.

    Monotone in the cosine, so usable as an exact comparison key.
    """
    a = _sub(x, z)
    b = _sub(y, z)
    na = _dot(a, a)
    nb = _dot(b, b)
    if na == 0 or nb == 0:
        raise SepsysError("coincident points in angle")
    d = _dot(a, b)
    if _is_exact(x, y, z):
        return Fraction(d * abs(d), na * nb)
    return d * abs(d) / (na * nb)


def angle_classification(
    x: Point, y: Point, z: Point, epsilon: Fraction, tol: float = DEFAULT_TOL
) -> bool:
    """True when the angle at apex z is strictly less than (1-epsilon)*pi.

    epsilon = 1/2 uses the exact dot-product sign test; epsilon = 0 uses
    an exact anti-parallelism test; other thresholds compare cosines in
    floating point (within-tol boundary counts as failing, keeping the
    comparison strict).
    """
    epsilon = Fraction(epsilon)
    a = _sub(x, z)
    b = _sub(y, z)
    if _dot(a, a) == 0 or _dot(b, b) == 0 or _dot(_sub(x, y), _sub(x, y)) == 0:
        raise SepsysError("coincident points in angle test")
    exact = _is_exact(x, y, z)
    if epsilon == HALF and exact:
        return _dot(a, b) > 0
    if epsilon == 0 and exact:
        return not _antiparallel(a, b)
    na = math.sqrt(float(_dot(a, a)))
    nb = math.sqrt(float(_dot(b, b)))
    cos_angle = float(_dot(a, b)) / (na * nb)
    cos_threshold = math.cos((1 - float(epsilon)) * math.pi)
    return cos_angle > cos_threshold + tol


@dataclass(frozen=True)
class AngleReport:
    """Verdict of an epsilon-(2,1) check with the worst (largest) angle found."""

    epsilon: Fraction
    separating: bool
    worst: Optional[tuple[Point, Point, Point]] = None  # (x, y, apex)

    def to_json(self) -> dict:
        worst = None
        if self.worst is not None:
            worst = {
                "x": [str(c) for c in self.worst[0]],
                "y": [str(c) for c in self.worst[1]],
                "apex": [str(c) for c in self.worst[2]],
            }
        return {
            "epsilon": str(self.epsilon),
            "separating": self.separating,
            "worst_triple": worst,
        }


def is_eps_21_separating(
    points: Sequence[Point], epsilon: Fraction = HALF, tol: float = DEFAULT_TOL
) -> AngleReport:
    """Check every angle of the point set against the (1-epsilon)*pi bound.

    Sets with fewer than three points pass vacuously.  The reported
    worst triple maximizes the angle (minimizes the signed squared
    cosine), ties broken by enumeration order.
    """
    epsilon = Fraction(epsilon)
    pts = [tuple(p) for p in points]
    if len(set(pts)) != len(pts):
        raise SepsysError("duplicate points")
    if len(pts) < 3:
        return AngleReport(epsilon, True)
    worst = None
    worst_key = None
    ok = True
    for k, z in enumerate(pts):
        for i in range(len(pts)):
            if i == k:
                continue
            for j in range(i + 1, len(pts)):
                if j == k:
                    continue
                x, y = pts[i], pts[j]
                key = signed_cos2(x, y, z)
                if worst_key is None or key < worst_key:
                    worst_key = key
                    worst = (x, y, z)
                if not angle_classification(x, y, z, epsilon, tol):
                    ok = False
    return AngleReport(epsilon, ok, worst)


def embed_cube(words: Sequence[Word]) -> list[Point]:
    """Binary words as 0/1 vertices of the unit cube."""
    out = []
    for w in words:
        if any(s not in (0, 1) for s in w):
            raise SepsysError("cube embedding requires a binary code")
        out.append(tuple(int(s) for s in w))
    return out


def bridge_check(x: Word, y: Word, z: Word) -> tuple[int, int, bool]:
    """Cube-vertex identity: <x-z, y-z> vs the separating-coordinate count.

    Returns (dot, count, dot == count); the two always agree, which is
    what makes cube acute sets and binary (2,1)-separating codes the
    same objects.
    """
    for w in (x, y, z):
        if any(s not in (0, 1) for s in w):
            raise SepsysError("bridge check requires binary words")
    if len({tuple(x), tuple(y), tuple(z)}) != 3:
        raise SepsysError("bridge check requires three distinct words")
    px, py, pz = embed_cube([x, y, z])
    dot = _dot(_sub(px, pz), _sub(py, pz))
    count = len(separating_coordinates([tuple(x), tuple(y)], [tuple(z)]))
    return dot, count, dot == count


def _to_r3(x: Point, y: Point, z: Point) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Express the triple in a 3-space containing its plane."""
    ax = np.array([[float(c) for c in p] for p in (x, y, z)])
    dim = ax.shape[1]
    if dim == 3:
        return ax[0], ax[1], ax[2]
    if dim < 3:
        pad = np.zeros((3, 3 - dim))
        ax = np.hstack([ax, pad])
        return ax[0], ax[1], ax[2]
    # orthonormal basis of the plane through the triple, in floats
    u = ax[0] - ax[2]
    v = ax[1] - ax[2]
    basis = []
    for vec in (u, v):
        for b in basis:
            vec = vec - (vec @ b) * b
        norm = np.linalg.norm(vec)
        if norm > 1e-12:
            basis.append(vec / norm)
    while len(basis) < 3:
        # any unit vector completing the basis; separation is insensitive
        # to components orthogonal to the plane
        for k in range(dim):
            cand = np.zeros(dim)
            cand[k] = 1.0
            for b in basis:
                cand = cand - (cand @ b) * b
            norm = np.linalg.norm(cand)
            if norm > 1e-6:
                basis.append(cand / norm)
                break
    basis_m = np.array(basis[:3])
    origin = ax[2]
    proj = (ax - origin) @ basis_m.T
    return proj[0], proj[1], proj[2]


def mc_separating_fraction(
    x: Point, y: Point, z: Point, samples: int, seed: int = 0
) -> float:
    """Monte Carlo fraction of unit directions separating z from [x, y].

    A direction u separates when <u, z> falls strictly outside the
    interval spanned by <u, x> and <u, y>.  The estimate converges to
    1 - angle(x, z, y)/pi.  Directions are isotropic Gaussian samples;
    deterministic under the seed.
    """
    if samples < 1:
        raise SepsysError("need at least one sample")
    px, py, pz = _to_r3(x, y, z)
    if np.allclose(px, pz) or np.allclose(py, pz) or np.allclose(px, py):
        raise SepsysError("degenerate triple")
    rng = np.random.default_rng(seed)
    u = rng.standard_normal((samples, 3))
    sx = u @ px
    sy = u @ py
    sz = u @ pz
    lo = np.minimum(sx, sy)
    hi = np.maximum(sx, sy)
    sep = (sz < lo) | (sz > hi)
    return float(np.count_nonzero(sep)) / samples


def angle_at(x: Point, y: Point, z: Point) -> float:
    """The angle at apex z in radians (float)."""
    a = _sub(x, z)
    b = _sub(y, z)
    na = math.sqrt(float(_dot(a, a)))
    nb = math.sqrt(float(_dot(b, b)))
    if na == 0 or nb == 0:
        raise SepsysError("coincident points in angle")
    c = max(-1.0, min(1.0, float(_dot(a, b)) / (na * nb)))
    return math.acos(c)
