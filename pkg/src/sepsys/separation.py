"""(epsilon-)(s,t)-separation of Hamming codes.

A coordinate i separates S from T when the symbol sets S and T show at
position i are disjoint.  A code is (s,t)-separating when every pair of
disjoint subsets of sizes <= s, <= t has at least one separating
coordinate, and epsilon-(s,t)-separating when it has strictly more than
epsilon*n of them.  Also provides the set-system reformulation of the
binary (2,1) case.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import SepsysError
from .hamming import HammingSpace, Word, pack

WordSet = tuple[Word, ...]


@dataclass(frozen=True)
class Code:
    """A finite set of distinct words in one Hamming space."""

    space: HammingSpace
    words: tuple[Word, ...]

    def __post_init__(self):
        ws = tuple(self.space.check_word(w) for w in self.words)
        if len(set(ws)) != len(ws):
            raise SepsysError("duplicate words in code")
        object.__setattr__(self, "words", ws)

    def __len__(self) -> int:
        return len(self.words)


@dataclass(frozen=True)
class SeparationReport:
    """Outcome of an (epsilon-)(s,t) check.

    min_lambda is the smallest separating-coordinate count over all
    admissible (S, T) pairs; the verdict is min_lambda > epsilon * n
    (strict).  When the verdict is false, `violation` holds the
    lexicographically least minimizing pair.
    """

    s: int
    t: int
    epsilon: Fraction
    n: int
    min_lambda: int
    separating: bool
    violation: Optional[tuple[WordSet, WordSet]] = None

    def to_json(self) -> dict:
        viol = None
        if self.violation is not None:
            viol = {
                "S": ["".join(_SYMBOLS[s] for s in w) for w in self.violation[0]],
                "T": ["".join(_SYMBOLS[s] for s in w) for w in self.violation[1]],
            }
        return {
            "s": self.s,
            "t": self.t,
            "epsilon": str(self.epsilon),
            "n": self.n,
            "min_lambda": self.min_lambda,
            "separating": self.separating,
            "violation": viol,
        }


_SYMBOLS = "0123456789abcdefghijklmnopqrstuvwxyz"


def separating_coordinates(
    side_s: Iterable[Word], side_t: Iterable[Word]
) -> frozenset[int]:
    """The coordinates (0-based) where the two sides use disjoint symbol sets."""
    ss = list(side_s)
    tt = list(side_t)
    if not ss or not tt:
        raise SepsysError("both sides must be nonempty")
    n = len(ss[0])
    for w in itertools.chain(ss, tt):
        if len(w) != n:
            raise SepsysError("length mismatch between words")
    if set(ss) & set(tt):
        raise SepsysError("sides overlap")
    out = []
    for i in range(n):
        if not ({w[i] for w in ss} & {w[i] for w in tt}):
            out.append(i)
    return frozenset(out)


def _check_sizes(s: int, t: int, epsilon: Fraction):
    if s < 1 or t < 1:
        raise SepsysError(f"subset sizes must be >= 1, got ({s},{t})")
    if not 0 <= epsilon < 1:
        raise SepsysError(f"epsilon must lie in [0,1), got {epsilon}")


def _split_sizes(m: int, s: int, t: int) -> list[tuple[int, int]]:
    # Separating-coordinate sets only shrink as sides grow, so the minimum
    # is attained on maximal admissible pairs.
    if m >= s + t:
        return [(s, t)]
    return [(a, m - a) for a in range(max(1, m - t), min(s, m - 1) + 1)]


def min_separating_count(
    code: Code, s: int, t: int, epsilon: Fraction | int = 0
) -> SeparationReport:
    """Minimum separating-coordinate count over admissible subset pairs.

    Enumerates maximal-size disjoint pairs (S, T) in lexicographic order
    over the sorted code and records the least minimizer.
    """
    epsilon = Fraction(epsilon)
    _check_sizes(s, t, epsilon)
    if len(code) < 2:
        raise SepsysError("code must have at least 2 words")
    words = sorted(code.words)
    n = code.space.n
    best = n + 1
    best_pair: Optional[tuple[WordSet, WordSet]] = None
    for a, b in _split_sizes(len(words), s, t):
        for side_s in itertools.combinations(words, a):
            rest = [w for w in words if w not in side_s]
            for side_t in itertools.combinations(rest, b):
                lam = len(separating_coordinates(side_s, side_t))
                if lam < best:
                    best = lam
                    best_pair = (side_s, side_t)
    separating = best > epsilon * n
    return SeparationReport(
        s=s,
        t=t,
        epsilon=epsilon,
        n=n,
        min_lambda=best,
        separating=separating,
        violation=None if separating else best_pair,
    )


def check_21_fast(code: Code, epsilon: Fraction | int = 0) -> SeparationReport:
    """Binary (2,1) check over packed words.

    For S = {x, y}, T = {z} the separating coordinates are exactly the
    set bits of (x^z) & (y^z); the minimum over all triples (pairs when
    |C| = 2) matches min_separating_count(code, 2, 1).
    """
    epsilon = Fraction(epsilon)
    if code.space.q != 2:
        raise SepsysError("fast (2,1) check requires a binary code")
    if not 0 <= epsilon < 1:
        raise SepsysError(f"epsilon must lie in [0,1), got {epsilon}")
    if len(code) < 2:
        raise SepsysError("code must have at least 2 words")
    words = sorted(code.words)
    packed = [pack(w) for w in words]
    n = code.space.n
    best = n + 1
    best_pair: Optional[tuple[WordSet, WordSet]] = None
    if len(words) == 2:
        best = bin(packed[0] ^ packed[1]).count("1")
        best_pair = ((words[0],), (words[1],))
    else:
        for (i, x), (j, y) in itertools.combinations(enumerate(packed), 2):
            for k, z in enumerate(packed):
                if k in (i, j):
                    continue
                lam = bin((x ^ z) & (y ^ z)).count("1")
                if lam < best:
                    best = lam
                    best_pair = ((words[i], words[j]), (words[k],))
    separating = best > epsilon * n
    return SeparationReport(
        s=2,
        t=1,
        epsilon=epsilon,
        n=n,
        min_lambda=best,
        separating=separating,
        violation=None if separating else best_pair,
    )


def set_system_check(
    family: Sequence[frozenset], strict: bool = False
) -> tuple[bool, Optional[tuple[frozenset, frozenset, frozenset]]]:
    """Whether no three members A, B, C satisfy A&B <= C <= A|B.

    Inclusions are read non-strict by default, which makes the condition
    coincide with binary (2,1)-separation of the characteristic vectors;
    `strict` switches both inclusions to proper ones.
    """
    fam = [frozenset(a) for a in family]
    if len(set(fam)) != len(fam):
        raise SepsysError("duplicate sets in family")
    for a, b in itertools.combinations(fam, 2):
        inter, union = a & b, a | b
        for c in fam:
            if c == a or c == b:
                continue
            if strict:
                bad = inter < c < union
            else:
                bad = inter <= c <= union
            if bad:
                return False, (a, b, c)
    return True, None


def family_to_code(family: Sequence[frozenset]) -> Code:
    """Characteristic vectors of a set family over its sorted ground set."""
    fam = [frozenset(a) for a in family]
    ground = sorted(set().union(*fam)) if fam else []
    if not ground:
        raise SepsysError("family has an empty ground set")
    space = HammingSpace(2, len(ground))
    words = tuple(tuple(int(g in a) for g in ground) for a in fam)
    return Code(space, words)
