"""Bound tables, constructions, and exact search for binary (2,1)-separating codes.

kappa(n) is the largest binary length-n code in which no codeword lies
in the segment of two others.  Closed-form lower bounds are evaluated
with exact integer arithmetic; constructions (greedy scan, random
sample-and-repair) give concrete codes; exact values come from a
symmetry-reduced backtracking search cross-checked against a naive one.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

import numpy as np

from .errors import GuardExceeded, SepsysError
from .hamming import HammingSpace, Word, pack, unpack
from .separation import Code

GREEDY_GUARD_N = 24

R_PROB = 1 - 0.5 * math.log2(3)  # asymptotic rate of the probabilistic bound
R_ALG = (3 / 50) * math.log2(11)  # asymptotic rate of the algebraic bound


def eq1_lower_bound(n: int) -> int:
    """floor((1/2) * (2/sqrt(3))^n), computed without floating point.

    k <= 2^(n-1)/3^(n/2)  iff  k^2 * 3^n <= 2^(2n-2).
    """
    if n < 1:
        raise SepsysError("n must be >= 1")
    return math.isqrt(2 ** (2 * n - 2) // 3**n)


def bevan_lower_bound(n: int) -> int:
    """2 * floor((sqrt(6)/9) * (2/sqrt(3))^n), exact integer arithmetic.

    The inner floor is floor(sqrt(6 * 4^n / (81 * 3^n))).
    """
    if n < 1:
        raise SepsysError("n must be >= 1")
    return 2 * math.isqrt(6 * 4**n // (81 * 3**n))


def alg_reference_curve(n: int) -> float:
    """11^(3n/50): the algebraic bound's envelope, ignoring its o(1) term.

    A reference curve only; the finite-n bound is not attained here.
    """
    return 11.0 ** (3 * n / 50)


@dataclass(frozen=True)
class BoundTable:
    """Closed-form lower-bound evaluations for n = 1..n_max."""

    n_max: int
    rows: tuple[tuple[int, int, int, float], ...]  # (n, eq1, bevan, reference)
    r_prob: float = R_PROB
    r_alg: float = R_ALG

    def to_json(self) -> dict:
        return {
            "r_prob": self.r_prob,
            "r_alg": self.r_alg,
            "rows": [
                {"n": n, "probabilistic": a, "bevan": b, "algebraic_envelope": c}
                for n, a, b, c in self.rows
            ],
        }


def eval_bounds(n_max: int) -> BoundTable:
    if n_max < 1:
        raise SepsysError("n_max must be >= 1")
    rows = tuple(
        (n, eq1_lower_bound(n), bevan_lower_bound(n), alg_reference_curve(n))
        for n in range(1, n_max + 1)
    )
    return BoundTable(n_max, rows)


# ---------------------------------------------------------------------------
# incremental feasibility on packed words


def _popcount_ok(code: Sequence[int], w: int) -> bool:
    """Whether code + [w] stays (2,1)-separating (w not yet in code).

    Checks every violating role w could play: w inside a segment of two
    code words, or w as an arm putting a code word inside [w, x].
    """
    for i, x in enumerate(code):
        xw = x ^ w
        for y in code[i + 1 :]:
            if xw & (y ^ w) == 0:  # w in [x, y]
                return False
        for z in code:
            if z == x:
                continue
            if (x ^ z) & (w ^ z) == 0:  # z in [x, w]
                return False
    return True


def _np_extend_ok(arr: np.ndarray, pair_xor: np.ndarray, w: int) -> bool:
    """Vectorized version of _popcount_ok; pair_xor[i, j] = arr[i] ^ arr[j]."""
    if arr.size < 2:
        return True
    xw = arr ^ w
    apex = xw[:, None] & xw[None, :]  # w in [x, y]?
    np.fill_diagonal(apex, 1)
    if not apex.all():
        return False
    arm = pair_xor & xw[None, :]  # z (column) in [x (row), w]?
    np.fill_diagonal(arm, 1)
    return bool(arm.all())


def violating_triples(packed: Sequence[int]) -> Iterator[tuple[int, int, int]]:
    """All (x, y, z) with x < y, z in [x, y], in lexicographic order."""
    ws = sorted(packed)
    for x, y in itertools.combinations(ws, 2):
        for z in ws:
            if z in (x, y):
                continue
            if (x ^ z) & (y ^ z) == 0:
                yield x, y, z


def _as_code(n: int, packed: Sequence[int]) -> Code:
    space = HammingSpace(2, n)
    return Code(space, tuple(unpack(v, n) for v in sorted(packed)))


def _order_words(n: int, order: str, seed: Optional[int]) -> list[int]:
    size = 1 << n
    if order == "lex":
        return list(range(size))
    if order == "gray":
        return [i ^ (i >> 1) for i in range(size)]
    if order == "random":
        rng = np.random.default_rng(seed)
        return list(rng.permutation(size))
    raise SepsysError(f"unknown scan order {order!r}")


def greedy_construct(
    n: int, order: str = "lex", seed: Optional[int] = None, restarts: int = 1
) -> Code:
    """Scan all words in the given order, keeping each one that preserves
    (2,1)-separation.  With a random order, returns the largest code over
    `restarts` scans (seeds seed, seed+1, ...)."""
    if n > GREEDY_GUARD_N:
        raise GuardExceeded(f"greedy scan guarded at n <= {GREEDY_GUARD_N}")
    if n < 1:
        raise SepsysError("n must be >= 1")
    if restarts < 1:
        raise SepsysError("restarts must be >= 1")
    if order != "random":
        restarts = 1
    best: list[int] = []
    for r in range(restarts):
        s = None if seed is None else seed + r
        candidates = _order_words(n, order, s)
        code: list[int] = []
        arr = np.empty(0, dtype=np.int64)
        pair_xor = np.empty((0, 0), dtype=np.int64)
        for w in candidates:
            if _np_extend_ok(arr, pair_xor, w):
                code.append(w)
                arr = np.array(code, dtype=np.int64)
                pair_xor = arr[:, None] ^ arr[None, :]
        if len(code) > len(best):
            best = code
    return _as_code(n, best)


def random_repair_construct(n: int, m: int, seed: int = 0) -> Code:
    """Sample m distinct uniform words, then repeatedly delete the
    lowest-index member of the lexicographically least violating triple
    until the code is (2,1)-separating."""
    if m < 1:
        raise SepsysError("m must be >= 1")
    if n < 1:
        raise SepsysError("n must be >= 1")
    size = 1 << n
    m = min(m, size)
    rng = np.random.default_rng(seed)
    if size <= 1 << 22:
        words = set(map(int, rng.choice(size, size=m, replace=False)))
    else:
        words = set()
        while len(words) < m:
            words.add(int(rng.integers(size)))
    code = sorted(words)
    while True:
        viol = next(violating_triples(code), None)
        if viol is None:
            break
        code.remove(min(viol))
    return _as_code(n, code)


# ---------------------------------------------------------------------------
# exact search


@dataclass
class SearchResult:
    n: int
    kappa: int
    witness: tuple[Word, ...]
    nodes: int
    status: str  # "exact" | "timeout"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "kappa": self.kappa,
            "witness": ["".join(str(s) for s in w) for w in self.witness],
            "nodes": self.nodes,
            "status": self.status,
        }


class _Deadline:
    def __init__(self, limit: Optional[float]):
        self.end = None if limit is None else time.monotonic() + limit
        self.hit = False

    def expired(self) -> bool:
        if self.end is not None and time.monotonic() > self.end:
            self.hit = True
        return self.hit


def _weight_lex_key(w: int) -> tuple[int, int]:
    return (bin(w).count("1"), w)


def _apply_perm(w: int, perm: Sequence[int], n: int) -> int:
    out = 0
    for i in range(n):
        out |= ((w >> perm[i]) & 1) << i
    return out


def _is_canonical(code: Sequence[int], perms, n: int) -> bool:
    """Whether the sorted code is weight-lex minimal in its orbit under
    coordinate permutations."""
    key = sorted(code, key=_weight_lex_key)
    keyed = [_weight_lex_key(w) for w in key]
    for perm in perms:
        img = sorted((_apply_perm(w, perm, n) for w in code), key=_weight_lex_key)
        if [_weight_lex_key(w) for w in img] < keyed:
            return False
    return True


def exact_kappa_naive(n: int, time_limit: Optional[float] = None) -> SearchResult:
    """Exact maximum by plain backtracking over all words, no symmetry
    reduction.  Oracle for the pruned search; practical for n <= 5."""
    if n < 1:
        raise SepsysError("n must be >= 1")
    deadline = _Deadline(time_limit)
    size = 1 << n
    best: list[int] = []
    nodes = 0

    def extend(code: list[int], candidates: list[int]):
        nonlocal best, nodes
        if deadline.expired():
            return
        nodes += 1
        if len(code) > len(best):
            best = list(code)
        if len(code) + len(candidates) <= len(best):
            return
        for idx, w in enumerate(candidates):
            rest = [v for v in candidates[idx + 1 :] if _popcount_ok(code + [w], v)]
            code.append(w)
            extend(code, rest)
            code.pop()
            if deadline.expired():
                return

    extend([], list(range(size)))
    status = "timeout" if deadline.hit else "exact"
    return SearchResult(n, len(best), _as_code(n, best).words, nodes, status)


def exact_kappa(
    n: int,
    time_limit: Optional[float] = None,
    initial_bound: Optional[int] = None,
) -> SearchResult:
    """Exact maximum by symmetry-reduced depth-first search.

    The first word is fixed to all-zeros (XOR translation is a Hamming
    isometry), partial codes that are not weight-lex minimal under
    coordinate permutations are cut, and candidate words are scanned in
    weight-then-lex order.  On timeout, returns the best code found with
    status "timeout".
    """
    if n < 1:
        raise SepsysError("n must be >= 1")
    deadline = _Deadline(time_limit)
    if initial_bound is None:
        initial_bound = len(greedy_construct(n, "lex")) if n <= 16 else 2
    perms = [p for p in itertools.permutations(range(n)) if p != tuple(range(n))]
    order = sorted(range(1, 1 << n), key=_weight_lex_key)
    best: list[int] = []
    best_size = max(initial_bound - 1, 1)  # strict improvements only
    nodes = 0

    def extend(code: list[int], candidates: list[int]):
        nonlocal best, best_size, nodes
        if deadline.expired():
            return
        nodes += 1
        if len(code) > best_size:
            best = list(code)
            best_size = len(code)
        if len(code) + len(candidates) <= best_size:
            return
        for idx, w in enumerate(candidates):
            nxt = code + [w]
            if not _is_canonical(nxt, perms, n):
                continue
            rest = [v for v in candidates[idx + 1 :] if _popcount_ok(nxt, v)]
            extend(nxt, rest)
            if deadline.expired():
                return

    extend([0], [w for w in order if _popcount_ok([0], w)])
    if not best:
        # the greedy bound was already optimal; rerun greedy for a witness
        best = [pack(w) for w in greedy_construct(n, "lex").words]
        best_size = len(best)
    status = "timeout" if deadline.hit else "exact"
    return SearchResult(n, best_size, _as_code(n, best).words, nodes, status)


def exact_kappa_parallel(
    n: int, workers: int, time_limit: Optional[float] = None
) -> SearchResult:
    """exact_kappa with first-level branches distributed over processes.

    The result (kappa and the canonical witness) is schedule-independent:
    each branch is explored exhaustively and the least witness wins ties.
    """
    import multiprocessing as mp

    if workers < 1:
        raise SepsysError("workers must be >= 1")
    if workers == 1:
        return exact_kappa(n, time_limit)
    order = sorted(range(1, 1 << n), key=_weight_lex_key)
    jobs = [(n, w, order, time_limit) for w in order if _popcount_ok([0], w)]
    with mp.Pool(workers) as pool:
        results = pool.map(_branch_worker, jobs)
    def witness_key(r: SearchResult):
        return [_weight_lex_key(pack(w)) for w in r.witness]

    best: Optional[SearchResult] = None
    nodes = 1
    timed_out = False
    for r in results:
        nodes += r.nodes
        timed_out = timed_out or r.status == "timeout"
        if best is None or r.kappa > best.kappa or (
            r.kappa == best.kappa and witness_key(r) < witness_key(best)
        ):
            best = r
    if best is None or best.kappa < 2:
        # n so small that no branch beats the trivial 2-word code
        return exact_kappa(n, time_limit)
    return SearchResult(
        n, best.kappa, best.witness, nodes, "timeout" if timed_out else "exact"
    )


def _branch_worker(job) -> SearchResult:
    n, first, order, time_limit = job
    deadline = _Deadline(time_limit)
    perms = [p for p in itertools.permutations(range(n)) if p != tuple(range(n))]
    best: list[int] = []
    nodes = 0

    def extend(code: list[int], candidates: list[int]):
        nonlocal best, nodes
        if deadline.expired():
            return
        nodes += 1
        if len(code) > len(best):
            best = list(code)
        if len(code) + len(candidates) <= len(best):
            return
        for idx, w in enumerate(candidates):
            nxt = code + [w]
            if not _is_canonical(nxt, perms, n):
                continue
            rest = [v for v in candidates[idx + 1 :] if _popcount_ok(nxt, v)]
            extend(nxt, rest)
            if deadline.expired():
                return

    root = [0, first]
    if _is_canonical(root, perms, n):
        fk = _weight_lex_key(first)
        later = [
            w for w in order if _weight_lex_key(w) > fk and _popcount_ok(root, w)
        ]
        extend(root, later)
    if not best:
        best = [0]
    status = "timeout" if deadline.hit else "exact"
    return SearchResult(n, len(best), _as_code(n, best).words, nodes, status)


def kappa_table(
    n_max: int,
    time_limit: Optional[float] = None,
    workers: int = 1,
) -> list[SearchResult]:
    """exact_kappa for n = 1..n_max; stops early when the limit is hit."""
    out = []
    for n in range(1, n_max + 1):
        if workers > 1:
            r = exact_kappa_parallel(n, workers, time_limit)
        else:
            r = exact_kappa(n, time_limit)
        out.append(r)
        if r.status == "timeout":
            break
    return out


def b_file(results: Sequence[SearchResult]) -> str:
    """OEIS-style two-column `n kappa` listing."""
    return "".join(f"{r.n} {r.kappa}\n" for r in results)
