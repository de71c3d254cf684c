"""Parsers for the on-disk formats: graphs, word files, point CSVs,
set-system files.  All accept `#` comments and blank lines; diagnostics
carry the file name and line number."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Optional

from .errors import ParseError
from .hamming import HammingSpace, Word
from .metric import FiniteMetricSpace, from_edges
from .separation import Code
from .errors import SepsysError

_SYMBOLS = "0123456789abcdefghijklmnopqrstuvwxyz"
_VALUE = {c: i for i, c in enumerate(_SYMBOLS)}


def _lines(path):
    text = Path(path).read_text()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def load_graph(path) -> FiniteMetricSpace:
    """Edge list: one `u v` pair per line, arbitrary identifier tokens."""
    edges = []
    for lineno, line in _lines(path):
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(
                f"expected `u v`, got {line!r}", filename=str(path), line=lineno
            )
        edges.append((parts[0], parts[1]))
    if not edges:
        raise ParseError("no edges found", filename=str(path))
    try:
        return from_edges(edges)
    except SepsysError as e:
        raise ParseError(str(e), filename=str(path)) from e


def word_to_str(w: Word) -> str:
    return "".join(_SYMBOLS[s] for s in w)


def parse_word(token: str) -> Word:
    try:
        return tuple(_VALUE[c] for c in token.lower())
    except KeyError as e:
        raise ParseError(f"invalid symbol {e.args[0]!r} in word {token!r}") from e


def load_code(path, q: Optional[int] = None) -> Code:
    """Word file: one word per line, symbols 0-9a-z; q inferred as the
    largest symbol value + 1 (at least 2) unless overridden."""
    words = []
    n = None
    for lineno, line in _lines(path):
        try:
            w = parse_word(line)
        except ParseError as e:
            raise ParseError(str(e), filename=str(path), line=lineno) from e
        if n is None:
            n = len(w)
        elif len(w) != n:
            raise ParseError(
                f"word length {len(w)} != {n}", filename=str(path), line=lineno
            )
        words.append(w)
    if not words:
        raise ParseError("no words found", filename=str(path))
    inferred = max(max(w) for w in words) + 1
    if q is None:
        q = max(inferred, 2)
    elif inferred > q:
        raise ParseError(
            f"symbol value {inferred - 1} exceeds alphabet size {q}",
            filename=str(path),
        )
    try:
        return Code(HammingSpace(q, n), tuple(words))
    except SepsysError as e:
        raise ParseError(str(e), filename=str(path)) from e


def parse_rational(token: str) -> Fraction:
    """Exact rational from `p/q` or decimal notation."""
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"invalid rational {token!r}") from e


def load_points(path) -> list[tuple]:
    """Point CSV: one point per line, entries decimal or `p/q`; exact
    rationals throughout, dimension fixed by the first line."""
    points = []
    dim = None
    for lineno, line in _lines(path):
        parts = [p.strip() for p in line.split(",")]
        try:
            pt = tuple(parse_rational(p) for p in parts)
        except ParseError as e:
            raise ParseError(str(e), filename=str(path), line=lineno) from e
        if dim is None:
            dim = len(pt)
        elif len(pt) != dim:
            raise ParseError(
                f"dimension {len(pt)} != {dim}", filename=str(path), line=lineno
            )
        points.append(pt)
    if not points:
        raise ParseError("no points found", filename=str(path))
    return points


def load_set_system(path) -> list[frozenset]:
    """Set-system file: one set per line, whitespace-separated element tokens."""
    family = []
    for lineno, line in _lines(path):
        family.append(frozenset(line.split()))
    if not family:
        raise ParseError("no sets found", filename=str(path))
    return family
