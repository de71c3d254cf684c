from fractions import Fraction

import pytest

from sepsys.errors import ParseError
from sepsys.io import (
    load_code,
    load_graph,
    load_points,
    load_set_system,
    parse_rational,
    parse_word,
    word_to_str,
)


class TestWordFiles:
    def test_basic(self, tmp_path):
        p = tmp_path / "code.txt"
        p.write_text("# even weight code\n000\n110\n101\n011\n")
        code = load_code(p)
        assert code.space.q == 2
        assert code.space.n == 3
        assert len(code) == 4

    def test_q_inference_ternary(self, tmp_path):
        p = tmp_path / "code.txt"
        p.write_text("012\n210\n")
        assert load_code(p).space.q == 3

    def test_q_override(self, tmp_path):
        p = tmp_path / "code.txt"
        p.write_text("01\n10\n")
        assert load_code(p, q=4).space.q == 4

    def test_q_override_too_small(self, tmp_path):
        p = tmp_path / "code.txt"
        p.write_text("012\n")
        with pytest.raises(ParseError):
            load_code(p, q=2)

    def test_alphanumeric_symbols(self, tmp_path):
        p = tmp_path / "code.txt"
        p.write_text("0a\n9z\n")
        code = load_code(p)
        assert code.space.q == 36
        assert code.words[0] == (0, 10)

    def test_ragged_lengths_diagnosed(self, tmp_path):
        p = tmp_path / "code.txt"
        p.write_text("000\n00\n")
        with pytest.raises(ParseError, match="code.txt:2"):
            load_code(p)

    def test_invalid_symbol_diagnosed(self, tmp_path):
        p = tmp_path / "code.txt"
        p.write_text("0!0\n")
        with pytest.raises(ParseError, match="invalid symbol"):
            load_code(p)

    def test_empty_file(self, tmp_path):
        p = tmp_path / "code.txt"
        p.write_text("# nothing\n")
        with pytest.raises(ParseError, match="no words"):
            load_code(p)

    def test_word_str_roundtrip(self):
        assert word_to_str(parse_word("0a9")) == "0a9"


class TestGraphFiles:
    def test_k32(self, tmp_path):
        p = tmp_path / "k32.edges"
        p.write_text(
            "# K_{3,2}\nx top\nx bottom\ny top\ny bottom\n"
            "center top\ncenter bottom\n"
        )
        space = load_graph(p)
        assert len(space.points) == 5
        assert space.d("x", "y") == 2

    def test_bad_line(self, tmp_path):
        p = tmp_path / "g.edges"
        p.write_text("a b c\n")
        with pytest.raises(ParseError, match="g.edges:1"):
            load_graph(p)

    def test_disconnected(self, tmp_path):
        p = tmp_path / "g.edges"
        p.write_text("a b\nc d\n")
        with pytest.raises(ParseError, match="disconnected"):
            load_graph(p)


class TestPointFiles:
    def test_decimals_and_rationals_exact(self, tmp_path):
        p = tmp_path / "pts.csv"
        p.write_text("0.5, 1/3\n-2, 0.25\n")
        pts = load_points(p)
        assert pts[0] == (Fraction(1, 2), Fraction(1, 3))
        assert pts[1] == (Fraction(-2), Fraction(1, 4))

    def test_dimension_mismatch(self, tmp_path):
        p = tmp_path / "pts.csv"
        p.write_text("0,0\n1,2,3\n")
        with pytest.raises(ParseError, match="pts.csv:2"):
            load_points(p)

    def test_bad_entry(self, tmp_path):
        p = tmp_path / "pts.csv"
        p.write_text("0,x\n")
        with pytest.raises(ParseError, match="invalid rational"):
            load_points(p)


class TestSetSystemFiles:
    def test_basic(self, tmp_path):
        p = tmp_path / "fam.txt"
        p.write_text("1 2\n1 3\n2 3\n")
        fam = load_set_system(p)
        assert fam == [frozenset({"1", "2"}), frozenset({"1", "3"}),
                       frozenset({"2", "3"})]


class TestRationals:
    def test_forms(self):
        assert parse_rational("1/3") == Fraction(1, 3)
        assert parse_rational("0.125") == Fraction(1, 8)
        assert parse_rational("2") == Fraction(2)

    def test_invalid(self):
        with pytest.raises(ParseError):
            parse_rational("one third")
        with pytest.raises(ParseError):
            parse_rational("1/0")
