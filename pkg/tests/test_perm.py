"""Cycle parsing, canonical printing and permutation arithmetic."""

from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from hallfix import PermParseError, Permutation, element_order, format_permutation, parse_permutation


def test_parse_basic_cycles():
    g = parse_permutation("(1 2 3)(4 5)", 5)
    assert g.images == (2, 3, 1, 5, 4)


def test_parse_identity():
    g = parse_permutation("()", 4)
    assert g == Permutation.identity(4)


def test_parse_repeated_point():
    with pytest.raises(PermParseError, match="repeated"):
        parse_permutation("(1 2)(2 3)", 3)


def test_parse_out_of_range():
    with pytest.raises(PermParseError, match="out of range"):
        parse_permutation("(1 6)", 5)
    with pytest.raises(PermParseError, match="out of range"):
        parse_permutation("(0 1)", 5)


def test_parse_malformed_parens():
    with pytest.raises(PermParseError, match="unclosed"):
        parse_permutation("(1 2", 3)
    with pytest.raises(PermParseError, match="unmatched"):
        parse_permutation("(1 2))", 3)
    with pytest.raises(PermParseError, match="outside"):
        parse_permutation("1 2)", 3)
    with pytest.raises(PermParseError, match="nested"):
        parse_permutation("((1 2))", 3)
    with pytest.raises(PermParseError, match="outside"):
        parse_permutation("(1 2) 3", 3)
    with pytest.raises(PermParseError, match="empty"):
        parse_permutation("   ", 3)
    with pytest.raises(PermParseError, match="unexpected character"):
        parse_permutation("(1,2)", 3)


def test_parse_whitespace_insensitive():
    assert parse_permutation(" ( 1   2 3)  (4  5 ) ", 5) == parse_permutation("(1 2 3)(4 5)", 5)


def test_parse_omitted_fixed_points():
    g = parse_permutation("(2 4)", 5)
    assert g.images == (1, 4, 3, 2, 5)


def test_format_canonical():
    g = parse_permutation("(4 5)(2 3 1)", 5)
    assert format_permutation(g) == "(1 2 3)(4 5)"
    assert str(Permutation.identity(3)) == "()"


def test_multi_digit_points():
    g = parse_permutation("(10 11)", 12)
    assert g.apply(10) == 11 and g.apply(12) == 12


@given(st.integers(1, 8).flatmap(
    lambda d: st.permutations(list(range(1, d + 1)))))
def test_print_parse_round_trip(images):
    g = Permutation(images)
    assert parse_permutation(format_permutation(g), g.degree) == g


def test_composition_order_convention():
    # (g * h)(p) == g(h(p)); the right factor acts first.
    g = parse_permutation("(1 2)", 3)
    h = parse_permutation("(2 3)", 3)
    assert (g * h).apply(2) == g.apply(h.apply(2)) == 3
    assert format_permutation(g * h) == "(1 2 3)"


def test_inverse_and_powers():
    g = parse_permutation("(1 2 3 4 5)", 5)
    assert (g * g.inverse()).is_identity()
    assert g**5 == Permutation.identity(5)
    assert g**-1 == g.inverse()
    assert g**7 == g**2


def test_element_order_examples():
    assert element_order(parse_permutation("(1 2 3)(4 5)", 5)) == 6
    assert element_order(Permutation.identity(4)) == 1
    assert element_order(parse_permutation("(1 2 3 4 5)", 5)) == 5


def test_order_is_lcm_of_cycle_lengths():
    g = parse_permutation("(1 2)(3 4 5)(6 7 8 9)", 9)
    assert g.order() == 12
    assert (g**12).is_identity() and not (g**6).is_identity()


def test_cycle_counts_partition_degree():
    g = parse_permutation("(1 2 3)(4 5)", 7)
    counts = g.cycle_counts()
    assert counts == {3: 1, 2: 1, 1: 2}
    assert sum(i * c for i, c in counts.items()) == 7


def test_bijection_validation():
    with pytest.raises(ValueError, match="bijection"):
        Permutation([1, 1, 3])
    with pytest.raises(ValueError, match="positive"):
        Permutation([])
