import pytest
from hypothesis import given
import hypothesis.strategies as st

from surfgroup.errors import IncompatibleWordsError, InvalidGenusError, InvalidLetterError, ParseError
from surfgroup.oracle import dehn_equal
from surfgroup.presentation import (
    Word,
    compare_lenlex,
    format_word,
    fractional_relator_extent,
    letter_rank,
    parse_word,
    relator_cyclic_words,
)

from conftest import W, letters_of, words


def test_letter_rank_examples():
    assert letter_rank(-4, 2) == 8
    assert letter_rank(1, 2) == 4
    assert letter_rank(4, 2) == 1


@pytest.mark.parametrize("g", [2, 3, 4])
def test_letter_rank_is_a_bijection_onto_1_to_4g(g):
    ranks = sorted(letter_rank(x, g) for x in letters_of(g))
    assert ranks == list(range(1, 4 * g + 1))


@pytest.mark.parametrize("g", [2, 3])
def test_rank_chain_order(g):
    chain = [-i for i in range(2 * g, 0, -1)] + list(range(1, 2 * g + 1))
    ranks = [letter_rank(x, g) for x in chain]
    assert ranks == sorted(ranks, reverse=True)


def test_letter_rank_rejects_out_of_range():
    with pytest.raises(InvalidLetterError):
        letter_rank(5, 2)
    with pytest.raises(InvalidLetterError):
        letter_rank(0, 2)


def test_genus_below_two_is_rejected():
    for g in (0, 1, -3):
        with pytest.raises(InvalidGenusError):
            relator_cyclic_words(g)
        with pytest.raises(InvalidGenusError):
            Word((), g)


def test_compare_lenlex_examples():
    assert compare_lenlex(W([1, 2]), W([1])) == 1
    assert compare_lenlex(W([-1]), W([1])) == 1
    assert compare_lenlex(W([4, 3, 2, 1]), W([1, 2, 3, 4])) == -1
    assert compare_lenlex(W([2, 3]), W([2, 3])) == 0


def test_compare_lenlex_genus_mismatch():
    with pytest.raises(IncompatibleWordsError):
        compare_lenlex(W([1]), W([1], 3))


@given(words(), words(), words())
def test_lenlex_is_a_strict_total_order(a, b, c):
    assert compare_lenlex(a, b) == -compare_lenlex(b, a)
    assert (compare_lenlex(a, b) == 0) == (a.letters == b.letters)
    if compare_lenlex(a, b) < 0 and compare_lenlex(b, c) < 0:
        assert compare_lenlex(a, c) < 0


def test_relator_family_examples():
    fam = relator_cyclic_words(2)
    assert (1, 2, 3, 4, -1, -2, -3, -4) in fam.cyclic_words
    assert (4, 3, 2, 1, -4, -3, -2, -1) in fam.cyclic_words
    assert len(fam) == 16


@pytest.mark.parametrize("g", [2, 3, 4])
def test_relator_family_structure(g):
    fam = relator_cyclic_words(g)
    n = 4 * g
    assert len(fam) == 8 * g
    assert len(set(fam.cyclic_words)) == 8 * g
    for m in fam.cyclic_words:
        assert len(m) == n
        for k in range(n):
            assert m[k] == -m[(k + 2 * g) % n]


@pytest.mark.parametrize("g", [2, 3])
def test_half_relator_identity(g):
    # b_k .. b_{k+2g-1} and its reverse are the same element
    n = 4 * g
    for m in relator_cyclic_words(g).cyclic_words:
        for k in range(n):
            half = tuple(m[(k + i) % n] for i in range(2 * g))
            assert dehn_equal(W(half, g), W(half[::-1], g))


def test_fractional_relator_extent_examples():
    fam = relator_cyclic_words(2)
    r0 = fam.cyclic_words.index((1, 2, 3, 4, -1, -2, -3, -4))
    assert (r0, 3) in fractional_relator_extent(W([1, 2, 3]), 0)
    assert fractional_relator_extent(W([1, 1]), 0) == []
    assert (r0, 8) in fractional_relator_extent(W([1, 2, 3, 4, -1, -2, -3, -4]), 0)


def test_fractional_relator_extent_bad_start():
    with pytest.raises(IndexError):
        fractional_relator_extent(W([1, 2]), 2)


def test_parse_examples():
    assert parse_word("1 2 -1", 2).letters == (1, 2, -1)
    assert parse_word("2^-3 1", 2).letters == (-2, -2, -2, 1)
    assert parse_word("", 2).letters == ()
    with pytest.raises(ParseError) as exc:
        parse_word("5 1", 2)
    assert exc.value.position == 0


@pytest.mark.parametrize("text", ["1 x", "1^", "1^^2", "2 0", "1^9999999"])
def test_parse_rejects_malformed(text):
    with pytest.raises(ParseError):
        parse_word(text, 2)


def test_parse_error_reports_offset():
    with pytest.raises(ParseError) as exc:
        parse_word("1 2 9", 2)
    assert exc.value.position == 4


def test_alpha_style():
    assert parse_word("abA", 2, "alpha").letters == (1, 2, -1)
    assert format_word(W([4, -3]), "alpha") == "dC"
    with pytest.raises(ParseError):
        parse_word("e", 2, "alpha")


@given(st.sampled_from([2, 3, 5]).flatmap(lambda g: words(g, 15)), st.sampled_from(["int", "alpha"]))
def test_wire_format_round_trip(w, style):
    assert parse_word(format_word(w, style), w.genus, style) == w


def test_word_slicing_and_inverse():
    w = W([1, 2, -3])
    assert w[1:].letters == (2, -3)
    assert w.inverse().letters == (3, -2, -1)
    assert w.rotate(1).letters == (2, -3, 1)
    with pytest.raises(IncompatibleWordsError):
        w + W([1], 3)
