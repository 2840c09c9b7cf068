import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from surfgroup.conjugacy import (
    abelianization,
    conjugator,
    is_conjugate,
    lower_bound_witness,
    parity_check,
    upper_bound,
)
from surfgroup.errors import IncompatibleWordsError, InvalidGenusError, InvalidParameterError
from surfgroup.oracle import dehn_equal, exact_cl
from surfgroup.presentation import Word
from surfgroup.rewrite import nf
from surfgroup.selfcheck import ball_pairs

from conftest import W, words

R2 = [1, 2, 3, 4, -1, -2, -3, -4]


def test_abelianization_examples():
    assert abelianization(W([1, 2, -1])) == (0, 1, 0, 0)
    assert abelianization(W(R2)) == (0, 0, 0, 0)


@given(words(2, 12), words(2, 5))
def test_abelianization_is_a_class_invariant(w, s):
    assert abelianization(s.inverse() + w + s) == abelianization(w)


def test_is_conjugate_examples():
    assert is_conjugate(W([1]), W([-2, -2, 1, 2, 2]))
    assert not is_conjugate(W([1]), W([2]))
    assert is_conjugate(W([]), W([]))
    assert not is_conjugate(W([1]), W([1, 2]))


def test_parity_examples():
    assert parity_check(W([1]), W([-2, 1, 2]))
    assert not parity_check(W([1]), W([1, 2]))
    assert parity_check(W([]), W([]))


def test_conjugator_examples():
    c = conjugator(W([1]), W([-2, -2, 1, 2, 2]))
    assert c.conjugate and c.conjugator_len == 2
    assert c.bound == 18 and c.bound_satisfied
    assert dehn_equal(c.conjugator.inverse() + W([1]) + c.conjugator, W([-2, -2, 1, 2, 2]))
    c = conjugator(W([1]), W([1]))
    assert c.conjugator == W([])


def test_non_conjugate_certificate():
    c = conjugator(W([1]), W([2]))
    assert not c.conjugate and c.conjugator is None and c.r_sum is None
    d = c.to_dict()
    assert d["conjugator"] is None and d["exact_cl"] is None
    # same abelianization and parity, different classes
    c = conjugator(W([1, 2, -1, -2]), W([]))
    assert not c.conjugate and not c.bound_satisfied


def test_certificate_json_fields():
    d = conjugator(W([1]), W([-2, 1, 2]), exact=True).to_dict()
    assert list(d) == [
        "u", "v", "conjugate", "conjugator", "conjugator_len",
        "bound", "bound_satisfied", "r_sum", "exact_cl",
    ]
    assert d["exact_cl"] == 1


def test_genus_mismatch():
    with pytest.raises(IncompatibleWordsError):
        conjugator(W([1]), W([1], 3))


def test_witness_examples():
    u, v, n1 = lower_bound_witness(2, 3)
    assert u == W([1]) and v == W([-2, -2, 1, 2, 2]) and n1 == 2
    u, v, n1 = lower_bound_witness(2, 2)
    assert v == W([-2, 1, 2]) and n1 == 1
    u, v, n1 = lower_bound_witness(3, 2)
    assert u.genus == 3 and v.letters == (-2, 1, 2)
    assert len(u) + len(v) == 4


def test_witness_rejects_bad_n():
    for n in (1, 0, -2, 2.5, True):
        with pytest.raises(InvalidParameterError):
            lower_bound_witness(2, n)
    with pytest.raises(InvalidGenusError):
        lower_bound_witness(1, 3)


@pytest.mark.parametrize("g", [2, 3])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_witness_exact_length(g, n):
    u, v, expected = lower_bound_witness(g, n)
    assert exact_cl(u, v) == expected
    c = conjugator(u, v)
    assert expected <= c.conjugator_len <= c.bound


def _check_certificate(u, v):
    c = conjugator(u, v)
    assert c.conjugate
    w = c.conjugator
    assert dehn_equal(w.inverse() + u + w, v)
    assert nf(w) == w
    assert len(w) <= upper_bound(u, v) == (len(u) + len(v)) // 2 + 8 * u.genus - 1
    assert c.bound_satisfied
    assert c.r_sum <= 16 * u.genus
    assert parity_check(u, v)
    return c


@settings(max_examples=300)
@given(st.sampled_from([2, 3]).flatmap(lambda g: st.tuples(words(g, 10), words(g, 6))))
def test_random_conjugate_pairs_are_certified(pair):
    w, s = pair
    _check_certificate(w, s.inverse() + w + s)


@settings(max_examples=100)
@given(words(2, 8), words(2, 8))
def test_conjugacy_decision_matches_certificates(u, v):
    c = conjugator(u, v)
    assert c.conjugate == is_conjugate(u, v)
    if c.conjugate:
        _check_certificate(u, v)


def test_radius_two_gap_against_exact_length():
    _, _, pairs = ball_pairs(2, 2)
    for u, v in pairs:
        c = _check_certificate(u, v)
        e = exact_cl(u, v, max_depth=c.conjugator_len)
        assert e != "exhausted" and e <= c.conjugator_len <= c.bound
