import itertools
import random

import pytest

from surfgroup.errors import ResourceError
from surfgroup.oracle import (
    EXHAUSTED,
    ConjGraphSearch,
    cayley_ball,
    dehn_equal,
    dehn_reduce,
    dehn_trivial,
    exact_cl,
    minimality_check,
)
from surfgroup.presentation import Word, relator_cyclic_words
from surfgroup.rewrite import nf

from conftest import W

R2 = (1, 2, 3, 4, -1, -2, -3, -4)


def test_dehn_examples():
    assert dehn_trivial(W(R2))
    assert not dehn_trivial(W([1]))
    assert dehn_equal(W([1, 2, 3, 4]), W([4, 3, 2, 1]))
    assert not dehn_equal(W([1]), W([2]))
    assert dehn_equal(W([]), W([]))


@pytest.mark.parametrize("g", [2, 3])
def test_every_relator_member_is_trivial(g):
    for m in relator_cyclic_words(g).cyclic_words:
        assert dehn_trivial(W(m, g))


def test_dehn_free_cancellation_only():
    assert dehn_reduce((1, 2, -2, -1), 2) == ()
    assert dehn_reduce((1, 2), 2) == (1, 2)


def test_dehn_is_conjugation_stable():
    # a relator conjugated by anything stays trivial
    rng = random.Random(0)
    for _ in range(200):
        s = tuple(rng.choice([1, 2, 3, 4, -1, -2, -3, -4]) for _ in range(6))
        w = tuple(-x for x in reversed(s)) + R2 + s
        assert dehn_trivial(W(w))


def test_cayley_ball_sizes():
    assert cayley_ball(2, 0) == {W([]): 0}
    assert len(cayley_ball(2, 1)) == 9
    assert len(cayley_ball(2, 2)) == 65


def test_cayley_ball_elements_are_distinct_under_dehn():
    # acceptance-gated spot check: normal-form keys really are distinct elements
    ball = list(cayley_ball(2, 2))
    for a, b in itertools.combinations(ball, 2):
        assert not dehn_equal(a, b)


def test_cayley_ball_budget():
    with pytest.raises(ResourceError):
        cayley_ball(2, 3, max_states=100)


def test_radius_three_agreement_with_normal_form():
    ball = list(cayley_ball(2, 3))
    rng = random.Random(1)
    sample = rng.sample(ball, 60)
    for a in sample:
        for b in sample:
            assert dehn_equal(a, b) == (nf(a) == nf(b))


def test_exact_cl_examples():
    u = W([1, 2, -1])
    assert exact_cl(u, u) == 0
    assert exact_cl(W([1]), W([-2, 1, 2])) == 1
    assert exact_cl(W([1]), W([-2, -2, 1, 2, 2])) == 2


def test_exact_cl_exhausts_on_non_conjugates():
    assert exact_cl(W([1]), W([2]), max_depth=2) == EXHAUSTED
    assert exact_cl(W([1]), W([-2, -2, 1, 2, 2]), max_depth=1) == EXHAUSTED
    assert exact_cl(W([1]), W([-2, -2, -2, 1, 2, 2, 2]), max_depth=5, max_states=20) == EXHAUSTED


def test_exact_cl_symmetry():
    rng = random.Random(3)
    for _ in range(30):
        u = Word(tuple(rng.choice([1, 2, -3, 4]) for _ in range(3)), 2)
        s = tuple(rng.choice([1, 2, 3, 4, -1, -2, -3, -4]) for _ in range(2))
        v = Word(tuple(-x for x in reversed(s)) + u.letters + s, 2)
        assert exact_cl(u, v, max_depth=4) == exact_cl(v, u, max_depth=4)


def test_search_result_independent_of_expansion_order():
    u, v = W([1]), W([-2, -2, 1, 2, 2])
    a = ConjGraphSearch(u, v, 6).run()
    b = ConjGraphSearch(u, v, 6, letter_order=(-4, -3, -2, -1, 4, 3, 2, 1)).run()
    assert a == b == 2


def test_minimality_examples():
    assert minimality_check(W([1]))
    assert minimality_check(W(R2))
    assert minimality_check(W([1, 2, 3, 4]))


def test_minimality_cap():
    with pytest.raises(ResourceError):
        minimality_check(W([1, 1, 1, 1, 1]))
