import itertools
import random
from collections import defaultdict

from hypothesis import given
import hypothesis.strategies as st

from surfgroup.cyclic import align_rotation, cyclic_normal_form, is_cyclically_irreducible, rotations
from surfgroup.oracle import cayley_ball, conjugation_distances, dehn_equal
from surfgroup.presentation import Word, compare_lenlex
from surfgroup.rewrite import nf

from conftest import W, words


def test_rotations_examples():
    assert rotations(W([1, 2])) == [W([1, 2]), W([2, 1])]
    assert rotations(W([])) == [W([])]
    assert rotations(W([1, 1, 1])) == [W([1, 1, 1])] * 3


def test_cyclic_irreducibility_examples():
    assert is_cyclically_irreducible(W([1]))
    assert not is_cyclically_irreducible(W([1, -1]))
    assert not is_cyclically_irreducible(W([1, 2, 3, 4]))
    # irreducible as a word, but not around the wrap
    assert not is_cyclically_irreducible(W([-2, 1, 2]))


def test_cyclic_normal_form_examples():
    res = cyclic_normal_form(W([-2, 1, 2]))
    assert res.class_nf == W([1])
    assert res.conjugator == W([2])
    assert cyclic_normal_form(W([1, 2, 3, 4, -1, -2, -3, -4])).class_nf == W([])


def test_commutator_example_is_stable():
    w = W([2, 2, -1, -2, -2, 1])
    a = cyclic_normal_form(w).class_nf
    assert is_cyclically_irreducible(a)
    for r in rotations(w):
        assert cyclic_normal_form(r).class_nf == a


def test_non_rotation_conjugates_share_a_class_form():
    # c1 c2 c3 and c3 c2 c1 are conjugate by c4 yet not rotations of one another
    a, b = W([1, 2, 3]), W([3, 2, 1])
    assert b not in rotations(a)
    assert nf(W([-4]) + a + W([4])) == b
    assert cyclic_normal_form(a).class_nf == cyclic_normal_form(b).class_nf


def _certified(w, res):
    A = res.class_nf.rotate(res.rotation_offset) if len(res.class_nf) else res.class_nf
    return dehn_equal(w, res.conjugator.inverse() + A + res.conjugator)


@given(words(2, 14))
def test_certified_conjugator_and_shape(w):
    res = cyclic_normal_form(w)
    assert _certified(w, res)
    A = res.class_nf
    assert is_cyclically_irreducible(A)
    assert all(compare_lenlex(A, r) <= 0 for r in rotations(A))


@given(words(2, 12), words(2, 4))
def test_conjugation_invariance(w, s):
    conj = s.inverse() + w + s
    assert cyclic_normal_form(conj).class_nf == cyclic_normal_form(w).class_nf


@given(st.sampled_from([2, 3]).flatmap(lambda g: words(g, 12, 1)), st.integers(0, 11))
def test_rotation_invariance(w, k):
    assert cyclic_normal_form(w.rotate(k % len(w))).class_nf == cyclic_normal_form(w).class_nf


def test_radius_three_agreement_with_conjugation_graph():
    ball = sorted(cayley_ball(2, 3), key=lambda w: (len(w), w.letters))
    classes = defaultdict(set)
    for w in ball:
        classes[cyclic_normal_form(w).class_nf].add(w)
    # same class form => connected by the BFS
    for members in classes.values():
        first, *rest = sorted(members, key=lambda w: (len(w), w.letters))
        if rest:
            dist = conjugation_distances(first, rest, max_depth=8)
            assert set(dist) == set(rest)
    # connected by the BFS within the ball => same class form
    ball_set = set(ball)
    rng = random.Random(5)
    for w in rng.sample(ball, 80):
        reached = conjugation_distances(w, ball_set, max_depth=3)
        key = cyclic_normal_form(w).class_nf
        for v in reached:
            assert cyclic_normal_form(v).class_nf == key


def test_align_rotation_examples():
    A = W([1, 2, 3])
    A1, A2 = align_rotation(A, 0, 1)
    assert A.rotate(0) == A2 + A1 or A.rotate(0) == A1 + A2
    assert A.rotate(1) == A1 + A2 or A.rotate(1) == A2 + A1
    assert align_rotation(W([1]), 0, 0) == (W([]), W([1]))
    assert align_rotation(W([1, 2]), 1, 1) == (W([]), W([2, 1]))


def test_align_rotation_contract():
    # u side is A2 A1 and v side is A1 A2
    A = W([1, 2, 3, -4, 2])
    for a, b in itertools.product(range(5), repeat=2):
        A1, A2 = align_rotation(A, a, b)
        assert A2 + A1 == A.rotate(a)
        assert A1 + A2 == A.rotate(b)
