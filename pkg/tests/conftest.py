import hypothesis.strategies as st
import pytest
from hypothesis import settings

from surfgroup.presentation import Word

settings.register_profile("default", deadline=None, max_examples=200)
settings.load_profile("default")


def W(letters, g=2):
    return Word(tuple(letters), g)


def letters_of(g):
    pos = list(range(1, 2 * g + 1))
    return pos + [-i for i in pos]


def words(g=2, max_size=12, min_size=0):
    return st.lists(st.sampled_from(letters_of(g)), min_size=min_size, max_size=max_size).map(
        lambda ls: Word(tuple(ls), g)
    )


@pytest.fixture
def w():
    return W
