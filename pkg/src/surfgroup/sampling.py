"""Random instances for sweeps and property tests."""

from __future__ import annotations

import random

from .cyclic import _cyclically_irreducible
from .llfr import _block, _junction_runs, _member_fn, _mirror, llfr_report, special_shape
from .presentation import invert, tables
from .rewrite import is_freely_reduced_letters, reduce_letters


def random_letters(rng: random.Random, g: int, max_len: int, min_len: int = 0) -> tuple:
    letters = tables(g).letters
    return tuple(rng.choice(letters) for _ in range(rng.randint(min_len, max_len)))


def random_reduced(rng: random.Random, g: int, max_len: int) -> tuple:
    """Normal form of a random word; lengths skew short."""
    return reduce_letters(random_letters(rng, g, max_len), g)


def junction_instance(rng: random.Random, g: int, max_tail: int = 6):
    """A pair ``(X, U)`` whose conjugation word carries a planted (4g-1)-run.

    Returns None when the draw misses the hypotheses (irreducible ``X``,
    cyclically irreducible ``U``, freely reduced ``X^{-1} U X``, a run of
    length ``4g - 1`` across a junction).  Callers redraw.
    """
    T = tables(g)
    b = _member_fn(rng.randrange(2 * T.n), g)
    t0 = rng.randint(1, 2)
    down = _block(b, 2 * g, 2)
    up = _block(b, 2, 2 * g)
    shape = rng.random()
    if shape < 0.4:
        X = down * t0 + random_letters(rng, g, max_tail)
        U = (b(1),) + up * t0 + random_letters(rng, g, max_tail)
    elif shape < 0.55:
        # short U: b_1 (b_2 .. b_2g)^(t0-1) b_2 .. b_{2g-1}
        t0 += 1
        X = down * t0 + random_letters(rng, g, max_tail)
        U = (b(1),) + up * (t0 - 1) + up[:-1]
    elif shape < 0.85:
        X = (b(2 * g + 1),) + down * t0 + random_letters(rng, g, max_tail)
        U = up * t0 + random_letters(rng, g, max_tail)
    else:
        core = _block(b, 1, 2 * g - 1) * rng.randint(1, 2)
        if rng.random() < 0.5:
            X = (b(2 * g),) + _block(b, 2 * g + 1, 4 * g - 1) * t0
        else:
            X = (b(2 * g),) + _block(b, 2 * g - 1, 1) * t0
        X += random_letters(rng, g, max_tail)
        U = core
    if rng.random() < 0.5:
        X, U = _mirror(X, U)
    X = reduce_letters(X, g)
    if not U or reduce_letters(U, g) != U or not _cyclically_irreducible(U, T):
        return None
    if not is_freely_reduced_letters(invert(X) + U + X):
        return None
    rep = llfr_report(X, U, g)
    if not rep["left"] and not rep["right"]:
        return None
    return X, U


def draw_junction_instance(rng: random.Random, g: int, special=None, tries: int = 10_000):
    """Redraw until :func:`junction_instance` succeeds; ``special`` filters on the U shape."""
    for _ in range(tries):
        inst = junction_instance(rng, g)
        if inst is None:
            continue
        if special is not None and (special_shape(inst[1], g) is not None) != special:
            continue
        return inst
    raise RuntimeError("no instance drawn")


def irreducible_pair(rng: random.Random, g: int, max_len: int, planted: bool = False):
    """Irreducible ``U, V`` with ``UV`` freely reduced and no (4g-1)-run at the junction.

    With ``planted`` the draw places a fractional relator, possibly periodic,
    across the junction so that most pairs actually reduce.
    """
    T = tables(g)
    while True:
        if planted:
            b = _member_fn(rng.randrange(2 * T.n), g)
            if rng.random() < 0.5:
                k = rng.randint(2, 4 * g - 2)
                cut = rng.randint(1, k - 1)
                run = _block(b, 1, k)
            else:
                t = rng.randint(1, 3)
                run = (b(1),) + _block(b, 2, 2 * g) * t + (b(2 * g + 1),) * rng.randint(0, 1)
                cut = rng.randint(1, len(run) - 1)
            U = reduce_letters(random_letters(rng, g, max_len) + run[:cut], g)
            V = reduce_letters(run[cut:] + random_letters(rng, g, max_len), g)
        else:
            U = random_reduced(rng, g, max_len)
            V = random_reduced(rng, g, max_len)
        if U and V and U[-1] == -V[0]:
            continue
        if _junction_runs(U, V, g, 4 * g - 1):
            continue
        return U, V
