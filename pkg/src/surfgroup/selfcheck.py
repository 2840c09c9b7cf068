"""The acceptance checks as callable functions.

Each check returns a :class:`CheckResult`.  Sizes are parameters so the CLI
can run a quick pass and the test suite the full one.
"""

from __future__ import annotations

import itertools
import random
import time
from collections import defaultdict
from dataclasses import dataclass, field

from .conjugacy import conjugator, is_conjugate, lower_bound_witness, parity_check
from .cyclic import cyclic_normal_form
from .llfr import (
    _decompose,
    _eliminate_general,
    _eliminate_special,
    _runs,
    llfr_report,
    prepare_conjugation_form,
    special_shape,
)
from .oracle import cayley_ball, dehn_equal, dehn_reduce, exact_cl, minimality_check
from .presentation import Word, invert, tables
from .rewrite import is_freely_reduced_letters, normal_form, reduce_letters
from .sampling import draw_junction_instance, irreducible_pair, random_letters


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    checked: int
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        msg = f"[{status}] criterion {self.number}: {self.name} ({self.checked} checked, {self.elapsed:.1f}s)"
        if self.failures:
            msg += f"; first failure: {self.failures[0]}"
        return msg


def _timed(number, name, fn):
    t = time.perf_counter()
    checked, failures = fn()
    return CheckResult(number, name, not failures, checked, failures[:5], time.perf_counter() - t)


def _word(letters, g):
    return Word._trusted(tuple(letters), g)


# -- 1 ----------------------------------------------------------------------------


def check_soundness(max_exhaustive=6, samples=10_000, max_len=12, g=2, seed=1):
    def run():
        letters = tables(g).letters
        fails, n = [], 0
        for length in range(max_exhaustive + 1):
            for w in itertools.product(letters, repeat=length):
                n += 1
                if dehn_reduce(w + invert(reduce_letters(w, g)), g):
                    fails.append(w)
        rng = random.Random(seed)
        for _ in range(samples):
            w = random_letters(rng, g, max_len)
            n += 1
            if dehn_reduce(w + invert(reduce_letters(w, g)), g):
                fails.append(w)
        return n, fails

    return _timed(1, "normal-form soundness against the Dehn oracle", run)


# -- 2 ----------------------------------------------------------------------------


def check_minimality(radius=4, g=2):
    def run():
        ball = cayley_ball(g, radius)
        fails = [w.letters for w in ball if not minimality_check(w, cap=radius)]
        return len(ball), fails

    return _timed(2, "normal-form minimality by exhaustive enumeration", run)


# -- 3 ----------------------------------------------------------------------------


def check_confluence(samples=10_000, max_len=20, genera=(2, 3), seed=2):
    def run():
        rng = random.Random(seed)
        fails, n = [], 0
        for g in genera:
            for _ in range(samples // len(genera)):
                w = _word(random_letters(rng, g, max_len), g)
                canon, _ = normal_form(w)
                rand, _ = normal_form(w, strategy="random", rng=rng)
                n += 1
                if canon != rand:
                    fails.append((g, w.letters))
        return n, fails

    return _timed(3, "confluence: random rule order matches the canonical strategy", run)


# -- 4, 6, 8 -----------------------------------------------------------------------------


def ball_pairs(g=2, radius=3, include_equal=True):
    """Conjugate pairs of the ball, grouped through the class normal form."""
    ball = sorted(cayley_ball(g, radius), key=lambda w: (len(w), w.letters))
    classes = defaultdict(list)
    for w in ball:
        classes[cyclic_normal_form(w).class_nf].append(w)
    pairs = []
    for ws in classes.values():
        pairs.extend(itertools.combinations(ws, 2))
        if include_equal:
            pairs.extend((w, w) for w in ws)
    return ball, classes, pairs


def check_upper_bound(g=2, radius=3):
    def run():
        _, _, pairs = ball_pairs(g, radius)
        fails = []
        for u, v in pairs:
            c = conjugator(u, v)
            w = c.conjugator
            if not c.conjugate or w is None:
                fails.append(("not certified", u.letters, v.letters))
                continue
            limit = (len(u) + len(v)) // 2 + 8 * g - 1
            if len(w) > limit or not dehn_equal(w.inverse() + u + w, v):
                fails.append((u.letters, v.letters, w.letters))
        return len(pairs), fails

    return _timed(4, "conjugator within floor((|u|+|v|)/2) + 8g - 1 and Dehn-verified", run)


def check_r_sum(g=2, radius=3):
    def run():
        _, _, pairs = ball_pairs(g, radius)
        fails = []
        for u, v in pairs:
            c = conjugator(u, v)
            if c.r_sum is None or c.r_sum > 16 * g:
                fails.append((u.letters, v.letters, c.r_sum))
        return len(pairs), fails

    return _timed(8, "measured R1+R2+R1'+R2' <= 16g on every certificate", run)


def check_parity(g=2, radius=3, samples=2_000, max_len=12, seed=6):
    def run():
        ball, classes, _ = ball_pairs(g, radius, include_equal=False)
        fails, n = [], 0
        # every pair inside one class is conjugate; parity must agree class-wide
        for ws in classes.values():
            parities = {len(w) % 2 for w in ws}
            n += len(ws) * (len(ws) - 1) // 2
            if len(parities) > 1:
                fails.append([w.letters for w in ws][:4])
        rng = random.Random(seed)
        for _ in range(samples):
            u = _word(random_letters(rng, g, max_len), g)
            s = random_letters(rng, g, max_len // 2)
            v = _word(invert(s) + u.letters + s, g)
            for a, b in ((u, v), (_word(reduce_letters(u.letters, g), g), _word(reduce_letters(v.letters, g), g))):
                n += 1
                if is_conjugate(a, b) and not parity_check(a, b):
                    fails.append((a.letters, b.letters))
        return n, fails

    return _timed(6, "conjugate pairs have lengths of equal parity", run)


# -- 5 ----------------------------------------------------------------------------------


def check_witness(ns=(2, 3, 4), genera=(2, 3)):
    def run():
        fails, n = [], 0
        for g in genera:
            for k in ns:
                u, v, expected = lower_bound_witness(g, k)
                got = exact_cl(u, v)
                n += 1
                if got != expected:
                    fails.append((g, k, got, expected))
        return n, fails

    return _timed(5, "exact conjugator length of the lower-bound family is n - 1", run)


# -- 7 ------------------------------------------------------------------------------


def check_junction(samples=10_000, max_len=12, genera=(2, 3), seed=7):
    def run():
        rng = random.Random(seed)
        fails, n = [], 0
        for g in genera:
            for i in range(samples // len(genera)):
                U, V = irreducible_pair(rng, g, max_len, planted=i % 4 != 0)
                final, trace = normal_form(_word(U + V, g))
                n += 1
                if len(U) + len(V) - len(final) > 4 * g or len(trace) > 3:
                    fails.append((g, U, V, len(trace)))
        return n, fails

    return _timed(7, "junction length drop <= 4g in at most three steps", run)


# -- 9, 10 ------------------------------------------------------------------------------


def check_llfr_uniqueness(samples=10_000, genera=(2, 3), seed=9):
    def run():
        rng = random.Random(seed)
        fails, n = [], 0
        for g in genera:
            for _ in range(samples // len(genera)):
                X, U = draw_junction_instance(rng, g, special=False)
                runs = [r for r in _runs(invert(X) + U + X, g) if r[1] == 4 * g - 1]
                n += 1
                if len(runs) > 1:
                    fails.append((g, X, U))
        return n, fails

    return _timed(9, "at most one (4g-1)-LLFR in a prepared conjugation word", run)


def elimination_audit(g, X, U, Y, V):
    """Names of the postconditions an elimination step violates."""
    bad = []
    if not dehn_equal(_word(invert(X) + U + X, g), _word(invert(Y) + V + Y, g)):
        bad.append("group equality")
    if not is_freely_reduced_letters(invert(Y) + V + Y):
        bad.append("free reduction")
    rep = llfr_report(Y, V, g)
    if rep["left"] or rep["right"]:
        bad.append("(4g-1)-LLFR absence")
    if len(Y) >= len(X):
        bad.append("|X| decrease")
    if reduce_letters(Y, g) != Y:
        bad.append("Y irreducible")
    return bad


def check_elimination(samples=10_000, genera=(2, 3), pipeline_samples=1_000, max_len=14, seed=10):
    def run():
        rng = random.Random(seed)
        fails, n = [], 0
        for g in genera:
            for _ in range(samples // len(genera)):
                X, U = draw_junction_instance(rng, g)
                rid = special_shape(U, g)
                if rid is None:
                    Y, V = _eliminate_general(X, U, g)
                else:
                    Y, V = _eliminate_special(X, U, g, rid), U
                n += 1
                bad = elimination_audit(g, X, U, Y, V)
                if bad:
                    fails.append((g, X, U, bad))
            # the same audit on every step taken inside the full pipeline
            for _ in range(pipeline_samples // len(genera)):
                core = random_letters(rng, g, max_len // 2, 1)
                s = random_letters(rng, g, max_len // 2)
                u = _word(invert(s) + core + s, g)

                def audit(kind, X, U, Y, V, g=g):
                    nonlocal n
                    n += 1
                    Xd, Vd = _decompose(Y, V)
                    bad = elimination_audit(g, X, U, Xd, Vd)
                    if bad:
                        fails.append((g, "pipeline", X, U, bad))

                prepare_conjugation_form(u, check=audit)
        return n, fails

    return _timed(10, "every elimination keeps the element, stays reduced, drops the run, shortens X", run)


FULL = (
    check_soundness,
    check_minimality,
    check_confluence,
    check_upper_bound,
    check_witness,
    check_parity,
    check_junction,
    check_r_sum,
    check_llfr_uniqueness,
    check_elimination,
)


def run_all(quick: bool = False):
    if not quick:
        return [fn() for fn in FULL]
    return [
        check_soundness(max_exhaustive=4, samples=1_000),
        check_minimality(radius=3),
        check_confluence(samples=1_000),
        check_upper_bound(radius=2),
        check_witness(ns=(2, 3), genera=(2,)),
        check_parity(radius=2, samples=200),
        check_junction(samples=1_000),
        check_r_sum(radius=2),
        check_llfr_uniqueness(samples=1_000),
        check_elimination(samples=1_000, pipeline_samples=100),
    ]
