"""Cyclic irreducibility and the normal form of a conjugacy class."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import NonTerminationError, ResourceError
from .presentation import Word, invert, lenlex_key, rotate, tables
from .rewrite import RewriteStep, Trace, _apply, _find_redexes, canonical_choice, reduce_letters


DEFAULT_ORBIT_STATES = 200_000


@dataclass(frozen=True)
class CyclicReductionResult:
    """``input == conjugator^{-1} * class_nf.rotate(rotation_offset) * conjugator``."""

    class_nf: Word
    conjugator: Word
    rotation_offset: int
    trace: Trace


def rotations(w: Word) -> list:
    """All ``|w|`` rotations in offset order, without deduplication."""
    if len(w) <= 1:
        return [w]
    return [w.rotate(k) for k in range(len(w))]


def _cyclically_irreducible(letters, T) -> bool:
    n = len(letters)
    if n <= 1:
        return True
    doubled = letters + letters
    # a redex in some rotation is a redex of length <= n in the doubled word
    for k in range(n):
        if _find_redexes(doubled[k : k + n], T):
            return False
    return True


def is_cyclically_irreducible(w: Word) -> bool:
    return _cyclically_irreducible(w.letters, tables(w.genus))


def cyclic_normal_form(w: Word, max_states: int = DEFAULT_ORBIT_STATES) -> CyclicReductionResult:
    """Canonical representative of the conjugacy class of ``w``.

    First the word is reduced cyclically: while some rotation carries a
    redex, rotate and reduce.  That yields a cyclically irreducible word,
    but not a unique one: distinct cyclically irreducible conjugates need
    not be rotations of each other (``c1 c2 c3`` and ``c3 c2 c1`` are
    conjugate by ``c4`` when g = 2).  So the second phase walks every
    conjugate of the same length reachable by single-letter conjugation
    followed by normal form, and returns the length-lex least cyclically
    irreducible one.
    """
    g = w.genus
    T = tables(g)
    steps = []
    cur, conj = reduce_letters(w.letters, g), ()  # w == conj^{-1} cur conj
    while True:
        cur, conj = _reduce_cyclically(cur, conj, g, T, steps, w)
        found = _orbit(cur, conj, g, max_states)
        if found[0] == "shorter":
            cur, conj = found[1], found[2]
            continue
        seen = found[1]
        best = min(
            (s for s in seen if _cyclically_irreducible(s, T)),
            key=lambda s: lenlex_key(s, g),
        )
        break
    conjugator = reduce_letters(seen[best], g)
    final = Word._trusted(best, g)
    return CyclicReductionResult(
        class_nf=final,
        conjugator=Word._trusted(conjugator, g),
        rotation_offset=0,
        trace=Trace(w, tuple(steps), final),
    )


def _reduce_cyclically(cur, conj, g, T, steps, w):
    key = lambda s: lenlex_key(s, g)
    visited = set()
    while True:
        n = len(cur)
        hit = None
        if n > 1:
            for k in range(n):
                rot = rotate(cur, k)
                rules = _find_redexes(rot, T)
                if rules:
                    hit = (k, rot, canonical_choice(rules))
                    break
        if hit is None:
            return cur, conj
        k, rot, rule = hit
        # cur = P Q with |P| = k; Q P = P^{-1} cur P
        conj = invert(cur[:k]) + conj
        after = _apply(rot, rule, T)
        steps.append(RewriteStep(rule, n, len(after), key(after) < key(rot)))
        nxt = reduce_letters(after, g)
        if len(nxt) == n:
            if nxt in visited:
                raise NonTerminationError(f"cyclic reduction revisited {nxt} from {w!r}")
            visited.add(nxt)
        else:
            visited = set()
        cur = nxt


def _orbit(start, conj, g, max_states):
    """Conjugates of length ``|start|`` reachable by one-letter moves, with conjugators.

    Returns ``("shorter", word, conjugator)`` as soon as a shorter conjugate
    shows up, else ``("orbit", {word: conjugator})``.
    """
    letters = tables(g).letters
    length = len(start)
    seen = {start: conj}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        c = seen[s]
        for x in letters:
            t = reduce_letters((-x,) + s + (x,), g)
            if len(t) > length or t in seen:
                continue
            # s = x t x^{-1}, so w = (x^{-1} c)^{-1} t (x^{-1} c)
            tc = (-x,) + c
            if len(t) < length:
                return ("shorter", t, tc)
            seen[t] = tc
            queue.append(t)
            if len(seen) > max_states:
                raise ResourceError(
                    f"conjugacy class orbit of length {length} exceeded {max_states} states"
                )
    return ("orbit", seen)


def align_rotation(A: Word, u_offset: int, v_offset: int):
    """Split ``A = ...`` so ``rotate(A, u_offset) == A2 A1`` and ``rotate(A, v_offset) == A1 A2``."""
    n = len(A)
    for off in (u_offset, v_offset):
        if n == 0 and off == 0:
            continue
        if not 0 <= off < n:
            raise IndexError(f"rotation offset {off} outside [0, {n})")
    if n == 0:
        return A, A
    cut = (u_offset - v_offset) % n
    av = A.rotate(v_offset)
    return av[:cut], av[cut:]
