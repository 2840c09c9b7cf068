"""Independent ground truth.

The word-problem oracle is the classical Dehn algorithm: free cancellation
plus replacement of any piece of a relator longer than half of it by the
shorter complement.  It never uses the S3/S4 rules or the length-lex order,
so it cannot share their failure modes.  Conjugator length is computed by
breadth-first search in the conjugation graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Optional

from .errors import ResourceError
from .presentation import Word, base_relator, check_genus, invert, tables, _same_genus
from .rewrite import reduce_letters

DEFAULT_MAX_STATES = 10**6
DEFAULT_MAX_DEPTH = 20
EXHAUSTED = "exhausted"


# -- Dehn's algorithm --------------------------------------------------------


@lru_cache(maxsize=None)
def _cycles(g: int):
    r = base_relator(g)
    out = []
    for rel in (r, invert(r)):
        succ = {rel[i]: rel[(i + 1) % len(rel)] for i in range(len(rel))}
        out.append(succ)
    return tuple(out)


def dehn_reduce(letters, g: int) -> tuple:
    """Dehn-reduced form of ``letters``: freely reduced, no relator piece longer than 2g."""
    half = 2 * g
    cycles = _cycles(g)
    stack = []
    runs = []  # runs[i][c]: length of the walk along cycle c ending at stack[i]
    pending = list(reversed(letters))
    while pending:
        x = pending.pop()
        if stack and stack[-1] == -x:
            stack.pop()
            runs.pop()
            continue
        if stack:
            prev = stack[-1]
            run = tuple(
                runs[-1][c] + 1 if cycles[c][prev] == x else 1 for c in range(len(cycles))
            )
        else:
            run = (1,) * len(cycles)
        stack.append(x)
        runs.append(run)
        for c, succ in enumerate(cycles):
            if run[c] > half:
                # stack ends with b_1 .. b_{2g+1} of cycle c; swap in the inverse
                # of the remaining 2g - 1 letters b_{2g+2} .. b_{4g}
                rest = []
                y = x
                for _ in range(2 * half - run[c]):
                    y = succ[y]
                    rest.append(y)
                del stack[-run[c] :]
                del runs[-run[c] :]
                pending.extend(reversed(invert(rest)))
                break
    return tuple(stack)


def dehn_trivial(w: Word) -> bool:
    return not dehn_reduce(w.letters, w.genus)


def dehn_equal(u: Word, v: Word) -> bool:
    g = _same_genus(u, v)
    return not dehn_reduce(u.letters + invert(v.letters), g)


# -- Cayley ball ---------------------------------------------------------------


def cayley_ball(g: int, radius: int, max_states: int = DEFAULT_MAX_STATES) -> dict:
    """All elements of length <= ``radius`` mapped to their distance from 1.

    Keys are normal-form words.  The BFS distance is asserted equal to the
    normal-form length.
    """
    check_genus(g)
    letters = tables(g).letters
    dist = {(): 0}
    frontier = [()]
    for d in range(1, radius + 1):
        nxt = []
        for e in frontier:
            for x in letters:
                key = reduce_letters(e + (x,), g)
                if key not in dist:
                    dist[key] = d
                    nxt.append(key)
                    if len(dist) > max_states:
                        raise ResourceError(f"Cayley ball exceeded {max_states} states")
        frontier = nxt
    for key, d in dist.items():
        if len(key) != d:
            raise AssertionError(f"distance {d} != normal form length for {key}")
    return {Word._trusted(k, g): d for k, d in dist.items()}


# -- conjugator length by BFS ------------------------------------------------


@dataclass
class ConjGraphSearch:
    start: Word
    target: Word
    max_depth: int
    max_states: int = DEFAULT_MAX_STATES
    visited: set = field(default_factory=set)
    result: object = None
    letter_order: Optional[tuple] = None

    def run(self):
        g = _same_genus(self.start, self.target)
        letters = self.letter_order or tables(g).letters
        src = reduce_letters(self.start.letters, g)
        dst = reduce_letters(self.target.letters, g)
        self.visited = {src}
        if src == dst:
            self.result = 0
            return self.result
        frontier = [src]
        for depth in range(1, self.max_depth + 1):
            nxt = []
            for s in frontier:
                for x in letters:
                    key = reduce_letters((-x,) + s + (x,), g)
                    if key in self.visited:
                        continue
                    if key == dst:
                        self.result = depth
                        return depth
                    self.visited.add(key)
                    nxt.append(key)
                    if len(self.visited) > self.max_states:
                        self.result = EXHAUSTED
                        return EXHAUSTED
            if not nxt:
                break
            frontier = nxt
        self.result = EXHAUSTED
        return EXHAUSTED


def exact_cl(
    u: Word,
    v: Word,
    max_depth: int = DEFAULT_MAX_DEPTH,
    max_states: int = DEFAULT_MAX_STATES,
):
    """Least ``|w|`` with ``w^{-1} u w = v``, or ``"exhausted"``."""
    return ConjGraphSearch(u, v, max_depth, max_states).run()


def conjugation_distances(u: Word, targets, max_depth: int, max_states=DEFAULT_MAX_STATES) -> dict:
    """Conjugation-graph distance from ``u`` to each target reached within ``max_depth``."""
    g = u.genus
    letters = tables(g).letters
    want = {reduce_letters(t.letters, g) for t in targets}
    src = reduce_letters(u.letters, g)
    seen = {src: 0}
    found = {src: 0} if src in want else {}
    frontier = [src]
    depth = 0
    while frontier and depth < max_depth and len(found) < len(want):
        depth += 1
        nxt = []
        for s in frontier:
            for x in letters:
                key = reduce_letters((-x,) + s + (x,), g)
                if key in seen:
                    continue
                seen[key] = depth
                nxt.append(key)
                if key in want:
                    found[key] = depth
        if len(seen) > max_states:
            raise ResourceError(f"conjugation BFS exceeded {max_states} states")
        frontier = nxt
    return {Word._trusted(k, g): d for k, d in found.items()}


# -- exhaustive minimality -------------------------------------------------------


def _abelian(letters, g):
    vec = [0] * (2 * g)
    for x in letters:
        vec[abs(x) - 1] += 1 if x > 0 else -1
    return tuple(vec)


@lru_cache(maxsize=8)
def _candidates(g: int, cap: int) -> dict:
    """Freely reduced words of length <= cap bucketed by exponent-sum vector."""
    rank = tables(g).rank
    letters = tables(g).letters
    buckets = {}
    for n in range(cap + 1):
        for w in product(letters, repeat=n):
            if any(w[i] == -w[i + 1] for i in range(n - 1)):
                continue
            buckets.setdefault(_abelian(w, g), []).append(w)
    for ws in buckets.values():
        ws.sort(key=lambda w: (len(w), tuple(rank[x] for x in w)))
    return buckets


def minimality_check(w: Word, cap: int = 4) -> bool:
    """True iff no word below ``nf(w)`` in length-lex order represents ``w``.

    Only freely reduced candidates with the same exponent sums are tried:
    any smaller representative freely reduces to one of those.
    """
    g = w.genus
    target = reduce_letters(w.letters, g)
    if len(target) > cap:
        raise ResourceError(f"normal form length {len(target)} exceeds cap {cap}")
    rank = tables(g).rank
    key = (len(target), tuple(rank[x] for x in target))
    for cand in _candidates(g, cap).get(_abelian(w.letters, g), ()):
        if (len(cand), tuple(rank[x] for x in cand)) >= key:
            break
        if not dehn_reduce(cand + invert(w.letters), g):
            return False
    return True
