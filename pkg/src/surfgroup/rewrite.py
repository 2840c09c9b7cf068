"""The S-rule rewriting system and reduction to normal form.

For a relator member ``b_1 ... b_{4g}`` (see :mod:`surfgroup.presentation`)
the rule families are

====  ===========================================  ================================
kind  leading word                                 replacement
====  ===========================================  ================================
S1    ``b_1 b_1^{-1}``                             empty
S2    ``b_1 ... b_k``, ``2g+1 <= k <= 4g``         ``b_{4g}^{-1} ... b_{k+1}^{-1}``
S3    ``b_1 (b_2 ... b_{2g})^t b_{2g+1}``, t >= 2  ``(b_{2g} ... b_2)^t``
S4a   ``b_1 (b_2 ... b_{2g})^t``, t >= 1           ``(b_{2g} ... b_2)^t b_1``
S4b   ``(b_1 ... b_{2g-1})^t b_{2g}``, t >= 1      ``b_{2g} (b_{2g-1} ... b_1)^t``
====  ===========================================  ================================

S4a/S4b only exist for members with ``b_1 > b_{2g}``.  Every rule strictly
decreases a word in length-lex order, and a word is the length-lex least
representative of its element exactly when no leading word occurs in it.

Positions are 0-based throughout.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import InvalidRuleError, NonTerminationError
from .presentation import Tables, Word, format_word, tables

KINDS = ("S1", "S2", "S3", "S4a", "S4b")
_PRIORITY = {"S1": 0, "S2": 1, "S3": 2, "S4a": 3, "S4b": 3}


@dataclass(frozen=True)
class RewriteRule:
    kind: str
    position: int
    relator_id: int
    k: Optional[int] = None
    t: Optional[int] = None

    def sort_key(self):
        param = self.k if self.kind == "S2" else (self.t or 0)
        return (_PRIORITY[self.kind], -param, self.position, self.relator_id, self.kind)


@dataclass(frozen=True)
class RewriteStep:
    rule: RewriteRule
    before_len: int
    after_len: int
    lenlex_decreased: bool


@dataclass(frozen=True)
class Trace:
    initial: Word
    steps: tuple
    final: Word

    def __len__(self):
        return len(self.steps)

    def replay(self) -> Word:
        w = self.initial
        for step in self.steps:
            w = apply_rule(w, step.rule)
        return w

    def serialize(self, style: str = "int") -> str:
        lines = [f"initial {format_word(self.initial, style)}".rstrip()]
        for s in self.steps:
            r = s.rule
            k = "-" if r.k is None else r.k
            t = "-" if r.t is None else r.t
            lines.append(
                f"{r.kind} {r.position} {r.relator_id} {k} {t} {s.before_len} {s.after_len}"
            )
        lines.append(f"final {format_word(self.final, style)}".rstrip())
        return "\n".join(lines)


# -- leading words and replacements ------------------------------------------


def _shape(kind, m, k, t, g):
    """(leading word, replacement) of a rule instance on member ``m``."""
    p = m[1 : 2 * g]  # b_2 .. b_{2g}
    q = p[::-1]  # b_{2g} .. b_2
    if kind == "S1":
        return (m[0], -m[0]), ()
    if kind == "S2":
        return m[:k], tuple(-x for x in reversed(m[k:]))
    if kind == "S3":
        return (m[0],) + p * t + (m[2 * g],), q * t
    if kind == "S4a":
        return (m[0],) + p * t, q * t + (m[0],)
    if kind == "S4b":
        p2 = m[: 2 * g - 1]
        return p2 * t + (m[2 * g - 1],), (m[2 * g - 1],) + p2[::-1] * t
    raise InvalidRuleError(f"unknown rule kind {kind!r}")


def _check_params(rule: RewriteRule, T: Tables):
    g = T.g
    kind = rule.kind
    if kind not in KINDS:
        raise InvalidRuleError(f"unknown rule kind {kind!r}")
    if not 0 <= rule.relator_id < 2 * T.n:
        raise InvalidRuleError(f"relator id {rule.relator_id} out of range")
    if kind == "S2" and not (rule.k is not None and 2 * g + 1 <= rule.k <= 4 * g):
        raise InvalidRuleError(f"S2 needs 2g+1 <= k <= 4g, got k={rule.k}")
    if kind == "S3" and not (rule.t is not None and rule.t >= 2):
        raise InvalidRuleError(f"S3 needs t >= 2, got t={rule.t}")
    if kind in ("S4a", "S4b"):
        if not (rule.t is not None and rule.t >= 1):
            raise InvalidRuleError(f"{kind} needs t >= 1, got t={rule.t}")
        if not T.s4[rule.relator_id]:
            raise InvalidRuleError(f"{kind} needs b_1 > b_2g on relator {rule.relator_id}")


def leading_word(rule: RewriteRule, g: int) -> tuple:
    T = tables(g)
    _check_params(rule, T)
    return _shape(rule.kind, T.members[rule.relator_id], rule.k, rule.t, g)[0]


def replacement(rule: RewriteRule, g: int) -> tuple:
    T = tables(g)
    _check_params(rule, T)
    return _shape(rule.kind, T.members[rule.relator_id], rule.k, rule.t, g)[1]


# -- redex detection ---------------------------------------------------------


def _count_blocks(letters, pos, block):
    """Number of consecutive copies of ``block`` starting at ``pos``."""
    size = len(block)
    t = 0
    while letters[pos : pos + size] == block:
        t += 1
        pos += size
    return t, pos


def _redexes_at(letters, i, T: Tables):
    g = T.g
    n = len(letters)
    x = letters[i]
    found = []
    if i + 1 < n and letters[i + 1] == -x:
        found.append(RewriteRule("S1", i, T.starts[x][0]))
    for rid in T.starts[x]:
        m = T.members[rid]
        limit = min(T.n, n - i)
        k = 1
        while k < limit and letters[i + k] == m[k]:
            k += 1
        if k >= 2 * g + 1:
            found.append(RewriteRule("S2", i, rid, k=k))
        if k >= 2 * g:
            t, end = _count_blocks(letters, i + 1, m[1 : 2 * g])
            if t >= 2 and end < n and letters[end] == m[2 * g]:
                found.append(RewriteRule("S3", i, rid, t=t))
            if T.s4[rid]:
                found.append(RewriteRule("S4a", i, rid, t=t))
        if k >= 2 * g - 1 and T.s4[rid]:
            t, end = _count_blocks(letters, i, m[: 2 * g - 1])
            if end < n and letters[end] == m[2 * g - 1]:
                found.append(RewriteRule("S4b", i, rid, t=t))
    return found


def _find_redexes(letters, T: Tables) -> list:
    out = []
    for i in range(len(letters)):
        out.extend(_redexes_at(letters, i, T))
    return out


def find_redexes(w: Word) -> list:
    """Every applicable rule, with ``k`` and ``t`` maximal per position, member and kind."""
    return _find_redexes(w.letters, tables(w.genus))


def _apply(letters, rule: RewriteRule, T: Tables) -> tuple:
    _check_params(rule, T)
    lead, rhs = _shape(rule.kind, T.members[rule.relator_id], rule.k, rule.t, T.g)
    p = rule.position
    if p < 0 or letters[p : p + len(lead)] != lead:
        raise InvalidRuleError(f"{rule} does not match the word at position {p}")
    return letters[:p] + rhs + letters[p + len(lead) :]


def apply_rule(w: Word, rule: RewriteRule) -> Word:
    return Word._trusted(_apply(w.letters, rule, tables(w.genus)), w.genus)


# -- normal form -------------------------------------------------------------


def canonical_choice(rules: list) -> RewriteRule:
    """S1 first, then S2 with largest k, S3 with largest t, S4 with largest t.

    Ties go to the leftmost position, then the lowest relator id.
    """
    return min(rules, key=RewriteRule.sort_key)


def normal_form(w: Word, strategy: str = "canonical", rng: Optional[random.Random] = None):
    """Reduce ``w`` to its normal form, returning ``(word, trace)``.

    ``strategy="random"`` picks uniformly among the applicable rules using
    ``rng``; by confluence the final word is the same.
    """
    T = tables(w.genus)
    letters = w.letters
    key = _rank_key(T)
    cap = max(1, len(letters)) * T.n * T.n
    if strategy == "random" and rng is None:
        rng = random.Random(0)
    steps = []
    while True:
        rules = _find_redexes(letters, T)
        if not rules:
            break
        if len(steps) >= cap:
            raise NonTerminationError(f"step cap {cap} exceeded reducing {w!r}")
        if strategy == "canonical":
            rule = canonical_choice(rules)
        elif strategy == "random":
            rule = rng.choice(rules)
        else:
            raise ValueError(f"unknown strategy {strategy!r}")
        after = _apply(letters, rule, T)
        decreased = key(after) < key(letters)
        if not decreased:
            raise NonTerminationError(f"{rule} did not decrease {letters}")
        steps.append(RewriteStep(rule, len(letters), len(after), decreased))
        letters = after
    final = Word._trusted(letters, w.genus)
    return final, Trace(w, tuple(steps), final)


def _rank_key(T: Tables):
    rank = T.rank
    return lambda letters: (len(letters), tuple(rank[x] for x in letters))


def is_irreducible(w: Word) -> bool:
    T = tables(w.genus)
    letters = w.letters
    return not any(_redexes_at(letters, i, T) for i in range(len(letters)))


def free_reduce(w: Word) -> Word:
    return Word._trusted(free_reduce_letters(w.letters), w.genus)


def free_reduce_letters(letters) -> tuple:
    out = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def is_freely_reduced(w: Word) -> bool:
    return is_freely_reduced_letters(w.letters)


def is_freely_reduced_letters(letters) -> bool:
    return all(letters[i] != -letters[i + 1] for i in range(len(letters) - 1))


# -- fast reduction ----------------------------------------------------------
#
# Left-to-right stack reduction.  The stack is kept irreducible, so after
# pushing a letter every redex must end at the top; those are found by
# scanning periodic blocks backwards.  Replacement letters are pushed back
# onto the input.  By confluence this yields the same normal form as
# ``normal_form``.


def _suffix_redex(out, T: Tables):
    n = len(out)
    if n < 2:
        return None
    a, b = out[-2], out[-1]
    if a == -b:
        return n - 2, ()
    g = T.g
    h = 2 * g - 1
    members = T.members
    # S2 with k = 2g+1: the top letter is b_{2g+1}
    if n >= 2 * g + 1:
        rid = T.member_with(a, b, 2 * g - 1)
        if rid is not None:
            m = members[rid]
            if tuple(out[n - 2 * g - 1 :]) == m[: 2 * g + 1]:
                return n - 2 * g - 1, tuple(-x for x in reversed(m[2 * g + 1 :]))
    # S3: top letter is b_{2g+1}, preceded by (b_2..b_2g)^t, t >= 2, and b_1
    rid = T.member_with(a, b, 2 * g - 1)
    if rid is not None:
        m = members[rid]
        t, start = _count_back(out, n - 1, m[1 : 2 * g])
        if t >= 2 and start >= 1 and out[start - 1] == m[0]:
            return start - 1, m[2 * g - 1 : 0 : -1] * t
    # S4a / S4b: top letter is b_{2g}
    rid = T.member_with(a, b, 2 * g - 2)
    if rid is not None and T.s4[rid]:
        m = members[rid]
        p = m[1 : 2 * g]
        t, start = _count_back(out, n, p)
        if t >= 1 and start >= 1 and out[start - 1] == m[0]:
            return start - 1, p[::-1] * t + (m[0],)
        p2 = m[:h]
        t, start = _count_back(out, n - 1, p2)
        if t >= 1:
            return start, (m[h],) + p2[::-1] * t
    return None


def _count_back(out, end, block):
    """Copies of ``block`` ending exactly at index ``end`` (exclusive)."""
    size = len(block)
    t = 0
    while end - size >= 0 and tuple(out[end - size : end]) == block:
        t += 1
        end -= size
    return t, end


@lru_cache(maxsize=1 << 18)
def reduce_letters(letters: tuple, g: int) -> tuple:
    """Normal form of a plain letter tuple (fast path, no trace)."""
    T = tables(g)
    out = []
    pending = list(reversed(letters))
    cap = (len(letters) + 1) * T.n**3
    pushes = 0
    while pending:
        out.append(pending.pop())
        pushes += 1
        if pushes > cap:
            raise NonTerminationError(f"stack reduction of {letters} exceeded its cap")
        hit = _suffix_redex(out, T)
        if hit is not None:
            start, rhs = hit
            del out[start:]
            pending.extend(reversed(rhs))
    return tuple(out)


def nf(w: Word) -> Word:
    """Normal form of ``w`` without a trace."""
    return Word._trusted(reduce_letters(w.letters, w.genus), w.genus)
