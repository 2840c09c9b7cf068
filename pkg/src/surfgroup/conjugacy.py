"""Conjugacy decision and explicit conjugators within ``floor((|u|+|v|)/2) + 8g - 1``.

Convention: a conjugator of ``(u, v)`` is a word ``w`` with ``w^{-1} u w == v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .cyclic import align_rotation, cyclic_normal_form
from .errors import InvalidParameterError
from .llfr import prepare_conjugation_form
from .oracle import DEFAULT_MAX_DEPTH, DEFAULT_MAX_STATES, exact_cl
from .presentation import Word, _same_genus, check_genus, format_word, invert
from .rewrite import reduce_letters


@dataclass(frozen=True)
class ConjugacyCertificate:
    u: Word
    v: Word
    conjugate: bool
    conjugator: Optional[Word]
    bound: int
    bound_satisfied: bool
    r_sum: Optional[int]
    exact_cl: object = None  # int, "exhausted", or None when not computed

    @property
    def conjugator_len(self):
        return None if self.conjugator is None else len(self.conjugator)

    def to_dict(self, style: str = "int") -> dict:
        return {
            "u": format_word(self.u, style),
            "v": format_word(self.v, style),
            "conjugate": self.conjugate,
            "conjugator": None if self.conjugator is None else format_word(self.conjugator, style),
            "conjugator_len": self.conjugator_len,
            "bound": self.bound,
            "bound_satisfied": self.bound_satisfied,
            "r_sum": self.r_sum,
            "exact_cl": self.exact_cl,
        }


def abelianization(w: Word) -> tuple:
    vec = [0] * (2 * w.genus)
    for x in w.letters:
        vec[abs(x) - 1] += 1 if x > 0 else -1
    return tuple(vec)


def parity_check(u: Word, v: Word) -> bool:
    return (len(u) - len(v)) % 2 == 0


def is_conjugate(u: Word, v: Word) -> bool:
    _same_genus(u, v)
    if not parity_check(u, v) or abelianization(u) != abelianization(v):
        return False
    return cyclic_normal_form(u).class_nf == cyclic_normal_form(v).class_nf


@lru_cache(maxsize=1 << 16)
def _prepared(w: Word):
    return prepare_conjugation_form(w)


def upper_bound(u: Word, v: Word) -> int:
    return (len(u) + len(v)) // 2 + 8 * u.genus - 1


def conjugator(
    u: Word,
    v: Word,
    exact: bool = False,
    max_depth: int = DEFAULT_MAX_DEPTH,
    max_states: int = DEFAULT_MAX_STATES,
) -> ConjugacyCertificate:
    """Certificate for the pair, with a constructed conjugator when one exists.

    Both sides are written ``u = X^{-1} A_2 A_1 X`` and ``v = Y^{-1} A_1 A_2 Y``.
    Then ``X^{-1} A_1^{-1} Y`` and ``X^{-1} A_2 Y`` both conjugate ``u`` to
    ``v``; the shorter normal form wins, ties going to the first.
    """
    g = _same_genus(u, v)
    bound = upper_bound(u, v)
    if not parity_check(u, v) or abelianization(u) != abelianization(v):
        return ConjugacyCertificate(u, v, False, None, bound, False, None)
    fu = _prepared(u)
    fv = _prepared(v)
    if fu.class_nf != fv.class_nf:
        return ConjugacyCertificate(u, v, False, None, bound, False, None)
    A = fu.class_nf
    A1, A2 = align_rotation(A, fu.rotation_offset, fv.rotation_offset)
    X, Y = fu.X.letters, fv.X.letters
    first = reduce_letters(invert(X) + invert(A1.letters) + Y, g)
    second = reduce_letters(invert(X) + A2.letters + Y, g)
    w = second if len(second) < len(first) else first
    nu = len(reduce_letters(u.letters, g))
    nv = len(reduce_letters(v.letters, g))
    r_sum = 2 * (len(X) + len(Y) + len(A)) - nu - nv
    ecl = exact_cl(u, v, max_depth, max_states) if exact else None
    return ConjugacyCertificate(
        u=u,
        v=v,
        conjugate=True,
        conjugator=Word._trusted(w, g),
        bound=bound,
        bound_satisfied=len(w) <= bound,
        r_sum=r_sum,
        exact_cl=ecl,
    )


def lower_bound_witness(g: int, n: int):
    """``u = c_1``, ``v = c_2^{1-n} c_1 c_2^{n-1}`` and their conjugator length ``n - 1``."""
    check_genus(g)
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise InvalidParameterError(f"n must be an integer >= 2, got {n!r}")
    u = Word._trusted((1,), g)
    v = Word._trusted((-2,) * (n - 1) + (1,) + (2,) * (n - 1), g)
    return u, v, n - 1
