"""Alphabet, generator order, relator family and the word wire format.

Letters are signed integers: ``i`` is ``c_i`` and ``-i`` is ``c_i^{-1}`` for
``1 <= i <= 2g``.  The generator order is

    c_{2g}^{-1} > ... > c_1^{-1} > c_1 > c_2 > ... > c_{2g}

and is realised by :func:`letter_rank`.  Inversion reverses it:
``rank(-x) == 4g + 1 - rank(x)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import (
    IncompatibleWordsError,
    InvalidGenusError,
    InvalidLetterError,
    ParseError,
)

MAX_EXPONENT = 10**6
ALPHA_MAX_GENUS = 13


def check_genus(g) -> int:
    if isinstance(g, bool) or not isinstance(g, int):
        raise InvalidGenusError(f"genus must be an integer, got {g!r}")
    if g < 2:
        raise InvalidGenusError(f"genus must be >= 2, got {g}")
    return g


def letter_rank(letter: int, g: int) -> int:
    """Position of ``letter`` in the generator order, from 1 (least) to 4g."""
    check_genus(g)
    if not isinstance(letter, int) or letter == 0 or abs(letter) > 2 * g:
        raise InvalidLetterError(f"letter {letter!r} is not in the alphabet of genus {g}")
    if letter < 0:
        return 2 * g - letter
    return 2 * g + 1 - letter


@dataclass(frozen=True)
class Word:
    """Immutable letter sequence tagged with its genus."""

    letters: tuple
    genus: int

    def __post_init__(self):
        check_genus(self.genus)
        letters = tuple(self.letters)
        bound = 2 * self.genus
        for x in letters:
            if not isinstance(x, int) or x == 0 or abs(x) > bound:
                raise InvalidLetterError(
                    f"letter {x!r} is not in the alphabet of genus {self.genus}"
                )
        object.__setattr__(self, "letters", letters)

    @classmethod
    def _trusted(cls, letters: tuple, genus: int) -> "Word":
        # skips validation; callers guarantee the letters are in range
        w = object.__new__(cls)
        object.__setattr__(w, "letters", letters)
        object.__setattr__(w, "genus", genus)
        return w

    @classmethod
    def identity(cls, genus: int) -> "Word":
        return cls((), genus)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word._trusted(self.letters[item], self.genus)
        return self.letters[item]

    def __add__(self, other: "Word") -> "Word":
        _same_genus(self, other)
        return Word._trusted(self.letters + other.letters, self.genus)

    def inverse(self) -> "Word":
        return Word._trusted(invert(self.letters), self.genus)

    def rotate(self, k: int) -> "Word":
        return Word._trusted(rotate(self.letters, k), self.genus)

    def __repr__(self):
        return f"Word({list(self.letters)}, g={self.genus})"

    def __str__(self):
        return format_word(self)


def word(letters: Iterable[int], g: int) -> Word:
    return Word(tuple(letters), g)


def _same_genus(a: Word, b: Word) -> int:
    if a.genus != b.genus:
        raise IncompatibleWordsError(f"genus mismatch: {a.genus} vs {b.genus}")
    return a.genus


def invert(letters: Sequence[int]) -> tuple:
    return tuple(-x for x in reversed(letters))


def rotate(letters: Sequence[int], k: int) -> tuple:
    """``letters[k:] + letters[:k]`` with ``k`` taken modulo the length."""
    n = len(letters)
    if n == 0:
        return ()
    k %= n
    return tuple(letters[k:]) + tuple(letters[:k])


# -- order -------------------------------------------------------------------


def lenlex_key(letters: Sequence[int], g: int) -> tuple:
    """Sort key realising the length-lexicographic order on plain tuples."""
    rank = tables(g).rank
    return (len(letters), tuple(rank[x] for x in letters))


def compare_lenlex(a: Word, b: Word) -> int:
    """Return -1, 0 or 1 as ``a`` is below, equal to or above ``b``."""
    g = _same_genus(a, b)
    ka, kb = lenlex_key(a.letters, g), lenlex_key(b.letters, g)
    return (ka > kb) - (ka < kb)


# -- relator family ----------------------------------------------------------


@dataclass(frozen=True)
class RelatorFamily:
    """The 8g cyclic permutations of R and R^{-1}.

    Member ``i < 4g`` is R rotated to start at its i-th letter; member
    ``4g + i`` is the same rotation of R^{-1}.
    """

    genus: int
    cyclic_words: tuple
    # (first, second) letter -> member id; every such pair names at most one member
    by_prefix: dict = field(repr=False, compare=False)

    def __len__(self):
        return len(self.cyclic_words)

    def __getitem__(self, rid: int) -> tuple:
        return self.cyclic_words[rid]

    def describe(self, rid: int) -> str:
        n = 4 * self.genus
        base = "R" if rid < n else "R^-1"
        return f"{base}-rotation-{rid % n}"


def base_relator(g: int) -> tuple:
    check_genus(g)
    pos = tuple(range(1, 2 * g + 1))
    return pos + tuple(-i for i in pos)


@lru_cache(maxsize=None)
def relator_cyclic_words(g: int) -> RelatorFamily:
    r = base_relator(g)
    members = [rotate(r, i) for i in range(4 * g)]
    members += [rotate(invert(r), i) for i in range(4 * g)]
    by_prefix = {}
    for rid, m in enumerate(members):
        key = (m[0], m[1])
        if key in by_prefix:  # pragma: no cover - structural fact of the presentation
            raise AssertionError(f"prefix {key} shared by two relator members")
        by_prefix[key] = rid
    return RelatorFamily(g, tuple(members), by_prefix)


def fractional_relator_extent(w: Word, start: int) -> list:
    """Members whose prefix of length >= 2 matches ``w`` at ``start``.

    Returns ``(relator_id, k)`` pairs with ``k`` maximal, capped at 4g and at
    the remaining length.  ``start`` is 0-based.
    """
    n = len(w)
    if not 0 <= start < n:
        raise IndexError(f"start {start} outside word of length {n}")
    fam = relator_cyclic_words(w.genus)
    letters = w.letters
    out = []
    limit = min(4 * w.genus, n - start)
    for rid, m in enumerate(fam.cyclic_words):
        k = 0
        while k < limit and letters[start + k] == m[k]:
            k += 1
        if k >= 2:
            out.append((rid, k))
    return out


# -- precomputed tables --------------------------------------------------------


class Tables:
    """Per-genus lookup tables used by the inner loops."""

    def __init__(self, g: int):
        check_genus(g)
        self.g = g
        self.n = 4 * g
        fam = relator_cyclic_words(g)
        self.family = fam
        self.members = fam.cyclic_words
        self.letters = tuple(range(1, 2 * g + 1)) + tuple(range(-1, -2 * g - 1, -1))
        self.rank = {x: letter_rank(x, g) for x in self.letters}
        # members starting with a given letter: one rotation of R, one of R^-1
        starts = {x: [] for x in self.letters}
        for rid, m in enumerate(self.members):
            starts[m[0]].append(rid)
        self.starts = {x: tuple(v) for x, v in starts.items()}
        # S4 rules exist only for members with b_1 > b_{2g}
        self.s4 = tuple(self.rank[m[0]] > self.rank[m[2 * g - 1]] for m in self.members)
        self.by_prefix = fam.by_prefix

    def member_with(self, a: int, b: int, offset: int):
        """Member id whose letters at ``offset, offset+1`` are ``a, b``."""
        rid = self.by_prefix.get((a, b))
        if rid is None:
            return None
        n = self.n
        base = 0 if rid < n else n
        return base + (rid - base - offset) % n


@lru_cache(maxsize=None)
def tables(g: int) -> Tables:
    return Tables(g)


# -- wire format ---------------------------------------------------------------

_TOKEN = re.compile(r"^([+-]?\d+)(?:\^([+-]?\d+))?$")


def parse_word(text: str, g: int, style: str = "int") -> Word:
    """Parse the wire format.

    ``int`` style: whitespace separated tokens ``i`` or ``i^e``; a negative
    exponent inverts the letter.  ``alpha`` style: ``a..z`` for ``c_1..c_26``
    and upper case for inverses.  The empty string is the identity.
    """
    check_genus(g)
    if style == "alpha":
        return _parse_alpha(text, g)
    if style != "int":
        raise ValueError(f"unknown word style {style!r}")
    letters = []
    for m in re.finditer(r"\S+", text):
        tok, pos = m.group(), m.start()
        t = _TOKEN.match(tok)
        if t is None:
            raise ParseError(f"malformed token {tok!r}", pos)
        idx = int(t.group(1))
        exp = int(t.group(2)) if t.group(2) is not None else 1
        if idx == 0 or abs(idx) > 2 * g:
            raise ParseError(f"letter index {idx} out of range for genus {g}", pos)
        if abs(exp) > MAX_EXPONENT:
            raise ParseError(f"exponent {exp} exceeds {MAX_EXPONENT}", pos)
        if exp < 0:
            idx, exp = -idx, -exp
        letters.extend([idx] * exp)
    return Word._trusted(tuple(letters), g)


def _parse_alpha(text: str, g: int) -> Word:
    if g > ALPHA_MAX_GENUS:
        raise ParseError(f"alpha style supports genus <= {ALPHA_MAX_GENUS}")
    letters = []
    for pos, ch in enumerate(text):
        if ch.isspace():
            continue
        if not ("a" <= ch.lower() <= "z"):
            raise ParseError(f"unexpected character {ch!r}", pos)
        idx = ord(ch.lower()) - ord("a") + 1
        if idx > 2 * g:
            raise ParseError(f"letter {ch!r} out of range for genus {g}", pos)
        letters.append(-idx if ch.isupper() else idx)
    return Word._trusted(tuple(letters), g)


def format_word(w: Word, style: str = "int") -> str:
    if style == "int":
        return " ".join(str(x) for x in w.letters)
    if style == "alpha":
        if w.genus > ALPHA_MAX_GENUS:
            raise ValueError(f"alpha style supports genus <= {ALPHA_MAX_GENUS}")
        return "".join(
            chr(ord("a") + abs(x) - 1).upper() if x < 0 else chr(ord("a") + x - 1)
            for x in w.letters
        )
    raise ValueError(f"unknown word style {style!r}")
