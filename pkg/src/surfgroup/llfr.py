"""Locally longest fractional relators and their removal from conjugation words.

A conjugation word is ``X^{-1} U X`` with ``U`` cyclically irreducible.  The
obstruction to a clean length estimate is a fractional relator of length
``4g - 1`` sitting across one of the two junctions.  The functions here
locate such runs and trade ``(X, U)`` for ``(Y, V)`` with ``V`` a rotation
of ``U``, the same group element, and a strictly shorter conjugating word.

Indices of relator letters ``b_i`` are 1-based and taken modulo ``4g``;
word positions are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclic import _cyclically_irreducible, cyclic_normal_form
from .errors import ContractError, NonTerminationError
from .presentation import Word, _same_genus, invert, rotate, tables
from .rewrite import _find_redexes, is_freely_reduced_letters, reduce_letters


@dataclass(frozen=True)
class Llfr:
    start: int
    length: int
    relator_id: int


@dataclass(frozen=True)
class ConjugationForm:
    """``input == X^{-1} * Aprime * X`` with ``Aprime == class_nf.rotate(rotation_offset)``."""

    X: Word
    Aprime: Word
    rotation_offset: int
    class_nf: Word


# -- runs ----------------------------------------------------------------------


def _runs(letters, g):
    """Maximal fractional-relator runs as ``(start, length, relator_id)``, length >= 2."""
    T = tables(g)
    n4 = T.n
    out = []
    i = 0
    m = len(letters)
    while i < m - 1:
        rid = T.by_prefix.get((letters[i], letters[i + 1]))
        if rid is None:
            i += 1
            continue
        member = T.members[rid]
        j = i + 2
        while j < m and letters[j] == member[(j - i) % n4]:
            j += 1
        out.append((i, j - i, rid))
        # consecutive runs on different cycles can share one letter
        i = j - 1
    return out


def find_llfrs(w: Word) -> list:
    """All locally longest fractional relators of ``w``, sorted by start.

    A run longer than ``4g`` is not a fractional relator itself; each of its
    length-``4g`` windows is reported instead.
    """
    g = w.genus
    T = tables(g)
    out = []
    for start, length, rid in _runs(w.letters, g):
        if length <= T.n:
            out.append(Llfr(start, length, rid))
            continue
        for s in range(start, start + length - T.n + 1):
            out.append(Llfr(s, T.n, T.by_prefix[(w.letters[s], w.letters[s + 1])]))
    return out


def _junction_runs(left, right, g, size):
    """Runs of exactly ``size`` letters in ``left + right`` touching both parts."""
    cut = len(left)
    return [
        r
        for r in _runs(left + right, g)
        if r[1] == size and r[0] < cut < r[0] + r[1]
    ]


def llfr_report(X, U, g) -> dict:
    """(4g-1)-runs across each junction of ``X^{-1} U X``, each side scanned on its own."""
    size = 4 * g - 1
    return {
        "left": _junction_runs(invert(X), U, g, size),
        "right": _junction_runs(U, X, g, size),
    }


# -- helpers ---------------------------------------------------------------------


def _member_fn(rid, g):
    m = tables(g).members[rid]
    n4 = len(m)
    return lambda i: m[(i - 1) % n4]


def _block(b, lo, hi):
    """``b_lo b_{lo+1} ... b_hi`` (or descending when ``lo > hi``)."""
    step = 1 if hi >= lo else -1
    return tuple(b(i) for i in range(lo, hi + step, step))


def _count_prefix_blocks(letters, block, start=0):
    n = len(block)
    t = 0
    pos = start
    while letters[pos : pos + n] == block:
        t += 1
        pos += n
    return t


def special_shape(U, g):
    """Member id ``rid`` with ``U == (b_1 ... b_{2g-1})^t`` for some t >= 1, else None."""
    size = 2 * g - 1
    if not U or len(U) % size:
        return None
    T = tables(g)
    rid = T.by_prefix.get((U[0], U[1]))
    if rid is None:
        return None
    block = T.members[rid][:size]
    if U != block * (len(U) // size):
        return None
    return rid


def _check_common(X, U, g, need_cyclic=True):
    T = tables(g)
    if _find_redexes(X, T):
        raise ContractError("X irreducible", f"X={list(X)}")
    if not U:
        raise ContractError("U nonempty")
    if need_cyclic and not _cyclically_irreducible(U, T):
        raise ContractError("U cyclically irreducible", f"U={list(U)}")
    if not is_freely_reduced_letters(invert(X) + U + X):
        raise ContractError("X^-1 U X freely reduced")


def _sigma(letters):
    return tuple(-x for x in letters)


def _mirror(X, U):
    # rev(X^-1 U X) == (sigma X)^-1 rev(U) (sigma X); an involution
    return _sigma(X), tuple(reversed(U))


# -- general elimination -----------------------------------------------------------


def _eliminate_left(X, U, g):
    """Primary case: the (4g-1)-run crosses the ``X^{-1} | U`` junction."""
    T = tables(g)
    runs = _junction_runs(invert(X), U, g, 4 * g - 1)
    if not runs:
        raise ContractError("a (4g-1)-LLFR at the X^-1 U junction")
    start, _, _ = runs[0]
    from_x = len(X) - start
    UX = U + X
    if from_x == 2 * g - 1:
        # 2g-1 letters from X^-1: X = (b_2g .. b_2)^t0 X1, U X = b_1 (b_2 .. b_2g)^t0 Z
        b = _member_fn(T.by_prefix[(U[0], U[1])], g)
        down = _block(b, 2 * g, 2)
        up = _block(b, 2, 2 * g)
        t0 = min(_count_prefix_blocks(X, down), _count_prefix_blocks(UX, up, 1))
        if t0 < 1:
            raise ContractError("periodic block (2g-1 letters from X^-1)", f"X={list(X)} U={list(U)}")
        X1 = X[(2 * g - 1) * t0 :]
        head = 1 + (2 * g - 1) * t0
        if len(U) >= head:
            # U outlasts the periodic part
            U1 = U[head:]
            V = U1 + U[:head]
            Y = reduce_letters((b(2 * g + 1),) + X1, g)
        else:
            # short U: U = b_1 (b_2 .. b_2g)^(t0-1) b_2 .. b_{2g-1}
            if len(U) != head - 1 or t0 < 2:
                raise ContractError("short U shape", f"U={list(U)} t0={t0}")
            cut = 2 * g - 2
            V = U[-cut:] + U[:-cut]
            Y = reduce_letters((b(2 * g + 1),) + down + X1, g)
        return Y, V
    if from_x == 2 * g:
        # 2g letters from X^-1: X = b_{2g+1} (b_2g .. b_2)^t0 X1, U = (b_2 .. b_2g)^t0 U1
        b = _member_fn(T.by_prefix[(-X[0], U[0])], g)
        down = _block(b, 2 * g, 2)
        up = _block(b, 2, 2 * g)
        t0 = min(_count_prefix_blocks(X, down, 1), _count_prefix_blocks(UX, up))
        if t0 < 1 or len(U) < (2 * g - 1) * t0:
            raise ContractError("periodic block (2g letters from X^-1)", f"X={list(X)} U={list(U)}")
        k = (2 * g - 1) * t0
        X1 = X[1 + k :]
        V = U[k:] + U[:k]
        Y = (X[0],) + X1
        return Y, V
    raise ContractError("run splits 2g-1 or 2g letters into X^-1", f"split {from_x}")


def _eliminate_general(X, U, g):
    report = llfr_report(X, U, g)
    if report["left"]:
        Y, V = _eliminate_left(X, U, g)
    elif report["right"]:
        Xm, Um = _mirror(X, U)
        Ym, Vm = _eliminate_left(Xm, Um, g)
        Y, V = _mirror(Ym, Vm)
        Y = reduce_letters(Y, g)
    else:
        raise ContractError("a (4g-1)-LLFR in X^-1 U or U X")
    # for a short U, nf(Y) may open with b_2, which V also opens with
    return _decompose(Y, V)


def eliminate_4g1_general(X: Word, U: Word):
    """Replace ``(X, U)`` by ``(Y, V)``: same element, ``V`` a rotation of ``U``, ``|Y| < |X|``."""
    g = X.genus
    _check_common(X.letters, U.letters, g)
    if special_shape(U.letters, g) is not None:
        raise ContractError("U is not (b_1 ... b_{2g-1})^t", f"U={list(U.letters)}")
    Y, V = _eliminate_general(X.letters, U.letters, g)
    return Word._trusted(Y, g), Word._trusted(V, g)


# -- special elimination -------------------------------------------------------------


def _eliminate_special(X, U, g, rid):
    b = _member_fn(rid, g)
    report = llfr_report(X, U, g)
    if report["right"]:
        block = _block(b, 2 * g + 1, 4 * g - 1)
    elif report["left"]:
        block = _block(b, 2 * g - 1, 1)
    else:
        raise ContractError("a (4g-1)-LLFR in X^-1 U or U X")
    if not X or X[0] != b(2 * g):
        raise ContractError("X starts with b_2g", f"X={list(X)}")
    t1 = _count_prefix_blocks(X, block, 1)
    if t1 < 1:
        raise ContractError("X = b_2g (block)^t1 X1 with t1 >= 1", f"X={list(X)}")
    return (X[0],) + X[1 + len(block) * t1 :]


def eliminate_4g1_special(X: Word, U: Word) -> Word:
    """For ``U = (b_1 ... b_{2g-1})^t``: a shorter ``Y`` with ``Y^{-1} U Y == X^{-1} U X``."""
    g = X.genus
    _check_common(X.letters, U.letters, g, need_cyclic=False)
    rid = special_shape(U.letters, g)
    if rid is None:
        raise ContractError("U = (b_1 ... b_{2g-1})^t", f"U={list(U.letters)}")
    return Word._trusted(_eliminate_special(X.letters, U.letters, g, rid), g)


# -- pipeline -------------------------------------------------------------------------


def _decompose(C, A):
    X, Arot = C, A
    if not A:
        return (), ()
    while X:
        if Arot[0] == X[0]:
            Arot = rotate(Arot, 1)
        elif Arot[-1] == -X[0]:
            Arot = rotate(Arot, -1)
        else:
            break
        X = X[1:]
    return X, Arot


def decompose_freely_reduced(C: Word, A: Word):
    """Cancel ``C^{-1} A C`` into a freely reduced ``X^{-1} Arot X``.

    Each cancellation at a junction strips the first letter of the
    conjugator and rotates ``A`` one step, so ``X`` is a suffix of ``C``.
    """
    _same_genus(C, A)
    X, Arot = _decompose(C.letters, A.letters)
    return Word._trusted(X, C.genus), Word._trusted(Arot, C.genus)


def _offset(A, Arot):
    n = len(A)
    if n == 0:
        return 0
    for k in range(n):
        if rotate(A, k) == Arot:
            return k
    raise ContractError("Aprime is a rotation of the class normal form")


def prepare_conjugation_form(u: Word, check=None) -> ConjugationForm:
    """Write ``u`` as ``X^{-1} A' X`` meeting the four conditions of the upper-bound argument.

    ``check``, when given, is called as ``check(kind, X, U, Y, V)`` after every
    elimination step so sweeps can audit each call.
    """
    g = u.genus
    res = cyclic_normal_form(u)
    A = res.class_nf.letters
    X, U = _decompose(res.conjugator.letters, A)
    budget = len(X) + 1
    for _ in range(budget + 1):
        report = llfr_report(X, U, g)
        if not report["left"] and not report["right"]:
            return ConjugationForm(
                X=Word._trusted(X, g),
                Aprime=Word._trusted(U, g),
                rotation_offset=_offset(A, U),
                class_nf=res.class_nf,
            )
        rid = special_shape(U, g)
        if rid is not None:
            kind = "special"
            Y, V = _eliminate_special(X, U, g, rid), U
        else:
            kind = "general"
            Y, V = _eliminate_general(X, U, g)
        if check is not None:
            check(kind, X, U, Y, V)
        if len(Y) >= len(X):
            raise NonTerminationError(f"elimination did not shorten X={list(X)} U={list(U)}")
        X, U = _decompose(Y, V)
    raise NonTerminationError(f"elimination loop exceeded {budget} rounds for {u!r}")
