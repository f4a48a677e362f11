"""Permutations of {1..n}, reduced words and braid-move paths.

A permutation ``w`` is stored as the tuple of images ``(w(1), ..., w(n))``.
A word ``(c_1, ..., c_m)`` stands for the product ``s_{c_1} ... s_{c_m}``,
so the rightmost letter acts first.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

Perm = tuple[int, ...]
Word = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def inverse(w: Perm) -> Perm:
    inv = [0] * len(w)
    for x, wx in enumerate(w, start=1):
        inv[wx - 1] = x
    return tuple(inv)


def compose(u: Perm, v: Perm) -> Perm:
    """The product ``uv`` (apply ``v`` first)."""
    return tuple(u[x - 1] for x in v)


def left_mul(r: int, w: Perm) -> Perm:
    """``s_r w``: swap the values r and r+1."""
    return tuple(r + 1 if x == r else r if x == r + 1 else x for x in w)


def right_mul(w: Perm, q: int) -> Perm:
    """``w s_q``: swap the positions q and q+1."""
    lst = list(w)
    lst[q - 1], lst[q] = lst[q], lst[q - 1]
    return tuple(lst)


def length(w: Perm) -> int:
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


def is_left_descent(r: int, w: Perm) -> bool:
    """True when ``l(s_r w) < l(w)``."""
    return w.index(r) > w.index(r + 1)


def perm_of_word(word: Sequence[int], n: int) -> Perm:
    w = identity(n)
    for r in reversed(word):
        w = left_mul(r, w)
    return w


def is_reduced(word: Sequence[int], n: int) -> bool:
    return length(perm_of_word(word, n)) == len(word)


def place_permute(word: Sequence[int], seq: Sequence) -> tuple:
    """Act on a sequence by place permutations, rightmost letter first."""
    s = list(seq)
    for r in reversed(word):
        s[r - 1], s[r] = s[r], s[r - 1]
    return tuple(s)


def act_on_sequence(w: Perm, seq: Sequence) -> tuple:
    """``w . seq`` with ``(w.seq)_{w(k)} = seq_k``."""
    out = [None] * len(seq)
    for k, wk in enumerate(w):
        out[wk - 1] = seq[k]
    return tuple(out)


@lru_cache(maxsize=None)
def canonical_word(w: Perm) -> Word:
    """The fixed reduced expression used for ``psi_w`` throughout the package.

    Values 1, 2, ..., n are placed in increasing order.  When value ``t`` is
    placed, the position that must end up holding ``t`` currently holds some
    ``c >= t``; the factor ``s_t s_{t+1} ... s_{c-1}`` slides it down to ``t``.
    Later factors are written to the left, so the word is
    ``F_n ... F_2 F_1``.  On tableaux this reproduces the factorised Garnir
    words (e.g. ``(3,4,5,2,3,4)`` for the (4,2) Garnir tableau at (1,2)).
    """
    n = len(w)
    current = list(range(1, n + 1))  # current value at each position
    w_inv = inverse(w)
    factors: list[tuple[int, ...]] = []
    for t in range(1, n + 1):
        pos = w_inv[t - 1] - 1
        c = current[pos]
        factors.append(tuple(range(t, c)))
        if c > t:
            for k in range(n):
                v = current[k]
                if t <= v < c:
                    current[k] = v + 1
            current[pos] = t
    word: list[int] = []
    for f in reversed(factors):
        word.extend(f)
    return tuple(word)


# Braid-move paths.  A move is ("c", p) for a commutation of the letters at
# positions p, p+1 (0-based) or ("b", p) for a braid move on p, p+1, p+2.

Move = tuple[str, int]


def apply_move(word: Word, move: Move) -> Word:
    kind, p = move
    lst = list(word)
    if kind == "c":
        lst[p], lst[p + 1] = lst[p + 1], lst[p]
    else:
        a, b = lst[p], lst[p + 1]
        lst[p], lst[p + 1], lst[p + 2] = b, a, b
    return tuple(lst)


def _shift(moves: tuple[Move, ...], by: int) -> tuple[Move, ...]:
    return tuple((k, p + by) for k, p in moves)


@lru_cache(maxsize=None)
def moves_to_front(word: Word, s: int) -> tuple[tuple[Move, ...], Word]:
    """Braid/commutation moves turning ``word`` into a word starting with ``s``.

    ``s`` must be a left descent of the permutation represented by the
    reduced word ``word``.
    """
    if not word:
        raise ValueError(f"s_{s} is not a left descent of the empty word")
    t = word[0]
    if t == s:
        return (), word
    if abs(s - t) > 1:
        inner, rest = moves_to_front(word[1:], s)
        moves = _shift(inner, 1) + (("c", 0),)
        return moves, (s, t) + rest[1:]
    inner1, rest1 = moves_to_front(word[1:], s)
    inner2, rest2 = moves_to_front(rest1[1:], t)
    moves = _shift(inner1, 1) + _shift(inner2, 2) + (("b", 0),)
    return moves, (s, t, s) + rest2[1:]


@lru_cache(maxsize=None)
def transform(word: Word, target: Word) -> tuple[Move, ...]:
    """Moves carrying one reduced word to another for the same permutation."""
    moves: list[Move] = []
    cur = word
    for k, s in enumerate(target):
        inner, new_tail = moves_to_front(cur[k:], s)
        moves.extend(_shift(inner, k))
        cur = cur[:k] + new_tail
    if cur != target:
        raise ValueError(f"{word} and {target} are not reduced words of one permutation")
    return tuple(moves)
