"""Exact arithmetic in the KLR algebra R_alpha of the linear or cyclic quiver.

Elements are integer combinations of normal-form monomials
``psi_w y_1^a_1 ... y_n^a_n e(i)`` where ``psi_w`` is read off the fixed
reduced word :func:`words.canonical_word`.  Monomials are keyed by
``(w, a, i)`` with ``i`` the idempotent on the right.

Left multiplication by a generator is the only primitive:

* ``psi_r`` on an ascent rewrites ``r + word(w)`` into the fixed word of
  ``s_r w`` by braid moves, each contributing a shorter correction;
* ``psi_r`` on a descent first rewrites ``word(w)`` to start with ``r`` and
  then uses the quadratic relation;
* ``y_r`` is pushed rightwards through the psi-letters.

Every relation used has integer coefficients, so no division occurs.
Caches are keyed on immutable data and hold deterministic values, so
concurrent readers at worst recompute an entry.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, NamedTuple, Sequence

from . import words
from .cartan import Adjacency, Multicharge, PositiveRoot, Quiver, adjacency, as_multicharge, cartan_entry

Key = tuple[words.Perm, tuple[int, ...], tuple[int, ...]]


class E(NamedTuple):
    i: tuple[int, ...]


class Y(NamedTuple):
    r: int


class Psi(NamedTuple):
    r: int


Atom = E | Y | Psi


def q_poly(q: Quiver, i: int, j: int) -> dict[tuple[int, int], int]:
    """``Q_{ij}(y_r, y_{r+1})`` as ``{(exp_r, exp_r+1): coeff}``."""
    adj = adjacency(q, i, j)
    if adj is Adjacency.EQUAL:
        return {}
    if adj is Adjacency.DISTANT:
        return {(0, 0): 1}
    if adj is Adjacency.ARROW_TO:
        return {(0, 1): 1, (1, 0): -1}
    return {(1, 0): 1, (0, 1): -1}


def braid_correction(q: Quiver, i: int, j: int, k: int) -> int:
    """Scalar ``c`` in ``psi_r psi_{r+1} psi_r e = (psi_{r+1} psi_r psi_{r+1} + c) e``."""
    if q.residue(i) != q.residue(k):
        return 0
    adj = adjacency(q, i, j)
    if adj is Adjacency.ARROW_TO:
        return 1
    if adj is Adjacency.ARROW_FROM:
        return -1
    return 0


def _add(target: dict, source: dict, scale: int = 1) -> None:
    for k, v in source.items():
        nv = target.get(k, 0) + scale * v
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)


class KLRAlgebra:
    """The algebra ``R_alpha`` (or all ``R_alpha`` of height ``n`` at once).

    ``alpha`` is only needed to expand words that carry no idempotent.
    """

    def __init__(self, quiver: Quiver, n: int, alpha: PositiveRoot | None = None):
        self.quiver = quiver
        self.n = n
        self.alpha = alpha
        self._left_psi: dict = {}
        self._left_y: dict = {}
        self._reduce: dict = {}

    # -- basic helpers -------------------------------------------------
    def _res(self, seq: Iterable[int]) -> tuple[int, ...]:
        return tuple(self.quiver.residue(x) for x in seq)

    def orbit(self, alpha: PositiveRoot | None = None) -> list[tuple[int, ...]]:
        """The residue sequences ``I^alpha`` in sorted order."""
        alpha = alpha or self.alpha
        if alpha is None:
            raise ValueError("a positive root is needed to expand a word without idempotent")
        if alpha.height != self.n:
            raise ValueError(f"root of height {alpha.height} does not match n={self.n}")
        letters = [i for i, m in alpha.multiplicities for _ in range(m)]
        return sorted(set(permutations(letters)))

    def _braid_coeff(self, word: words.Word, p: int, i: tuple[int, ...]) -> int:
        """Correction for the braid move at 0-based position ``p`` of ``word``."""
        j = words.place_permute(word[p + 3:], i)
        a, b = word[p], word[p + 1]
        if b == a + 1:
            r = a
            return braid_correction(self.quiver, j[r - 1], j[r], j[r + 1])
        r = b
        return -braid_correction(self.quiver, j[r - 1], j[r], j[r + 1])

    def _rewrite(self, word: words.Word, target: words.Word, a, i, drop_y: bool) -> dict:
        """Corrections ``C`` with ``psi_word y^a e(i) = psi_target y^a e(i) + C``."""
        out: dict = {}
        cur = word
        for move in words.transform(word, target):
            if move[0] == "b":
                p = move[1]
                c = self._braid_coeff(cur, p, i)
                if c:
                    _add(out, self.reduce_word(cur[:p] + cur[p + 3:], a, i, drop_y), c)
            cur = words.apply_move(cur, move)
        return out

    # -- primitives ----------------------------------------------------
    def left_psi(self, r: int, key: Key, drop_y: bool = False) -> dict:
        """Normal form of ``psi_r`` times the monomial ``key``."""
        memo_key = (r, key, drop_y)
        hit = self._left_psi.get(memo_key)
        if hit is not None:
            return hit
        w, a, i = key
        out: dict = {}
        if not words.is_left_descent(r, w):
            w2 = words.left_mul(r, w)
            out[(w2, a, i)] = 1
            _add(out, self._rewrite((r,) + words.canonical_word(w), words.canonical_word(w2), a, i, drop_y))
        else:
            v = words.left_mul(r, w)
            v_word = words.canonical_word(v)
            for k, c in self._rewrite(words.canonical_word(w), (r,) + v_word, a, i, drop_y).items():
                _add(out, self.left_psi(r, k, drop_y), c)
            j = words.act_on_sequence(v, i)
            base = (v, a, i)
            for (er, er1), c in q_poly(self.quiver, j[r - 1], j[r]).items():
                term = {base: 1}
                for _ in range(er):
                    term = self._left_y_elem(r, term, drop_y)
                for _ in range(er1):
                    term = self._left_y_elem(r + 1, term, drop_y)
                _add(out, term, c)
        if drop_y:
            out = {k: v for k, v in out.items() if not any(k[1])}
        self._left_psi[memo_key] = out
        return out

    def left_y(self, r: int, key: Key, drop_y: bool = False) -> dict:
        """Normal form of ``y_r`` times the monomial ``key``."""
        memo_key = (r, key, drop_y)
        hit = self._left_y.get(memo_key)
        if hit is not None:
            return hit
        w, a, i = key
        word = words.canonical_word(w)
        m = len(word)
        # idempotents to the right of each letter
        right = [None] * m
        cur = i
        for k in range(m - 1, -1, -1):
            right[k] = cur
            c = word[k]
            cur = cur[:c - 1] + (cur[c], cur[c - 1]) + cur[c + 1:]
        out: dict = {}
        t = r
        for k, c in enumerate(word):
            j = right[k]
            if t == c + 1:
                if j[c - 1] == j[c]:
                    _add(out, self.reduce_word(word[:k] + word[k + 1:], a, i, drop_y), 1)
                t = c
            elif t == c:
                if j[c - 1] == j[c]:
                    _add(out, self.reduce_word(word[:k] + word[k + 1:], a, i, drop_y), -1)
                t = c + 1
        if not drop_y:
            a2 = list(a)
            a2[t - 1] += 1
            _add(out, {(w, tuple(a2), i): 1})
        self._left_y[memo_key] = out
        return out

    def _left_y_elem(self, r: int, elem: dict, drop_y: bool) -> dict:
        out: dict = {}
        for k, c in elem.items():
            _add(out, self.left_y(r, k, drop_y), c)
        return out

    def reduce_word(self, word: Sequence[int], a: tuple[int, ...], i: tuple[int, ...],
                    drop_y: bool = False) -> dict:
        """Normal form of ``psi_{word[0]} ... psi_{word[-1]} y^a e(i)`` (any word)."""
        word = tuple(word)
        memo_key = (word, a, i, drop_y)
        hit = self._reduce.get(memo_key)
        if hit is not None:
            return hit
        if not word:
            out = {} if (drop_y and any(a)) else {(words.identity(self.n), a, i): 1}
        else:
            out = {}
            for k, c in self.reduce_word(word[1:], a, i, drop_y).items():
                _add(out, self.left_psi(word[0], k, drop_y), c)
        self._reduce[memo_key] = out
        return out

    # -- element level -------------------------------------------------
    def element(self, terms: dict) -> "KLRElement":
        return KLRElement(self, {k: v for k, v in terms.items() if v})

    def e(self, i: Sequence[int]) -> "KLRElement":
        i = self._res(i)
        return self.element({(words.identity(self.n), (0,) * self.n, i): 1})

    def monomial(self, w: words.Perm, a: Sequence[int], i: Sequence[int], coeff: int = 1) -> "KLRElement":
        return self.element({(tuple(w), tuple(a), self._res(i)): coeff})

    def reduce(self, atoms: Sequence[Atom], alpha: PositiveRoot | None = None) -> "KLRElement":
        """Normal form of the product of ``atoms`` (leftmost first).

        A word whose rightmost atom is not an idempotent is multiplied by
        ``1 = sum e(i)`` over ``I^alpha``.
        """
        atoms = list(atoms)
        self._validate(atoms)
        if atoms and isinstance(atoms[-1], E):
            current = dict(self.e(atoms.pop().i).terms)
        else:
            current = {(words.identity(self.n), (0,) * self.n, i): 1 for i in self.orbit(alpha)}
        for atom in reversed(atoms):
            current = self._left_atom(atom, current)
        return self.element(current)

    def _validate(self, atoms) -> None:
        for atom in atoms:
            if isinstance(atom, E):
                if len(atom.i) != self.n:
                    raise ValueError(f"idempotent {atom.i} does not have length {self.n}")
            elif isinstance(atom, Y):
                if not 1 <= atom.r <= self.n:
                    raise ValueError(f"y_{atom.r} out of range for n={self.n}")
            elif isinstance(atom, Psi):
                if not 1 <= atom.r < self.n:
                    raise ValueError(f"psi_{atom.r} out of range for n={self.n}")
            else:
                raise TypeError(f"not a KLR atom: {atom!r}")

    def _left_atom(self, atom: Atom, elem: dict) -> dict:
        out: dict = {}
        if isinstance(atom, E):
            j = self._res(atom.i)
            for k, c in elem.items():
                if words.act_on_sequence(k[0], k[2]) == j:
                    _add(out, {k: c})
            return out
        fn = self.left_psi if isinstance(atom, Psi) else self.left_y
        for k, c in elem.items():
            _add(out, fn(atom.r, k), c)
        return out

    def multiply(self, x: "KLRElement", y: "KLRElement") -> "KLRElement":
        out: dict = {}
        for (w2, a2, i2), c2 in y.terms.items():
            left_idem = words.act_on_sequence(w2, i2)
            for (w1, a1, i1), c1 in x.terms.items():
                if i1 != left_idem:
                    continue
                cur = {(w2, a2, i2): c1 * c2}
                for r in range(self.n, 0, -1):
                    for _ in range(a1[r - 1]):
                        cur = self._left_y_elem(r, cur, False)
                for r in reversed(words.canonical_word(w1)):
                    nxt: dict = {}
                    for k, c in cur.items():
                        _add(nxt, self.left_psi(r, k), c)
                    cur = nxt
                _add(out, cur)
        return self.element(out)

    def cyclotomic_reduce(self, x: "KLRElement", charges: Multicharge | Sequence[int]) -> "KLRElement":
        """Drop monomials with ``a_1 >= <Lambda, alpha_{i_1}>``."""
        kappa = as_multicharge(charges)
        mult: dict[int, int] = defaultdict(int)
        for k in kappa:
            mult[self.quiver.residue(k)] += 1
        return self.element({k: c for k, c in x.terms.items() if k[1][0] < mult[k[2][0]]})

    def monomial_degree(self, key: Key) -> int:
        w, a, i = key
        word = words.canonical_word(w)
        deg = 2 * sum(a)
        cur = i
        for r in reversed(word):
            deg -= cartan_entry(self.quiver, cur[r - 1], cur[r])
            cur = cur[:r - 1] + (cur[r], cur[r - 1]) + cur[r + 1:]
        return deg


@dataclass(frozen=True, eq=False)
class KLRElement:
    algebra: KLRAlgebra
    terms: dict

    def __add__(self, other: "KLRElement") -> "KLRElement":
        out = dict(self.terms)
        _add(out, other.terms)
        return KLRElement(self.algebra, out)

    def __neg__(self) -> "KLRElement":
        return KLRElement(self.algebra, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "KLRElement") -> "KLRElement":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "KLRElement":
        if scalar == 0:
            return KLRElement(self.algebra, {})
        return KLRElement(self.algebra, {k: scalar * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, KLRElement):
            return self.algebra.multiply(self, other)
        return other * self

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, KLRElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[Key, int]]:
        return sorted(
            self.terms.items(),
            key=lambda kv: (words.length(kv[0][0]), words.canonical_word(kv[0][0]), kv[0][1], kv[0][2]),
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(format_term(k, c) for k, c in self.sorted_terms()).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"KLRElement({self})"


def format_term(key: Key, coeff: int) -> str:
    """Render one term as ``3·ψ[2,1] y^(0,1,0) e(0,1,2)``."""
    w, a, i = key
    parts = []
    word = words.canonical_word(w)
    if word:
        parts.append("ψ[" + ",".join(map(str, word)) + "]")
    if any(a):
        parts.append("y^(" + ",".join(map(str, a)) + ")")
    parts.append("e(" + ",".join(map(str, i)) + ")")
    body = " ".join(parts)
    if coeff == 1:
        return body
    if coeff == -1:
        return "-" + body
    return f"{coeff}·{body}"
