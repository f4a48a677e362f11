"""Tableaux of a fixed (multi)partition shape."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterator, Sequence

from . import words
from .cartan import Multicharge, Quiver, as_multicharge
from .partitions import Multipartition, Node, as_multipartition, diagram, dominates, node_residue


@dataclass(frozen=True)
class Tableau:
    """A bijection from the nodes of ``shape`` to ``{1..n}``.

    ``entries`` lists the filling in row-reading order (component, row,
    column), i.e. aligned with :func:`partitions.diagram`.
    """

    shape: Multipartition
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "shape", as_multipartition(self.shape))
        entries = tuple(self.entries)
        n = self.shape.size
        if sorted(entries) != list(range(1, n + 1)):
            raise ValueError(f"entries {entries} are not a bijection onto 1..{n}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, shape, rows: Sequence) -> "Tableau":
        """Build from nested rows: ``[[1,2,3],[4]]`` or per component ``[[[1,2]],[[3]]]``."""
        lam = as_multipartition(shape)
        if lam.level == 1 and rows and not (rows[0] and isinstance(rows[0][0], (list, tuple))):
            rows = [rows]
        flat = [x for comp in rows for row in comp for x in row]
        return cls(lam, tuple(flat))

    @property
    def size(self) -> int:
        return self.shape.size

    @cached_property
    def nodes(self) -> tuple[Node, ...]:
        return tuple(diagram(self.shape))

    @cached_property
    def _position(self) -> dict[int, int]:
        return {x: k for k, x in enumerate(self.entries)}

    def entry(self, node: Node) -> int:
        return self.entries[self.nodes.index(Node(*node))]

    def node_of(self, m: int) -> Node:
        return self.nodes[self._position[m]]

    def rows(self) -> list[list[tuple[int, ...]]]:
        out = []
        k = 0
        for comp in self.shape.components:
            block = []
            for length in comp:
                block.append(self.entries[k:k + length])
                k += length
            out.append(block)
        return out

    def is_row_standard(self) -> bool:
        return all(
            all(a < b for a, b in zip(row, row[1:]))
            for comp in self.rows()
            for row in comp
        )

    def is_standard(self) -> bool:
        if not self.is_row_standard():
            return False
        for comp in self.rows():
            for upper, lower in zip(comp, comp[1:]):
                if any(lower[j] < upper[j] for j in range(len(lower))):
                    return False
        return True

    def residue_sequence(self, q: Quiver, charges: Multicharge | Sequence[int] | int) -> tuple[int, ...]:
        kappa = as_multicharge(charges)
        if kappa.level != self.shape.level:
            raise ValueError(f"multicharge {kappa} does not match the level of {self.shape}")
        return tuple(node_residue(q, kappa.entries, self.node_of(m)) for m in range(1, self.size + 1))

    def apply_transposition(self, r: int) -> "Tableau":
        """``s_r T``: swap the entries r and r+1."""
        if not 1 <= r < self.size:
            raise ValueError(f"s_{r} is not a simple transposition of S_{self.size}")
        return Tableau(
            self.shape,
            tuple(r + 1 if x == r else r if x == r + 1 else x for x in self.entries),
        )

    def apply_word(self, word: Sequence[int]) -> "Tableau":
        """Apply ``s_{c_1} ... s_{c_m}``; the rightmost letter acts first."""
        t = self
        for r in reversed(word):
            t = t.apply_transposition(r)
        return t

    def permutation(self) -> words.Perm:
        """The permutation ``w`` with ``w . T^shape = self``."""
        return self.entries

    def restricted_shape(self, m: int) -> Multipartition:
        """Shape occupied by the entries ``1..m`` (meaningful for standard tableaux)."""
        counts: list[list[int]] = [[0] * len(c) for c in self.shape.components]
        for x, node in zip(self.entries, self.nodes):
            if x <= m:
                counts[node.component - 1][node.row - 1] += 1
        return Multipartition(tuple(tuple(c for c in comp if c) for comp in counts))

    def __str__(self) -> str:
        comps = ["/".join(",".join(map(str, row)) for row in comp) for comp in self.rows()]
        return " | ".join(comps)


def initial(shape) -> Tableau:
    """``T^shape``: 1..n along successive rows, component by component."""
    lam = as_multipartition(shape)
    return Tableau(lam, tuple(range(1, lam.size + 1)))


def residue_sequence(T: Tableau, q: Quiver, charges) -> tuple[int, ...]:
    return T.residue_sequence(q, charges)


def is_row_standard(T: Tableau) -> bool:
    return T.is_row_standard()


def is_standard(T: Tableau) -> bool:
    return T.is_standard()


def apply_transposition(r: int, T: Tableau) -> Tableau:
    return T.apply_transposition(r)


def w_of(T: Tableau) -> words.Perm:
    if not T.is_row_standard():
        raise ValueError(f"tableau {T} is not row-standard")
    return T.permutation()


def chosen_word(T: Tableau) -> words.Word:
    """The fixed reduced expression for ``w^T`` (see :func:`words.canonical_word`)."""
    return words.canonical_word(w_of(T))


def enumerate_row_standard(shape) -> Iterator[Tableau]:
    """Row-standard tableaux in lexicographic order of their reading words."""
    lam = as_multipartition(shape)
    rows = lam.rows
    n = lam.size

    def rec(k: int, remaining: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if k == len(rows):
            yield ()
            return
        for chosen in combinations(remaining, rows[k]):
            rest = tuple(x for x in remaining if x not in chosen)
            for tail in rec(k + 1, rest):
                yield chosen + tail

    for entries in rec(0, tuple(range(1, n + 1))):
        yield Tableau(lam, entries)


def enumerate_standard(shape) -> Iterator[Tableau]:
    """Standard tableaux in lexicographic order of their reading words."""
    for T in enumerate_row_standard(shape):
        if T.is_standard():
            yield T


def tableau_dominates(s: Tableau, t: Tableau) -> bool:
    """Weak dominance: every restriction ``s|m`` dominates ``t|m``."""
    if s.size != t.size or s.shape.level != t.shape.level:
        raise ValueError("tableaux must have the same size and level")
    return all(
        dominates(_padded(s.restricted_shape(m), s.shape.level), _padded(t.restricted_shape(m), t.shape.level))
        for m in range(1, s.size + 1)
    )


def _padded(lam: Multipartition, level: int) -> Multipartition:
    return lam if lam.level == level else Multipartition(lam.components + ((),) * (level - lam.level))


def std_mu(lam, mu, q: Quiver, charges) -> list[Tableau]:
    """Standard ``lam``-tableaux ``s`` with ``res(s) = i^mu`` and ``s`` dominating ``T^mu``.

    Built entry by entry: entry ``m`` goes to an addable node of residue
    ``i^mu_m`` and the partial shape must keep dominating that of ``T^mu``.
    """
    lam, mu = as_multipartition(lam), as_multipartition(mu)
    kappa = as_multicharge(charges)
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: {lam} vs {mu}")
    if lam.level != mu.level or kappa.level != lam.level:
        raise ValueError("level mismatch between shapes and multicharge")
    target = initial(mu).residue_sequence(q, kappa)
    t_mu = initial(mu)
    mu_shapes = [None] + [t_mu.restricted_shape(m) for m in range(1, mu.size + 1)]
    level = lam.level
    n = lam.size
    results: list[Tableau] = []
    filling: dict[Node, int] = {}
    current = [[0] * len(c) for c in lam.components]

    def addable(c: int):
        comp = lam.components[c]
        for a in range(len(comp)):
            b = current[c][a]
            if b < comp[a] and (a == 0 or current[c][a - 1] > b):
                yield Node(c + 1, a + 1, b + 1)

    def rec(m: int):
        if m > n:
            results.append(Tableau(lam, tuple(filling[A] for A in diagram(lam))))
            return
        for c in range(level):
            for A in list(addable(c)):
                if node_residue(q, kappa.entries, A) != target[m - 1]:
                    continue
                current[c][A.row - 1] += 1
                part = Multipartition(tuple(tuple(x for x in comp if x) for comp in current))
                if dominates(_padded(part, level), _padded(mu_shapes[m], level)):
                    filling[A] = m
                    rec(m + 1)
                    del filling[A]
                current[c][A.row - 1] -= 1

    rec(1)
    return sorted(results, key=lambda T: T.entries)
