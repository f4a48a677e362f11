"""Garnir nodes, belts, Garnir tableaux and their psi-words."""

from __future__ import annotations

from dataclasses import dataclass

from . import words
from .partitions import Multipartition, Node, as_multipartition
from .tableaux import Tableau, initial


@dataclass(frozen=True)
class GarnirDatum:
    node: Node
    belt: tuple[Node, ...]
    tableau: Tableau
    word: words.Word


def _node(A) -> Node:
    A = tuple(A)
    if len(A) == 2:
        return Node(1, *A)
    return Node(*A)


def garnir_nodes(shape) -> list[Node]:
    """Nodes with a node directly below them, in row-reading order."""
    lam = as_multipartition(shape)
    return [
        Node(c, a, b)
        for c, comp in enumerate(lam.components, start=1)
        for a in range(1, len(comp))
        for b in range(1, comp[a] + 1)
    ]


def _check(A, lam: Multipartition) -> Node:
    A = _node(A)
    if A not in garnir_nodes(lam):
        raise ValueError(f"{tuple(A)} is not a Garnir node of {lam}")
    return A


def garnir_belt(A, shape) -> list[Node]:
    """Belt of ``A = (r, c)``: ``(r, c..lam_r)`` and ``(r+1, 1..c)``, bottom row first."""
    lam = as_multipartition(shape)
    A = _check(A, lam)
    comp = lam.components[A.component - 1]
    lower = [Node(A.component, A.row + 1, z) for z in range(1, A.col + 1)]
    upper = [Node(A.component, A.row, z) for z in range(A.col, comp[A.row - 1] + 1)]
    return lower + upper


def garnir_tableau(A, shape) -> Tableau:
    """Row-standard tableau agreeing with ``T^shape`` off the belt and increasing
    along the belt from its bottom-left end to its top-right end."""
    lam = as_multipartition(shape)
    belt = garnir_belt(A, lam)
    T = initial(lam)
    nodes = T.nodes
    entries = list(T.entries)
    belt_values = sorted(T.entries[nodes.index(B)] for B in belt)
    for B, x in zip(belt, belt_values):
        entries[nodes.index(B)] = x
    return Tableau(lam, tuple(entries))


def _row_offset(lam: Multipartition, A: Node) -> int:
    before = sum(sum(c) for c in lam.components[: A.component - 1])
    return before + sum(lam.components[A.component - 1][: A.row - 1])


def garnir_word(A, shape) -> words.Word:
    """Factorised word ``prod_{t=c-1..0} (N+c+t, ..., N+a+t)`` for ``A = (r, c)``.

    ``N`` counts the entries before row ``r`` and ``a`` is the length of row ``r``.
    """
    lam = as_multipartition(shape)
    A = _check(A, lam)
    N = _row_offset(lam, A)
    a = lam.components[A.component - 1][A.row - 1]
    c = A.col
    word: list[int] = []
    for t in range(c - 1, -1, -1):
        word.extend(range(N + c + t, N + a + t + 1))
    return tuple(word)


def garnir_datum(A, shape) -> GarnirDatum:
    lam = as_multipartition(shape)
    A = _check(A, lam)
    return GarnirDatum(A, tuple(garnir_belt(A, lam)), garnir_tableau(A, lam), garnir_word(A, lam))
