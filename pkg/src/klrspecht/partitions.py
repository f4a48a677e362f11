"""Partitions, multipartitions, Young diagrams and their counting formulas.

Partitions are plain tuples of positive integers in weakly decreasing
order.  A :class:`Multipartition` is an ordered tuple of partitions; a
partition is treated as a multipartition of level one wherever a
multipartition is expected.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from math import factorial, prod
from typing import Iterator, NamedTuple, Sequence

from .cartan import Multicharge, PositiveRoot, Quiver, as_multicharge, residue_of_node

Partition = tuple[int, ...]


class Node(NamedTuple):
    """A node ``(component, row, column)``; all coordinates start at 1."""

    component: int
    row: int
    col: int


def check_partition(parts: Sequence[int]) -> Partition:
    parts = tuple(int(p) for p in parts)
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"partition parts must be weakly decreasing: {parts}")
    return parts


@dataclass(frozen=True)
class Multipartition:
    components: tuple[Partition, ...]

    def __post_init__(self):
        comps = tuple(check_partition(c) for c in self.components)
        if not comps:
            raise ValueError("a multipartition needs at least one component")
        object.__setattr__(self, "components", comps)

    @classmethod
    def parse(cls, text: str) -> "Multipartition":
        """Parse ``"5,5,4,2,2"`` or ``"4|2,1,1,1"``; an empty component is ``""``."""
        comps = []
        for chunk in text.strip().split("|"):
            chunk = chunk.strip().strip("()")
            if chunk in ("", "-", "0", "empty"):
                comps.append(())
            else:
                comps.append(tuple(int(p) for p in chunk.split(",") if p.strip()))
        return cls(tuple(comps))

    @property
    def level(self) -> int:
        return len(self.components)

    @property
    def size(self) -> int:
        return sum(sum(c) for c in self.components)

    @property
    def rows(self) -> tuple[int, ...]:
        """All row lengths, component by component."""
        return tuple(p for c in self.components for p in c)

    def __getitem__(self, k: int) -> Partition:
        return self.components[k]

    def __iter__(self):
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __str__(self) -> str:
        return "|".join(",".join(map(str, c)) for c in self.components)

    def __repr__(self) -> str:
        return f"Multipartition('{self}')"


def as_multipartition(shape) -> Multipartition:
    if isinstance(shape, Multipartition):
        return shape
    if isinstance(shape, str):
        return Multipartition.parse(shape)
    shape = tuple(shape)
    if shape and all(isinstance(c, (tuple, list)) for c in shape):
        return Multipartition(tuple(tuple(c) for c in shape))
    return Multipartition((tuple(shape),))


def as_partition(shape) -> Partition:
    lam = as_multipartition(shape)
    if lam.level != 1:
        raise ValueError(f"expected a single partition, got {lam}")
    return lam.components[0]


def diagram(shape) -> list[Node]:
    """Nodes of ``[shape]`` in row-reading order."""
    lam = as_multipartition(shape)
    return [
        Node(c, a, b)
        for c, comp in enumerate(lam.components, start=1)
        for a, length in enumerate(comp, start=1)
        for b in range(1, length + 1)
    ]


def conjugate(parts: Sequence[int]) -> Partition:
    parts = check_partition(parts)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


def node_residue(q: Quiver, charges: Sequence[int], node: Node) -> int:
    return residue_of_node(q, charges[node.component - 1], node.row, node.col)


def residue_content(shape, q: Quiver, charges: Multicharge | Sequence[int] | int) -> PositiveRoot:
    lam = as_multipartition(shape)
    kappa = as_multicharge(charges)
    if kappa.level != lam.level:
        raise ValueError(f"multicharge {kappa} has level {kappa.level}, shape {lam} has level {lam.level}")
    return PositiveRoot.from_residues(node_residue(q, kappa.entries, A) for A in diagram(lam))


def hook_length(parts: Sequence[int], i: int, j: int) -> int:
    parts = check_partition(parts)
    if not (1 <= i <= len(parts) and 1 <= j <= parts[i - 1]):
        raise ValueError(f"node ({i},{j}) is not in the diagram of {parts}")
    return 1 + (parts[i - 1] - j) + (conjugate(parts)[j - 1] - i)


def row_hook_product(parts: Sequence[int], i: int) -> int:
    """Product of the hook lengths along row ``i``."""
    return prod(hook_length(parts, i, j) for j in range(1, parts[i - 1] + 1))


def gap(parts: Sequence[int], i: int) -> int:
    """``lambda_i - lambda_{i+1} + 1`` (rows past the end have length 0)."""
    parts = check_partition(parts)
    if not 1 <= i <= len(parts):
        raise ValueError(f"row {i} out of range for {parts}")
    nxt = parts[i] if i < len(parts) else 0
    return parts[i - 1] - nxt + 1


def multinomial(sizes: Sequence[int]) -> int:
    return factorial(sum(sizes)) // prod(factorial(s) for s in sizes)


def dim_perm(shape) -> int:
    """Dimension of the permutation module: number of row-standard tableaux."""
    return multinomial(as_multipartition(shape).rows)


@lru_cache(maxsize=None)
def _std_one(parts: Partition) -> int:
    if not parts:
        return 1
    conj = conjugate(parts)
    hooks = prod(
        1 + (parts[i] - 1 - j) + (conj[j] - 1 - i)
        for i in range(len(parts))
        for j in range(parts[i])
    )
    return factorial(sum(parts)) // hooks


def count_std(shape) -> int:
    """Number of standard tableaux (hook length formula per component)."""
    lam = as_multipartition(shape)
    sizes = [sum(c) for c in lam.components]
    return multinomial(sizes) * prod(_std_one(c) for c in lam.components)


def _dominance_profile(lam: Multipartition, depth: Sequence[int]) -> list[int]:
    out = []
    before = 0
    for comp, d in zip(lam.components, depth):
        sums = list(accumulate(comp))
        total = sums[-1] if sums else 0
        for r in range(d):
            out.append(before + (sums[r] if r < len(sums) else total))
        before += total
    return out


def dominates(mu, nu) -> bool:
    """Weak dominance ``mu >= nu`` of multipartitions of the same size and level.

    Partial sums are compared at every (component, row) position, the earlier
    components counted in full; short components are padded with zero rows.
    """
    mu, nu = as_multipartition(mu), as_multipartition(nu)
    if mu.level != nu.level:
        raise ValueError(f"level mismatch: {mu} vs {nu}")
    if mu.size != nu.size:
        raise ValueError(f"size mismatch: {mu} vs {nu}")
    depth = [max(len(a), len(b), 1) for a, b in zip(mu.components, nu.components)]
    return all(a >= b for a, b in zip(_dominance_profile(mu, depth), _dominance_profile(nu, depth)))


def strictly_dominates(mu, nu) -> bool:
    return as_multipartition(mu) != as_multipartition(nu) and dominates(mu, nu)


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def multipartitions(n: int, level: int) -> Iterator[Multipartition]:
    def rec(remaining: int, slots: int):
        if slots == 1:
            for p in partitions(remaining):
                yield (p,)
            return
        for k in range(remaining, -1, -1):
            for p in partitions(k):
                for rest in rec(remaining - k, slots - 1):
                    yield (p,) + rest

    for comps in rec(n, level):
        yield Multipartition(comps)
