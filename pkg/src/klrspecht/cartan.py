"""Cartan data for the linear quiver A_infinity and the cyclic quiver A^(1)_{e-1}."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence


class Adjacency(enum.Enum):
    EQUAL = "equal"
    ARROW_TO = "arrow_to"  # i -> j, i.e. j = i + 1
    ARROW_FROM = "arrow_from"  # i <- j, i.e. j = i - 1
    DISTANT = "distant"


@dataclass(frozen=True)
class Quiver:
    """Either the linear quiver (``e is None``) or the cycle on ``Z/eZ``.

    Orientation is ``i -> i+1`` throughout.
    """

    e: int | None = None

    def __post_init__(self):
        if self.e is not None and self.e < 3:
            raise ValueError(
                f"affine quiver needs e >= 3, got e={self.e}; "
                "e <= 2 has Q-polynomials this package does not model"
            )

    @classmethod
    def linear(cls) -> "Quiver":
        return cls(None)

    @classmethod
    def affine(cls, e: int) -> "Quiver":
        return cls(e)

    @property
    def is_linear(self) -> bool:
        return self.e is None

    @property
    def kind(self) -> str:
        return "LinearInfinite" if self.e is None else f"AffineCycle({self.e})"

    def residue(self, value: int) -> int:
        return value if self.e is None else value % self.e

    def __str__(self) -> str:
        return "linear" if self.e is None else f"e={self.e}"


@dataclass(frozen=True)
class PositiveRoot:
    """A finite multiset of residues, i.e. a sum of simple roots."""

    multiplicities: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_residues(cls, residues: Iterable[int]) -> "PositiveRoot":
        counts = Counter(residues)
        return cls(tuple(sorted((i, m) for i, m in counts.items() if m)))

    @property
    def height(self) -> int:
        return sum(m for _, m in self.multiplicities)

    def as_dict(self) -> dict[int, int]:
        return dict(self.multiplicities)

    def __add__(self, other: "PositiveRoot") -> "PositiveRoot":
        counts = Counter(self.as_dict())
        counts.update(other.as_dict())
        return PositiveRoot(tuple(sorted(counts.items())))

    def __str__(self) -> str:
        if not self.multiplicities:
            return "0"
        return " + ".join(
            f"alpha_{i}" if m == 1 else f"{m}*alpha_{i}" for i, m in self.multiplicities
        )


@dataclass(frozen=True)
class Multicharge:
    """An ordered tuple of integer charges ``(kappa_1, ..., kappa_l)``.

    Charges that are not strictly decreasing are accepted; ``conventional``
    reports whether the usual ``kappa_1 > ... > kappa_l`` ordering holds.
    """

    entries: tuple[int, ...]
    conventional: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(k) for k in self.entries))
        object.__setattr__(
            self,
            "conventional",
            all(a > b for a, b in zip(self.entries, self.entries[1:])),
        )

    @property
    def level(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    def __str__(self) -> str:
        return ",".join(str(k) for k in self.entries)


def as_multicharge(charges: Multicharge | Sequence[int] | int) -> Multicharge:
    if isinstance(charges, Multicharge):
        return charges
    if isinstance(charges, int):
        return Multicharge((charges,))
    return Multicharge(tuple(charges))


def residue_of_node(q: Quiver, charge: int, a: int, b: int) -> int:
    """Residue ``b - a + charge`` of the node in row ``a``, column ``b``."""
    if a < 1 or b < 1:
        raise ValueError(f"node ({a},{b}) must have positive coordinates")
    return q.residue(b - a + charge)


def weight_of_sequence(q: Quiver, seq: Iterable[int]) -> PositiveRoot:
    return PositiveRoot.from_residues(q.residue(i) for i in seq)


def adjacency(q: Quiver, i: int, j: int) -> Adjacency:
    i, j = q.residue(i), q.residue(j)
    if i == j:
        return Adjacency.EQUAL
    if q.residue(i + 1) == j:
        return Adjacency.ARROW_TO
    if q.residue(i - 1) == j:
        return Adjacency.ARROW_FROM
    return Adjacency.DISTANT


def cartan_entry(q: Quiver, i: int, j: int) -> int:
    adj = adjacency(q, i, j)
    if adj is Adjacency.EQUAL:
        return 2
    if adj is Adjacency.DISTANT:
        return 0
    return -1


def weight_of_multicharge(q: Quiver, charges: Multicharge | Sequence[int]) -> dict[int, int]:
    """Multiplicities of the fundamental weights ``Lambda_i`` in the weight of ``charges``."""
    counts = Counter(q.residue(k) for k in as_multicharge(charges))
    return dict(sorted(counts.items()))


def format_weight(weight: Mapping[int, int], charges: Sequence[int] | None = None,
                  q: Quiver | None = None) -> str:
    """Render a dominant weight as ``Lambda_0 + Lambda_9``.

    With ``charges`` the summands are listed in charge order, as in the
    filtration tables.
    """
    if charges is not None and q is not None:
        return " + ".join(f"Lambda_{q.residue(k)}" for k in charges)
    parts = []
    for i, m in weight.items():
        parts.extend([f"Lambda_{i}"] * m)
    return " + ".join(parts)
