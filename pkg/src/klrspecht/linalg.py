"""Exact sparse linear algebra over Q or a prime field.

Vectors are dicts ``index -> scalar`` with zero entries removed.  Rows of
an :class:`Echelon` are normalised so that the pivot (the smallest index
in the row) has coefficient one.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable


class Field:
    """Scalar arithmetic; subclasses fix the representation."""

    name = "field"

    def __call__(self, x):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def is_zero(self, x) -> bool:
        return x == 0


class RationalField(Field):
    name = "QQ"

    def __call__(self, x):
        return x if isinstance(x, (int, Fraction)) else Fraction(x)

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1) / x

    def __repr__(self) -> str:
        return "QQ"

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


@dataclass(frozen=True)
class PrimeField(Field):
    p: int

    def __post_init__(self):
        if self.p < 2 or any(self.p % d == 0 for d in range(2, int(self.p ** 0.5) + 1)):
            raise ValueError(f"{self.p} is not prime")

    @property
    def name(self) -> str:
        return f"GF({self.p})"

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def inv(self, x):
        x %= self.p
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def is_zero(self, x) -> bool:
        return x % self.p == 0


QQ = RationalField()


def as_field(spec) -> Field:
    """``None``/``"QQ"``/``0`` give Q; a prime ``p`` gives GF(p)."""
    if spec is None or spec == 0 or spec == "QQ":
        return QQ
    if isinstance(spec, Field):
        return spec
    return PrimeField(int(spec))


def axpy(target: dict, source: dict, scale, field: Field) -> None:
    """``target += scale * source`` in place."""
    p = getattr(field, "p", None)
    for k, x in source.items():
        v = target.get(k, 0) + scale * x
        if p is not None:
            v %= p
        if v:
            target[k] = v
        else:
            target.pop(k, None)


class Echelon:
    """Row-echelon basis of a subspace, built incrementally."""

    def __init__(self, field: Field = QQ):
        self.field = field
        self.rows: dict[int, dict] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        """Remainder of ``vec`` after elimination against the stored rows."""
        field = self.field
        v = {k: field(c) for k, c in vec.items() if not field.is_zero(field(c))}
        heap = list(v)
        heapq.heapify(heap)
        seen = set()
        while heap:
            k = heapq.heappop(heap)
            if k in seen:
                continue
            seen.add(k)
            c = v.get(k)
            if c is None:
                continue
            row = self.rows.get(k)
            if row is None:
                continue
            for kk in row:
                if kk not in v and kk not in seen:
                    heapq.heappush(heap, kk)
            axpy(v, row, -c, field)
        return v

    def insert(self, vec: dict) -> dict | None:
        """Add ``vec``; return the new normalised row, or ``None`` if dependent."""
        v = self.reduce(vec)
        if not v:
            return None
        pivot = min(v)
        inv = self.field.inv(v[pivot])
        p = getattr(self.field, "p", None)
        row = {k: (c * inv % p if p is not None else c * inv) for k, c in v.items()}
        self.rows[pivot] = row
        return row

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def reduced_rows(self) -> list[tuple[int, dict]]:
        """Fully reduced rows sorted by pivot."""
        pivots = sorted(self.rows)
        done: dict[int, dict] = {}
        for pv in reversed(pivots):
            row = dict(self.rows[pv])
            for k in sorted(k for k in row if k != pv and k in done):
                c = row.get(k)
                if c:
                    axpy(row, done[k], -c, self.field)
            done[pv] = row
        return [(pv, done[pv]) for pv in pivots]


def rank(vectors: Iterable[dict], field: Field = QQ) -> int:
    ech = Echelon(field)
    for v in vectors:
        ech.insert(v)
    return len(ech)
