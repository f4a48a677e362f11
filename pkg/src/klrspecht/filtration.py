"""Specht filtrations of permutation modules and their dimension bookkeeping.

A filtration ``M^lambda = M_0 > M_1 > ... > 0`` is described by a list of
:class:`FiltrationLayer`; layer ``i`` records the Garnir nodes generating
``M_i`` and the predicted subquotient ``M_i / M_{i+1}``, either a single
Specht module or an alternating Specht resolution.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import factorial, prod
from typing import Sequence

from .cartan import Multicharge, Quiver, as_multicharge
from .partitions import (
    Multipartition,
    Node,
    as_multipartition,
    as_partition,
    check_partition,
    count_std,
    dim_perm,
    dominates,
    multinomial,
    residue_content,
    row_hook_product,
)


@dataclass(frozen=True)
class SpechtResolution:
    """``0 -> S^{mu_k} -> ... -> S^{mu_1} -> M_i/M_{i+1} -> 0``."""

    terms: tuple[Multipartition, ...]
    charges: Multicharge

    @property
    def length(self) -> int:
        return len(self.terms)

    @property
    def dim(self) -> int:
        return sum((-1) ** j * count_std(mu) for j, mu in enumerate(self.terms))


@dataclass(frozen=True)
class FiltrationLayer:
    """One subquotient; a plain Specht layer has a resolution of length one."""

    index: int
    generators: tuple[Node, ...]
    shape: Multipartition
    charges: Multicharge
    dim: int
    resolution: SpechtResolution | None = None

    def __post_init__(self):
        if self.resolution is None:
            object.__setattr__(self, "resolution", SpechtResolution((self.shape,), self.charges))

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "generators": [list(A) for A in self.generators],
            "shape": str(self.shape),
            "charges": list(self.charges.entries),
            "dim": str(self.dim),
            "resolution": [{"shape": str(mu), "dim": str(count_std(mu))} for mu in self.resolution.terms],
        }

    @classmethod
    def from_json(cls, data: dict) -> "FiltrationLayer":
        charges = Multicharge(tuple(data["charges"]))
        terms = tuple(Multipartition.parse(t["shape"]) for t in data["resolution"])
        return cls(
            index=int(data["index"]),
            generators=tuple(Node(*A) for A in data["generators"]),
            shape=Multipartition.parse(data["shape"]),
            charges=charges,
            dim=int(data["dim"]),
            resolution=SpechtResolution(terms, charges),
        )


def layers_to_json(layers: Sequence[FiltrationLayer]) -> list[dict]:
    return [L.to_json() for L in layers]


def layers_from_json(data: Sequence[dict]) -> list[FiltrationLayer]:
    return [FiltrationLayer.from_json(d) for d in data]


def total_dim(layers: Sequence[FiltrationLayer]) -> int:
    return sum(L.dim for L in layers)


# -- hooks ---------------------------------------------------------------

def hook_shape(k: int, r: int) -> tuple[int, ...]:
    if k < 1 or r < 0:
        raise ValueError(f"invalid hook ({k}, 1^{r})")
    return (k,) + (1,) * r


def hook_layer_shape(k: int, r: int, i: int, j: int = 0) -> tuple[Multipartition, Multicharge]:
    """Shape and multicharge of the ``i``-th subquotient of the hook filtration."""
    if not 0 <= i <= r:
        raise ValueError(f"layer {i} out of range 0..{r}")
    if i == 0:
        return Multipartition((hook_shape(k, r),)), Multicharge((j,))
    if i == 1:
        return Multipartition((hook_shape(k + 1, r - 1),)), Multicharge((j - 1,))
    comps = [(k,)] + [(1,)] * (i - 2) + [(2,) + (1,) * (r - i)]
    charges = [j - t for t in range(i - 1)] + [j - i]
    return Multipartition(tuple(comps)), Multicharge(tuple(charges))


def hook_filtration(k: int, r: int, q: Quiver | None = None, j: int = 0) -> list[FiltrationLayer]:
    """Layers of ``M^{(k,1^r)}``: ``M_i`` is generated by the Garnir nodes ``(i,1), ..., (r,1)``."""
    hook_shape(k, r)
    layers = []
    for i in range(r + 1):
        shape, charges = hook_layer_shape(k, r, i, j)
        gens = tuple(Node(1, a, 1) for a in range(i, r + 1)) if i else ()
        layers.append(FiltrationLayer(i, gens, shape, charges, count_std(shape)))
    return layers


def hook_dim_identity(k: int, r: int) -> bool:
    """``dim M^{(k,1^r)}`` equals the sum of the hook layer dimensions."""
    return dim_perm(hook_shape(k, r)) == total_dim(hook_filtration(k, r))


# -- two rows -------------------------------------------------------------

def two_row_filtration(k: int, r: int, x: int = 0) -> list[FiltrationLayer]:
    """``M^{(k,r)} > M_1 > 0`` with ``M_1`` generated by the Garnir node ``(1,1)``.

    The second layer is ``(k+1 | r-1)`` with charges ``(x-1, x)``, the pair
    whose leading residues match; it is not strictly decreasing.
    """
    if r < 1 or k < r:
        raise ValueError(f"two-row shape needs k >= r >= 1, got ({k},{r})")
    lam = Multipartition(((k, r),))
    top = FiltrationLayer(0, (), lam, Multicharge((x,)), count_std(lam))
    shape = Multipartition(((k + 1,), (r - 1,) if r > 1 else ()))
    second = FiltrationLayer(1, (Node(1, 1, 1),), shape, Multicharge((x - 1, x)), count_std(shape))
    return [top, second]


# -- general partitions -------------------------------------------------

def mu_shape(lam: Sequence[int], i: int, j: int) -> Multipartition:
    """``(lam_1 | ... | lam_{i-1} | lam_{i+j} - j | lam_i + 1, ..., lam_{i+j-1} + 1, lam_{i+j+1}, ...)``."""
    lam = check_partition(lam)
    r = len(lam)
    if not (1 <= i <= r - 1 and 1 <= j <= r - i):
        raise ValueError(f"(i, j) = ({i}, {j}) out of range for {lam}")
    first = lam[i + j - 1] - j
    if first < 0:
        raise ValueError(f"mu_({i},{j}) is not defined for {lam}")
    comps = [(lam[s],) for s in range(i - 1)]
    comps.append((first,) if first else ())
    tail = tuple(p + 1 for p in lam[i - 1:i + j - 1]) + lam[i + j:]
    comps.append(tail)
    return Multipartition(tuple(comps))


def mu_charges(i: int, x: int = 0) -> Multicharge:
    """``(x, x-1, ..., x-i+1, x-i)``: one entry per component of ``mu_(i, j)``."""
    return Multicharge(tuple(x - t for t in range(i + 1)))


def k_index(lam: Sequence[int], i: int) -> int:
    """Largest ``j <= r - i`` with ``lam_{i+j} >= j``."""
    lam = check_partition(lam)
    r = len(lam)
    best = 0
    for j in range(1, r - i + 1):
        if lam[i + j - 1] - j >= 0:
            best = j
        else:
            break
    return best


def general_layers(lam, x: int = 0, q: Quiver | None = None) -> list[FiltrationLayer]:
    """Layers for an arbitrary partition over the linear quiver.

    ``M_i`` is generated by the Garnir nodes ``(s, lam_{s+1})`` for
    ``i <= s <= r-1``; layer ``i >= 1`` carries the resolution by
    ``mu_(i,1), ..., mu_(i,k_i)``.
    """
    if q is not None and not q.is_linear:
        raise ValueError("general layers are constructed for the linear quiver only")
    lam = as_partition(lam)
    r = len(lam)
    base = Multipartition((lam,))
    alpha = residue_content(base, Quiver.linear(), x)
    layers = [FiltrationLayer(0, (), base, Multicharge((x,)), count_std(base))]
    for i in range(1, r):
        k = k_index(lam, i)
        charges = mu_charges(i, x)
        terms = tuple(mu_shape(lam, i, j) for j in range(1, k + 1))
        for j, mu in enumerate(terms, start=1):
            if residue_content(mu, Quiver.linear(), charges) != alpha:
                raise AssertionError(f"mu_({i},{j}) = {mu} leaves the block of {lam}")
        for a, b in zip(terms, terms[1:]):
            if not (dominates(a, b) and a != b):
                raise AssertionError(f"resolution of layer {i} is not a strict dominance chain: {a}, {b}")
        gens = tuple(Node(1, s, lam[s]) for s in range(i, r))
        res = SpechtResolution(terms, charges)
        layers.append(FiltrationLayer(i, gens, terms[0], charges, res.dim, res))
    return layers


def nu_layer(lam, i: int) -> Multipartition:
    """``(lam_{i+1} - 1 | lam_i + 1, lam_{i+2}, ..., lam_r)``."""
    lam = as_partition(lam)
    r = len(lam)
    if not 1 <= i <= r - 1:
        raise ValueError(f"i = {i} out of range 1..{r - 1}")
    first = lam[i] - 1
    return Multipartition(((first,) if first else (), (lam[i - 1] + 1,) + lam[i + 1:]))


def simple_dim(lam, j: int = 1, i: int = 1) -> int:
    """Alternating sum ``sum_{s >= j} (-1)^(s-j) count_std(mu_(i,s))``."""
    lam = as_partition(lam)
    k = k_index(lam, i)
    if not 1 <= j <= k:
        raise ValueError(f"j = {j} out of range 1..{k}")
    return sum((-1) ** (s - j) * count_std(mu_shape(lam, i, s)) for s in range(j, k + 1))


def nu_layer_dim(lam, i: int) -> int:
    """Dimension of ``S^{lam_1} o ... o S^{lam_{i-1}} o D^{nu_i}``."""
    lam = as_partition(lam)
    rest = lam[i - 1:]
    return multinomial(list(lam[:i - 1]) + [sum(rest)]) * simple_dim(rest, 1, 1)


@dataclass(frozen=True)
class HookInequality:
    lhs: int
    rhs: int
    k1: int

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs

    @property
    def equality(self) -> bool:
        return self.lhs == self.rhs


def hook_inequality(lam) -> HookInequality:
    """``h_1 d_1 <= d_1 lam_1! + h_2 lam_1! / (lam_2 - 1)!`` with exact integers."""
    lam = as_partition(lam)
    if len(lam) < 2:
        raise ValueError(f"{lam} needs at least two rows")
    h1, h2 = row_hook_product(lam, 1), row_hook_product(lam, 2)
    d1 = lam[0] - lam[1] + 1
    lhs = h1 * d1
    rhs = d1 * factorial(lam[0]) + h2 * factorial(lam[0]) // factorial(lam[1] - 1)
    return HookInequality(lhs, rhs, k_index(lam, 1))


# -- splitting and higher levels ------------------------------------------

def split_partition(lam, k: int, x: int = 0) -> tuple[Multipartition, Multicharge]:
    """``((lam_1..lam_k | lam_{k+1}..lam_r), (x, x-k))``."""
    lam = as_partition(lam)
    if not 1 <= k < len(lam):
        raise ValueError(f"split point {k} out of range for {lam}")
    return Multipartition((lam[:k], lam[k:])), Multicharge((x, x - k))


@dataclass(frozen=True)
class CombinedLayer:
    """Layer ``i`` of a product filtration.

    ``pieces`` lists the tuples of component layer indices whose product
    sits in this subquotient (those whose largest index equals ``i``).
    """

    index: int
    generators: tuple[Node, ...]
    pieces: tuple[tuple[int, ...], ...]
    dim: int


def level_ell_combine(components: Sequence[Sequence[FiltrationLayer]], sizes: Sequence[int] | None = None
                      ) -> list[CombinedLayer] | list[FiltrationLayer]:
    """Combine filtrations of ``M^{lam^(1)}, ..., M^{lam^(l)}`` into one of ``M^lam``.

    ``M_i`` is the sum over components ``s`` of the induced products with
    ``M_i^s`` in slot ``s`` and the whole module elsewhere, so
    ``M_i / M_{i+1}`` collects the product layers whose largest index is
    ``i``.  Generators are the component generators tagged with their
    component.  A single component is returned unchanged.
    """
    components = [list(c) for c in components]
    if len(components) == 1:
        return components[0]
    if sizes is None:
        sizes = [L[0].shape.size for L in components]
    factor = multinomial(list(sizes))
    depth = max(len(c) for c in components)
    out = []
    for i in range(depth):
        pieces = tuple(
            t for t in product(*[range(len(c)) for c in components]) if max(t) == i
        )
        dim = factor * sum(prod(components[s][t[s]].dim for s in range(len(t))) for t in pieces)
        gens = tuple(
            Node(s + 1, A.row, A.col)
            for s, c in enumerate(components)
            if i and i < len(c)
            for A in c[i].generators
        )
        out.append(CombinedLayer(i, gens, pieces, dim))
    return out


def skew_chain(lam) -> list[tuple[Node, ...] | None]:
    """Generator sets of the reversed first-column chain.

    Entry 0 is ``None`` (the whole module); entry ``i`` lists the nodes
    ``(1,1), ..., (g-i+1, 1)`` where ``g`` is the number of first-column
    Garnir nodes; the last entry ``()`` is the zero module.
    """
    lam = as_partition(lam)
    g = len(lam) - 1
    chain: list[tuple[Node, ...] | None] = [None]
    for i in range(1, g + 1):
        chain.append(tuple(Node(1, a, 1) for a in range(1, g - i + 2)))
    chain.append(())
    return chain


# -- engine verification --------------------------------------------------

@dataclass
class FiltrationReport:
    shape: Multipartition
    span_dims: list[int] = field(default_factory=list)
    predicted: list[int] = field(default_factory=list)
    specht_dim: int | None = None
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_filtration(layers: Sequence[FiltrationLayer], shape, quiver: Quiver, charges=0,
                      cap: int | None = None, field=None) -> FiltrationReport:
    """Compute ``dim M_i`` by spanning the generators and compare with the layers."""
    from .garnir import garnir_nodes
    from .modules import DEFAULT_CAP, ModuleContext, garnir_element, span

    ctx = ModuleContext(shape, quiver, charges, field=field, cap=DEFAULT_CAP if cap is None else cap)
    report = FiltrationReport(ctx.shape)
    dims = []
    for L in layers:
        if L.index == 0:
            dims.append(ctx.dim)
        else:
            gens = [garnir_element(A, ctx) for A in L.generators]
            dims.append(span(gens, ctx).dimension)
    dims.append(0)
    report.span_dims = dims[:-1]
    report.predicted = [L.dim for L in layers]
    for idx, L in enumerate(layers):
        got = dims[idx] - dims[idx + 1]
        if got != L.dim:
            report.failures.append(f"layer {L.index}: dim M_i/M_i+1 = {got}, predicted {L.dim}")
    all_garnir = span([garnir_element(A, ctx) for A in garnir_nodes(ctx.shape)], ctx).dimension
    report.specht_dim = ctx.dim - all_garnir
    if report.specht_dim != count_std(ctx.shape):
        report.failures.append(f"M/Garnir has dim {report.specht_dim}, expected {count_std(ctx.shape)}")
    if len(layers) > 1 and dims[1] != all_garnir:
        report.failures.append(f"M_1 has dim {dims[1]} but the Garnir span has dim {all_garnir}")
    return report


def filtration_for(shape, quiver: Quiver, charge: int = 0, kind: str = "auto") -> list[FiltrationLayer]:
    """Pick the hook, two-row or general constructor for a partition."""
    lam = as_partition(shape)
    is_hook = len(lam) == 1 or all(p == 1 for p in lam[1:])
    if kind == "auto":
        kind = "hook" if is_hook else ("two-row" if len(lam) == 2 else "general")
    if kind == "hook":
        if not is_hook:
            raise ValueError(f"{lam} is not a hook")
        return hook_filtration(lam[0], len(lam) - 1, quiver, charge)
    if kind == "two-row":
        if len(lam) != 2:
            raise ValueError(f"{lam} does not have two rows")
        if not quiver.is_linear:
            raise ValueError("the two-row filtration is constructed for the linear quiver")
        return two_row_filtration(lam[0], lam[1], charge)
    if kind == "general":
        return general_layers(lam, charge, quiver)
    raise ValueError(f"unknown filtration kind {kind!r}")
