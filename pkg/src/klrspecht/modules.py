"""The permutation module M^lambda on its row-standard tableau basis.

Basis vector ``T`` stands for ``psi^T z`` where ``psi^T`` is read off the
fixed reduced word of ``w^T``.  Generators act through the normal-form
engine: ``a * psi^T z`` is reduced to ``sum c psi_w y^b e(i^lambda) z`` and
each monomial is evaluated on ``z``.  Terms with ``b != 0`` vanish since
``y_r z = 0``; ``psi_w z`` is a basis vector when ``w`` keeps every row
increasing, and otherwise is rewritten through a shorter word using
``psi_q z = 0`` for ``q, q+1`` in one row of ``T^lambda``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import words
from .cartan import Multicharge, Quiver, as_multicharge
from .garnir import garnir_nodes, garnir_word
from .klr import E, KLRAlgebra, Psi, Y, braid_correction, q_poly
from .linalg import QQ, Echelon, Field, as_field
from .partitions import Multipartition, as_multipartition, dim_perm, residue_content
from .tableaux import Tableau, enumerate_row_standard, initial

DEFAULT_CAP = 5000


class CapExceeded(ValueError):
    """Raised when a module is larger than the configured dimension cap."""

    def __init__(self, shape, dim: int, cap: int):
        super().__init__(f"dim M^{shape} = {dim} exceeds the cap {cap}")
        self.shape = shape
        self.dim = dim
        self.cap = cap


class ModuleContext:
    """``M^lambda`` for a fixed shape, quiver and multicharge."""

    def __init__(self, shape, quiver: Quiver, charges: Multicharge | Sequence[int] | int = 0,
                 field: Field | int | None = None, cap: int | None = DEFAULT_CAP):
        self.shape: Multipartition = as_multipartition(shape)
        self.quiver = quiver
        self.charges = as_multicharge(charges)
        if self.charges.level != self.shape.level:
            raise ValueError(f"multicharge {self.charges} does not match the level of {self.shape}")
        self.field = as_field(field)
        self.dim = dim_perm(self.shape)
        if cap is not None and self.dim > cap:
            raise CapExceeded(self.shape, self.dim, cap)
        self.n = self.shape.size
        self.alpha = residue_content(self.shape, quiver, self.charges)
        self.i_lambda = initial(self.shape).residue_sequence(quiver, self.charges)
        self.basis: list[Tableau] = list(enumerate_row_standard(self.shape))
        self.index = {T.entries: k for k, T in enumerate(self.basis)}
        self.residues = [words.act_on_sequence(T.entries, self.i_lambda) for T in self.basis]
        self.algebra = KLRAlgebra(quiver, self.n, self.alpha)
        # positions q (1-based) with q, q+1 in the same row of T^lambda
        self._row_pairs = []
        pos = 1
        for length in self.shape.rows:
            self._row_pairs.extend(range(pos, pos + length - 1))
            pos += length
        self._zero_a = (0,) * self.n
        self._eval_cache: dict[words.Perm, dict] = {}
        self._psi_table: dict[tuple[int, int], dict] = {}
        self._y_table: dict[tuple[int, int], dict] = {}

    def __repr__(self) -> str:
        return f"ModuleContext({self.shape}, {self.quiver}, charges={self.charges})"

    # -- evaluation on z -----------------------------------------------
    def _row_descent(self, w: words.Perm) -> int | None:
        for q in self._row_pairs:
            if w[q - 1] > w[q]:
                return q
        return None

    def eval_perm(self, w: words.Perm) -> dict:
        """``psi_w z`` (fixed reduced word of ``w``) in the basis, integer coefficients."""
        hit = self._eval_cache.get(w)
        if hit is not None:
            return hit
        q = self._row_descent(w)
        if q is None:
            out = {self.index[w]: 1}
        else:
            # psi_{word(w s_q)} psi_q z = 0 and equals psi_w z plus shorter terms
            u = words.right_mul(w, q)
            expansion = self.algebra.reduce_word(words.canonical_word(u) + (q,), self._zero_a, self.i_lambda, True)
            lead = expansion.get((w, self._zero_a, self.i_lambda))
            if lead != 1:
                raise AssertionError(f"unexpected leading coefficient {lead} for {w}")
            out = {}
            for (v, _, _), c in expansion.items():
                if v != w:
                    for k, d in self.eval_perm(v).items():
                        x = out.get(k, 0) - c * d
                        if x:
                            out[k] = x
                        else:
                            out.pop(k, None)
        self._eval_cache[w] = out
        return out

    def _eval_terms(self, terms: dict) -> dict:
        out: dict = {}
        for (w, a, i), c in terms.items():
            if any(a) or i != self.i_lambda:
                continue
            for k, d in self.eval_perm(w).items():
                x = out.get(k, 0) + c * d
                if x:
                    out[k] = x
                else:
                    out.pop(k, None)
        return out

    def psi_on_basis(self, r: int, k: int) -> dict:
        key = (r, k)
        hit = self._psi_table.get(key)
        if hit is None:
            mono = (self.basis[k].entries, self._zero_a, self.i_lambda)
            hit = self._eval_terms(self.algebra.left_psi(r, mono, drop_y=True))
            self._psi_table[key] = hit
        return hit

    def y_on_basis(self, r: int, k: int) -> dict:
        key = (r, k)
        hit = self._y_table.get(key)
        if hit is None:
            mono = (self.basis[k].entries, self._zero_a, self.i_lambda)
            hit = self._eval_terms(self.algebra.left_y(r, mono, drop_y=True))
            self._y_table[key] = hit
        return hit

    # -- element level --------------------------------------------------
    def element(self, coeffs: dict | None = None) -> "ModuleElement":
        return ModuleElement(self, _clean(coeffs or {}, self.field))

    def z(self) -> "ModuleElement":
        return self.element({0: 1})

    def basis_vector(self, T: Tableau) -> "ModuleElement":
        if T.entries not in self.index or T.shape != self.shape:
            raise ValueError(f"{T} is not a row-standard tableau of shape {self.shape}")
        return self.element({self.index[T.entries]: 1})

    def act_vec(self, atom, vec: dict) -> dict:
        field = self.field
        if isinstance(atom, E):
            j = tuple(self.quiver.residue(x) for x in atom.i)
            if len(j) != self.n:
                raise ValueError(f"idempotent {atom.i} does not have length {self.n}")
            return {k: c for k, c in vec.items() if self.residues[k] == j}
        if isinstance(atom, Psi):
            if not 1 <= atom.r < self.n:
                raise ValueError(f"psi_{atom.r} out of range for n={self.n}")
            table = self.psi_on_basis
        elif isinstance(atom, Y):
            if not 1 <= atom.r <= self.n:
                raise ValueError(f"y_{atom.r} out of range for n={self.n}")
            table = self.y_on_basis
        else:
            raise TypeError(f"not a KLR atom: {atom!r}")
        out: dict = {}
        p = getattr(field, "p", None)
        for k, c in vec.items():
            for kk, d in table(atom.r, k).items():
                x = out.get(kk, 0) + c * d
                if p is not None:
                    x %= p
                if x:
                    out[kk] = x
                else:
                    out.pop(kk, None)
        return out


def _clean(coeffs: dict, field: Field) -> dict:
    out = {}
    for k, c in coeffs.items():
        c = field(c)
        if not field.is_zero(c):
            out[k] = c
    return out


@dataclass(frozen=True, eq=False)
class ModuleElement:
    ctx: ModuleContext
    coeffs: dict = field(default_factory=dict)

    @property
    def coefficients(self) -> dict[Tableau, object]:
        return {self.ctx.basis[k]: c for k, c in sorted(self.coeffs.items())}

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return self.ctx.element(out)

    def __neg__(self) -> "ModuleElement":
        return self.ctx.element({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "ModuleElement") -> "ModuleElement":
        return self + (-other)

    def __rmul__(self, scalar) -> "ModuleElement":
        return self.ctx.element({k: scalar * c for k, c in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.coeffs
        return isinstance(other, ModuleElement) and self.ctx is other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in sorted(self.coeffs.items()):
            T = self.ctx.basis[k]
            parts.append(f"{c}·[{T}]" if c != 1 else f"[{T}]")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"ModuleElement({self})"


def act(atom, v: ModuleElement) -> ModuleElement:
    return v.ctx.element(v.ctx.act_vec(atom, v.coeffs))


def eval_word(atoms: Sequence, ctx: ModuleContext, start: ModuleElement | None = None) -> ModuleElement:
    """Apply ``atoms`` (leftmost last) to ``start`` (default ``z``)."""
    vec = dict((start or ctx.z()).coeffs)
    for atom in reversed(list(atoms)):
        vec = ctx.act_vec(atom, vec)
    return ctx.element(vec)


def psi_word(word: Iterable[int]) -> list:
    return [Psi(r) for r in word]


def garnir_element(A, ctx: ModuleContext) -> ModuleElement:
    """``psi^{G^A} e(i^lambda) z``."""
    return eval_word(psi_word(garnir_word(A, ctx.shape)) + [E(ctx.i_lambda)], ctx)


# -- spans --------------------------------------------------------------

class SpanBasis:
    """Echelon basis of a submodule, one echelon per residue-sequence block."""

    def __init__(self, ctx: ModuleContext, blocks: dict[tuple, Echelon]):
        self.ctx = ctx
        self.blocks = blocks

    @property
    def dimension(self) -> int:
        return sum(len(b) for b in self.blocks.values())

    def __len__(self) -> int:
        return self.dimension

    def contains(self, v: ModuleElement) -> bool:
        for j, part in _split(v.ctx, v.coeffs).items():
            block = self.blocks.get(j)
            if block is None or not block.contains(part):
                return False
        return True

    def contains_span(self, other: "SpanBasis") -> bool:
        return all(self.contains(self.ctx.element(row)) for e in other.blocks.values() for row in e.rows.values())

    def rows(self) -> list[ModuleElement]:
        """Fully reduced basis, pivots increasing in basis order."""
        out = []
        for ech in self.blocks.values():
            out.extend(ech.reduced_rows())
        out.sort(key=lambda pr: pr[0])
        return [self.ctx.element(row) for _, row in out]

    def pivots(self) -> list[Tableau]:
        return [self.ctx.basis[p] for p in sorted(p for e in self.blocks.values() for p in e.rows)]


def _split(ctx: ModuleContext, vec: dict) -> dict[tuple, dict]:
    parts: dict[tuple, dict] = {}
    for k, c in vec.items():
        parts.setdefault(ctx.residues[k], {})[k] = c
    return parts


def span(gens: Iterable[ModuleElement], ctx: ModuleContext) -> SpanBasis:
    """Submodule generated by ``gens``: closure under all ``e(j)``, ``y_r``, ``psi_r``."""
    blocks: dict[tuple, Echelon] = {}
    queue: list[dict] = []

    def push(vec: dict) -> None:
        for j, part in _split(ctx, vec).items():
            ech = blocks.get(j)
            if ech is None:
                ech = blocks[j] = Echelon(ctx.field)
            row = ech.insert(part)
            if row is not None:
                queue.append(row)

    for g in gens:
        push(g.coeffs)
    n = ctx.n
    while queue:
        vec = queue.pop()
        for r in range(1, n):
            push(ctx.act_vec(Psi(r), vec))
        for r in range(1, n + 1):
            push(ctx.act_vec(Y(r), vec))
    return SpanBasis(ctx, {j: e for j, e in blocks.items() if len(e)})


def specht_quotient_dim(ctx: ModuleContext) -> int:
    """``dim M^lambda - dim`` (span of all Garnir elements)."""
    gens = [garnir_element(A, ctx) for A in garnir_nodes(ctx.shape)]
    return ctx.dim - span(gens, ctx).dimension


# -- relation check -----------------------------------------------------

@dataclass
class RelationReport:
    shape: Multipartition
    quiver: Quiver
    checked: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_defining_relations(ctx: ModuleContext, max_violations: int = 20) -> RelationReport:
    """Check every KLR relation on every basis vector of ``M^lambda``."""
    report = RelationReport(ctx.shape, ctx.quiver)
    n = ctx.n
    q = ctx.quiver
    fld = ctx.field

    def ap(atoms, vec):
        for atom in reversed(atoms):
            vec = ctx.act_vec(atom, vec)
        return vec

    def lin(terms, vec):
        out: dict = {}
        for c, atoms in terms:
            for k, x in ap(atoms, vec).items():
                out[k] = out.get(k, 0) + c * x
        return _clean(out, fld)

    def check(name, lhs, rhs, k, vec):
        report.checked += 1
        a, b = lin(lhs, vec), lin(rhs, vec)
        if a != b and len(report.violations) < max_violations:
            report.violations.append(f"{name} on [{ctx.basis[k]}]: {a} != {b}")

    distinct = sorted(set(ctx.residues))
    for k in range(ctx.dim):
        vec = {k: 1}
        i = ctx.residues[k]
        check("e(i)e(i)=e(i)", [(1, [E(i), E(i)])], [(1, [E(i)])], k, vec)
        other = next((j for j in distinct if j != i), None)
        if other is not None:
            check("e(j)e(i)=0", [(1, [E(other), E(i)])], [], k, vec)
        for r in range(1, n + 1):
            check(f"e(i)y_{r}=y_{r}e(i)", [(1, [E(i), Y(r)])], [(1, [Y(r), E(i)])], k, vec)
            for s in range(r + 1, n + 1):
                check(f"y_{r}y_{s}=y_{s}y_{r}", [(1, [Y(r), Y(s)])], [(1, [Y(s), Y(r)])], k, vec)
        for r in range(1, n):
            si = list(i)
            si[r - 1], si[r] = si[r], si[r - 1]
            si = tuple(si)
            eq = int(i[r - 1] == i[r])
            check(f"psi_{r}e(i)=e(s i)psi_{r}", [(1, [Psi(r), E(i)])], [(1, [E(si), Psi(r)])], k, vec)
            for s in range(1, n + 1):
                if s not in (r, r + 1):
                    check(f"psi_{r}y_{s}=y_{s}psi_{r}", [(1, [Psi(r), Y(s)])], [(1, [Y(s), Psi(r)])], k, vec)
            for s in range(r + 2, n):
                check(f"psi_{r}psi_{s}=psi_{s}psi_{r}", [(1, [Psi(r), Psi(s)])], [(1, [Psi(s), Psi(r)])], k, vec)
            check(f"psi_{r}y_{r + 1}", [(1, [Psi(r), Y(r + 1)])], [(1, [Y(r), Psi(r)]), (eq, [])], k, vec)
            check(f"y_{r + 1}psi_{r}", [(1, [Y(r + 1), Psi(r)])], [(1, [Psi(r), Y(r)]), (eq, [])], k, vec)
            quad = [(c, [Y(r)] * a + [Y(r + 1)] * b) for (a, b), c in q_poly(q, i[r - 1], i[r]).items()]
            check(f"psi_{r}^2", [(1, [Psi(r), Psi(r)])], quad, k, vec)
            if r < n - 1:
                c3 = braid_correction(q, i[r - 1], i[r], i[r + 1])
                check(
                    f"braid at {r}",
                    [(1, [Psi(r), Psi(r + 1), Psi(r)])],
                    [(1, [Psi(r + 1), Psi(r), Psi(r + 1)]), (c3, [])],
                    k,
                    vec,
                )
    return report
