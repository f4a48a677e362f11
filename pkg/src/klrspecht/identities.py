"""Registry of operator identities checked exactly inside M^lambda.

Each entry evaluates both sides of an identity (or a span containment) in
the permutation module and reports every instance it checked.  Keys have a
descriptive name plus a short alias used on the command line.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import words
from .cartan import Quiver
from .decomp import DecompQuery, unique_tableau
from .filtration import general_layers, k_index
from .garnir import garnir_nodes
from .klr import E, Psi, Y
from .modules import (
    DEFAULT_CAP,
    ModuleContext,
    ModuleElement,
    check_defining_relations,
    eval_word,
    garnir_element,
    psi_word,
    span,
)
from .partitions import Node, as_multipartition


class UsageError(ValueError):
    """Parameters that do not fit the identity (wrong shape, index out of range)."""


@dataclass
class IdentityCheck:
    label: str
    lhs: str
    rhs: str
    ok: bool


@dataclass
class IdentityResult:
    key: str
    shape: str
    checks: list[IdentityCheck] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[IdentityCheck]:
        return [c for c in self.checks if not c.ok]


@dataclass
class IdentityParams:
    shape: object
    quiver: Quiver = field(default_factory=Quiver.linear)
    charges: object = 0
    s: int | None = None
    i: int | None = None
    j: int | None = None
    cap: int | None = DEFAULT_CAP
    field: object = None


@dataclass(frozen=True)
class IdentitySpec:
    key: str
    alias: str
    summary: str
    run: Callable[[IdentityParams, IdentityResult], None]


def _ctx(p: IdentityParams) -> ModuleContext:
    lam = as_multipartition(p.shape)
    if lam.level != 1:
        raise UsageError("identities are stated for a single partition")
    return ModuleContext(lam, p.quiver, p.charges, field=p.field, cap=p.cap)


def _compare(res: IdentityResult, label: str, lhs: ModuleElement, rhs: ModuleElement) -> None:
    res.checks.append(IdentityCheck(label, str(lhs), str(rhs), lhs == rhs))


def _pick(value: int | None, lo: int, hi: int, name: str) -> list[int]:
    if value is None:
        return list(range(lo, hi + 1))
    if not lo <= value <= hi:
        raise UsageError(f"{name} = {value} outside the admissible range {lo}..{hi}")
    return [value]


def _hook(p: IdentityParams, min_r: int) -> tuple[ModuleContext, int, int]:
    ctx = _ctx(p)
    lam = ctx.shape.components[0]
    if len(lam) < 2 or any(x != 1 for x in lam[1:]):
        raise UsageError(f"{ctx.shape} is not a hook with a first-column Garnir node")
    k, r = lam[0], len(lam) - 1
    if r < min_r:
        raise UsageError(f"{ctx.shape} needs at least {min_r + 1} rows")
    return ctx, k, r


def _rows12(p: IdentityParams) -> tuple[ModuleContext, int, int]:
    ctx = _ctx(p)
    lam = ctx.shape.components[0]
    if len(lam) < 2:
        raise UsageError(f"{ctx.shape} has one row; the identity relates rows 1 and 2")
    return ctx, lam[0], lam[1]


def _zero(ctx: ModuleContext) -> ModuleElement:
    return ctx.element({})


def _on(ctx: ModuleContext, word, start: ModuleElement) -> ModuleElement:
    return eval_word(psi_word(word), ctx, start)


def _e_v(ctx: ModuleContext, word) -> ModuleElement:
    return eval_word(psi_word(word) + [E(ctx.i_lambda)], ctx)


# -- hook identities ----------------------------------------------------

def _hook_y(p, res):
    ctx, k, r = _hook(p, 1)
    base = _e_v(ctx, range(1, k + 1))
    for j in _pick(p.j, 1, k + r, "j"):
        _compare(res, f"y_{j} psi_1..psi_{k} e(i) v", eval_word([Y(j)], ctx, base), _zero(ctx))


def _hook_y_column(p, res):
    ctx, k, r = _hook(p, 2)
    for i in _pick(p.i, 2, r, "i"):
        base = _e_v(ctx, [k + i - 1])
        for j in _pick(p.j, 1, k + r, "j"):
            _compare(res, f"y_{j} psi_{k + i - 1} e(i) v", eval_word([Y(j)], ctx, base), _zero(ctx))


def _hook_psi(p, res):
    ctx, k, r = _hook(p, 1)
    base = _e_v(ctx, range(1, k + 1))
    for j in _pick(p.j, 1, k, "j"):
        _compare(res, f"psi_{j} psi_1..psi_{k} e(i) v", _on(ctx, [j], base), _zero(ctx))


def _hook_psi_column(p, res):
    ctx, k, r = _hook(p, 2)
    for i in _pick(p.i, 2, r, "i"):
        base = _e_v(ctx, [k + i - 1])
        for j in _pick(p.j, 1, k - 1, "j"):
            _compare(res, f"psi_{j} psi_{k + i - 1} e(i) v", _on(ctx, [j], base), _zero(ctx))


# -- two-row identities -------------------------------------------------

def _B(ctx: ModuleContext, s: int) -> ModuleElement:
    return garnir_element(Node(1, 1, s), ctx)


def _two_row_vanish(p, res):
    ctx, k, r = _rows12(p)
    for s in _pick(p.s, 1, r - 1, "s"):
        _compare(res, f"psi_{2 * s} psi^B{s + 1} v", _on(ctx, [2 * s], _B(ctx, s + 1)), _zero(ctx))


def _two_row_step(p, res):
    ctx, k, r = _rows12(p)
    for s in _pick(p.s, 1, r - 1, "s"):
        lhs = _on(ctx, range(s, k + s + 1), _B(ctx, s))
        _compare(res, f"(psi_{s}..psi_{k + s}) psi^B{s} v = -psi^B{s + 1} v", lhs, -_B(ctx, s + 1))


def _two_row_step_back(p, res):
    ctx, k, r = _rows12(p)
    for s in _pick(p.s, 2, r, "s"):
        lhs = _on(ctx, range(k + s - 1, s - 2, -1), _B(ctx, s))
        _compare(res, f"(psi_{k + s - 1}..psi_{s - 1}) psi^B{s} v = -psi^B{s - 1} v", lhs, -_B(ctx, s - 1))


def _two_row_cyclic(p, res):
    ctx, k, r = _rows12(p)
    sub = span([_B(ctx, 1)], ctx)
    for s in range(1, r + 1):
        g = _B(ctx, s)
        res.checks.append(IdentityCheck(f"psi^B{s} v in R psi^B1 v", str(g), f"span of dim {sub.dimension}", sub.contains(g)))


def _first_column(p, res):
    ctx = _ctx(p)
    lam = ctx.shape.components[0]
    if len(lam) < 2:
        raise UsageError(f"{ctx.shape} has one row and no Garnir nodes")
    every = span([garnir_element(A, ctx) for A in garnir_nodes(ctx.shape)], ctx)
    column = span([garnir_element(Node(1, a, 1), ctx) for a in range(1, len(lam))], ctx)
    ok = every.dimension == column.dimension and column.contains_span(every)
    res.checks.append(IdentityCheck("Garnir span = first-column span", str(every.dimension), str(column.dimension), ok))


# -- resolution kernel ----------------------------------------------------

def _resolution_kernel(p, res):
    ctx = _ctx(p)
    if not ctx.quiver.is_linear:
        raise UsageError("this identity is stated for the linear quiver")
    lam = ctx.shape.components[0]
    if len(lam) < 3 or k_index(lam, 1) < 2:
        raise UsageError(f"{ctx.shape} needs a third row of length at least 2")
    x = ctx.charges[0]
    layer = general_layers(lam, x)[1]
    mu1, mu2 = layer.resolution.terms[:2]
    t = unique_tableau(DecompQuery(mu1, mu2, layer.charges))
    if t is None:
        res.checks.append(IdentityCheck("Std^mu2(mu1) non-empty", "empty", "one tableau", False))
        return
    word = words.canonical_word(t.entries)
    b1 = garnir_element(Node(1, 1, lam[1]), ctx)
    element = _on(ctx, word, b1)
    m2 = span([garnir_element(Node(1, s, lam[s]), ctx) for s in range(2, len(lam))], ctx)
    res.checks.append(IdentityCheck(
        f"psi^t psi^B1 v in M_2 (t = {t}, word {list(word)})", str(element), f"M_2 of dim {m2.dimension}",
        m2.contains(element),
    ))


def _relations(p, res):
    ctx = ModuleContext(as_multipartition(p.shape), p.quiver, p.charges, field=p.field, cap=p.cap)
    report = check_defining_relations(ctx)
    for v in report.violations:
        res.checks.append(IdentityCheck(v, "", "", False))
    res.checks.append(IdentityCheck(f"{report.checked} relation instances", "", "", report.ok))


REGISTRY: dict[str, IdentitySpec] = {}
ALIASES: dict[str, str] = {}


def _register(key: str, alias: str, summary: str, run) -> None:
    REGISTRY[key] = IdentitySpec(key, alias, summary, run)
    ALIASES[alias] = key


_register("relations", "relations", "every KLR relation on every basis vector", _relations)
_register("hook-y", "lemma4.6a", "y_j psi_1..psi_k e(i) v = 0 on a hook", _hook_y)
_register("hook-y-column", "lemma4.6b", "y_j psi_{k+i-1} e(i) v = 0 on a hook", _hook_y_column)
_register("hook-psi", "lemma4.6c", "psi_j psi_1..psi_k e(i) v = 0 for j <= k on a hook", _hook_psi)
_register("hook-psi-column", "lemma4.6d", "psi_j psi_{k+i-1} e(i) v = 0 for j < k on a hook", _hook_psi_column)
_register("two-row-vanish", "lemma5.3", "psi_{2s} psi^{B_{s+1}} e(i) v = 0", _two_row_vanish)
_register("two-row-step", "thm5.4", "(psi_s..psi_{k+s}) psi^{B_s} e(i) v = -psi^{B_{s+1}} e(i) v", _two_row_step)
_register("two-row-step-back", "lemma5.10", "(psi_{k+s-1}..psi_{s-1}) psi^{B_s} e(i) v = -psi^{B_{s-1}} e(i) v",
          _two_row_step_back)
_register("two-row-cyclic", "cor5.6", "psi^{B_1} e(i) v generates every psi^{B_s} e(i) v", _two_row_cyclic)
_register("first-column", "cor5.7", "first-column Garnir elements generate all Garnir elements", _first_column)
_register("resolution-kernel", "lemma6.23", "psi^t psi^{B_1} v lies in M_2 when lam_3 >= 2", _resolution_kernel)


def resolve_key(key: str) -> str:
    if key in REGISTRY:
        return key
    if key in ALIASES:
        return ALIASES[key]
    raise UsageError(f"unknown identity {key!r}; known: {', '.join(sorted(REGISTRY))}")


def verify_identity(key: str, shape, quiver: Quiver | None = None, charges=0, s: int | None = None,
                    i: int | None = None, j: int | None = None, cap: int | None = DEFAULT_CAP,
                    field=None) -> IdentityResult:
    spec = REGISTRY[resolve_key(key)]
    params = IdentityParams(shape, quiver or Quiver.linear(), charges, s, i, j, cap, field)
    result = IdentityResult(spec.key, str(as_multipartition(shape)))
    spec.run(params, result)
    return result
