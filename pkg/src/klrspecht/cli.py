"""Command-line front end.

Exit codes: 0 on success or a passing check, 1 when a checked property
fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .cartan import Quiver, as_multicharge, format_weight
from .decomp import (
    DecompQuery,
    decomposition_number,
    is_kleshchev,
    scan_std_mu_unique,
    unique_tableau,
    verify_decomposition_chain,
)
from .filtration import (
    FiltrationLayer,
    filtration_for,
    general_layers,
    hook_dim_identity,
    hook_inequality,
    layers_to_json,
    total_dim,
    two_row_filtration,
    verify_filtration,
)
from .garnir import garnir_datum, garnir_nodes
from .identities import REGISTRY, UsageError, resolve_key, verify_identity
from .modules import DEFAULT_CAP, CapExceeded
from .partitions import (
    Multipartition,
    Node,
    as_multipartition,
    count_std,
    dim_perm,
    hook_length,
    node_residue,
    partitions,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class CliError(Exception):
    """A usage problem reported with exit code 2."""


# -- parsing helpers ----------------------------------------------------

def parse_shape(text: str) -> Multipartition:
    try:
        return Multipartition.parse(text)
    except ValueError as exc:
        raise CliError(f"cannot parse shape {text!r}: {exc}") from None


def parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise CliError(f"cannot parse integer list {text!r}") from None


def quiver_of(args) -> Quiver:
    if getattr(args, "e", None) is not None:
        if args.linear:
            raise CliError("--e and --linear are mutually exclusive")
        try:
            return Quiver.affine(args.e)
        except ValueError as exc:
            raise CliError(str(exc)) from None
    return Quiver.linear()


def charges_of(args, level: int) -> tuple[int, ...]:
    if args.charges is None:
        return (0,) * level
    ch = parse_ints(args.charges)
    if len(ch) != level:
        raise CliError(f"expected {level} charge(s), got {len(ch)}")
    return ch


def emit(args, text: str, data) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print(text)


# -- rendering ------------------------------------------------------------

def residue_diagram(shape, quiver: Quiver, charges) -> str:
    """Bordered grid of residues, one block per component."""
    lam = as_multipartition(shape)
    kappa = as_multicharge(charges)
    blocks = []
    for c, comp in enumerate(lam.components, start=1):
        cells = [[str(node_residue(quiver, kappa.entries, Node(c, a, b))) for b in range(1, length + 1)]
                 for a, length in enumerate(comp, start=1)]
        label = f"component {c} (charge {kappa[c - 1]})" if lam.level > 1 else f"charge {kappa[0]}"
        if not comp:
            blocks.append(f"{label}: empty")
            continue
        width = max(len(x) for row in cells for x in row)
        lines = [label]
        prev = 0
        for row in cells:
            border_len = max(prev, len(row))
            lines.append("+" + "+".join("-" * (width + 2) for _ in range(border_len)) + "+")
            lines.append("|" + "|".join(f" {x:>{width}} " for x in row) + "|")
            prev = len(row)
        lines.append("+" + "+".join("-" * (width + 2) for _ in range(prev)) + "+")
        blocks.append("\n".join(lines))
    return "\n".join(blocks)


def layer_table(layers: Sequence[FiltrationLayer], quiver: Quiver) -> str:
    lines = []
    for L in layers:
        gens = " ".join(f"({A[-2]},{A[-1]})" for A in L.generators) or "v"
        weight = format_weight({}, L.charges, quiver)
        lines.append(f"layer {L.index}: generators {gens}; shape {L.shape}; charges {L.charges}; "
                     f"weight {weight}; dim {L.dim}")
        if L.resolution.length > 1:
            parts = ", ".join(f"{mu} [{count_std(mu)}]" for mu in L.resolution.terms)
            lines.append(f"  resolution: {parts}")
    return "\n".join(lines)


# -- commands -------------------------------------------------------------

def cmd_dims(args) -> int:
    lam = parse_shape(args.shape)
    dm, ds = dim_perm(lam), count_std(lam)
    hooks = [
        [[hook_length(comp, a, b) for b in range(1, comp[a - 1] + 1)] for a in range(1, len(comp) + 1)]
        for comp in lam.components
    ]
    lines = [f"shape {lam}", f"dim M = {dm}, dim S = {ds}", "hook lengths:"]
    for c, comp in enumerate(hooks, start=1):
        for row in comp:
            lines.append(("  " if lam.level == 1 else f"  [{c}] ") + " ".join(map(str, row)))
    emit(args, "\n".join(lines), {"shape": str(lam), "dim_perm": str(dm), "dim_specht": str(ds), "hooks": hooks})
    return EXIT_OK


def cmd_filtration(args) -> int:
    lam = parse_shape(args.shape)
    if lam.level != 1:
        raise CliError("filtrations are constructed for a single partition")
    q = quiver_of(args)
    charge = charges_of(args, 1)[0]
    try:
        layers = filtration_for(lam, q, charge, args.kind)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    status = EXIT_OK
    verify_line = None
    data = {"shape": str(lam), "quiver": str(q), "layers": layers_to_json(layers)}
    if args.verify:
        try:
            rep = verify_filtration(layers, lam, q, charge, cap=args.cap)
            verify_line = ("verified" if rep.ok else "FAILED") + f": span dims {rep.span_dims}"
            if not rep.ok:
                verify_line += "\n" + "\n".join(rep.failures)
                status = EXIT_FAIL
            data["verify"] = {"ok": rep.ok, "span_dims": [str(d) for d in rep.span_dims], "failures": rep.failures}
        except CapExceeded as exc:
            verify_line = f"SKIPPED(cap): {exc}"
            data["verify"] = {"skipped": "cap", "reason": str(exc)}
    if args.format == "json":
        print(json.dumps(data, indent=2))
        return status
    out = [f"filtration of M^({lam}) over the {q} quiver; dim M = {dim_perm(lam)}, sum of layers = {total_dim(layers)}",
           layer_table(layers, q)]
    for L in layers:
        out.append(f"\nlayer {L.index}: {L.shape}")
        out.append(residue_diagram(L.shape, q, L.charges))
    if verify_line:
        out.append(verify_line)
    print("\n".join(out))
    return status


def cmd_verify(args) -> int:
    lam = parse_shape(args.shape)
    q = quiver_of(args)
    try:
        key = resolve_key(args.identity)
        result = verify_identity(key, lam, q, charges_of(args, lam.level), s=args.s, i=args.i, j=args.j,
                                 cap=args.cap)
    except CapExceeded as exc:
        print(f"SKIPPED(cap): {exc}")
        return EXIT_OK
    except UsageError as exc:
        raise CliError(str(exc)) from None
    data = {
        "identity": key,
        "shape": str(lam),
        "holds": result.holds,
        "checks": [{"label": c.label, "ok": c.ok, "lhs": c.lhs, "rhs": c.rhs} for c in result.checks],
    }
    lines = [f"{key} on {lam} ({q}): {'PASS' if result.holds else 'FAIL'} ({len(result.checks)} checks)"]
    for c in result.failures():
        lines.append(f"  {c.label}\n    lhs = {c.lhs}\n    rhs = {c.rhs}")
    emit(args, "\n".join(lines), data)
    return EXIT_OK if result.holds else EXIT_FAIL


def _scan_hook_dims(max_n: int) -> tuple[list, dict]:
    bad = [(k, n - k) for n in range(1, max_n + 1) for k in range(1, n + 1) if not hook_dim_identity(k, n - k)]
    return bad, {"checked": sum(range(1, max_n + 1))}


def _scan_filtration_dims(max_n: int) -> tuple[list, dict]:
    bad, checked = [], 0
    for n in range(1, max_n + 1):
        for lam in partitions(n):
            checked += 1
            if total_dim(general_layers(lam)) != dim_perm(lam):
                bad.append(str(lam))
            if len(lam) == 2 and total_dim(two_row_filtration(*lam)) != dim_perm(lam):
                bad.append(f"two-row {lam}")
    return bad, {"checked": checked}


def _scan_hook_inequality(max_n: int) -> tuple[list, dict]:
    bad = []
    # the equality set is reported against the third-row criterion, not asserted
    table = {"equal_lambda3_lt_2": 0, "equal_lambda3_ge_2": 0, "strict_lambda3_lt_2": 0, "strict_lambda3_ge_2": 0}
    for n in range(2, max_n + 1):
        for lam in partitions(n):
            if len(lam) < 2:
                continue
            h = hook_inequality(lam)
            if not h.holds:
                bad.append(str(lam))
            kind = "equal" if h.equality else "strict"
            third = lam[2] if len(lam) > 2 else 0
            table[f"{kind}_lambda3_{'ge_2' if third >= 2 else 'lt_2'}"] += 1
    return bad, table


def _scan_std_mu(max_n: int) -> tuple[list, dict]:
    scan = scan_std_mu_unique(max_n)
    bad = [f"{lam} / {mu} charges ({k}): {c}" for lam, mu, k, c in scan.violations]
    return bad, {"pairs": scan.pairs, "dominance_failures": len(scan.dominance_failures)}


SCANS = {
    "hook-dims": _scan_hook_dims,
    "filtration-dims": _scan_filtration_dims,
    "hook-inequality": _scan_hook_inequality,
    "std-mu-unique": _scan_std_mu,
}


def cmd_scan(args) -> int:
    fn = SCANS.get(args.property)
    if fn is None:
        raise CliError(f"unknown scan {args.property!r}; known: {', '.join(SCANS)}")
    if args.max_n < 1:
        raise CliError("--max-n must be positive")
    bad, info = fn(args.max_n)
    data = {"property": args.property, "max_n": args.max_n, "violations": bad, "info": info}
    text = [f"scan {args.property} up to n = {args.max_n}: {len(bad)} violations"]
    text += [f"  {k}: {v}" for k, v in info.items()]
    text += [f"  violation: {b}" for b in bad]
    emit(args, "\n".join(text), data)
    return EXIT_OK if not bad else EXIT_FAIL


def cmd_garnir(args) -> int:
    lam = parse_shape(args.shape)
    nodes = garnir_nodes(lam)
    if not nodes:
        raise CliError(f"{lam} has 0 Garnir nodes")
    if args.node is None:
        targets = nodes
    else:
        coords = parse_ints(args.node)
        if len(coords) == 2:
            coords = (1,) + coords
        if len(coords) != 3 or Node(*coords) not in nodes:
            raise CliError(f"{args.node} is not a Garnir node of {lam}; Garnir nodes: "
                           + " ".join(str(tuple(A)) for A in nodes))
        targets = [Node(*coords)]
    records, lines = [], []
    for A in targets:
        d = garnir_datum(A, lam)
        records.append({
            "node": list(d.node),
            "belt": [list(B) for B in d.belt],
            "tableau": str(d.tableau),
            "word": list(d.word),
        })
        lines.append(f"node {tuple(d.node)}")
        lines.append("  belt: " + " ".join(str(tuple(B)) for B in d.belt))
        lines.append(f"  Garnir tableau: {d.tableau}")
        lines.append("  word: " + " ".join(map(str, d.word)))
    emit(args, "\n".join(lines), records if args.node is None else records[0])
    return EXIT_OK


def cmd_decomp(args) -> int:
    shapes = [parse_shape(s) for s in args.shapes]
    if len(shapes) == 1:
        lam = shapes[0]
        if lam.level != 1:
            raise CliError("a single shape must be a partition; pass two bipartitions for a decomposition number")
        charge = charges_of(args, 1)[0]
        rep = verify_decomposition_chain(lam.components[0], charge, max_n=args.max_n)
        data = {"shape": str(lam), "chain": [str(m) for m in rep.chain], "checked": rep.checked,
                "deviations": rep.deviations, "skipped": rep.skipped}
        if rep.skipped:
            emit(args, rep.skipped, data)
            return EXIT_OK
        text = [f"chain for {lam}: " + ", ".join(str(m) for m in rep.chain),
                f"{rep.checked} decomposition numbers checked, {len(rep.deviations)} deviations"]
        text += [f"  {d}" for d in rep.deviations]
        emit(args, "\n".join(text), data)
        return EXIT_OK if rep.ok else EXIT_FAIL
    if len(shapes) != 2:
        raise CliError("decomp takes one partition or two bipartitions")
    charges = charges_of(args, 2)
    try:
        query = DecompQuery(shapes[0], shapes[1], charges)
        if not is_kleshchev(query.mu, query.charges):
            raise CliError(f"{query.mu} is not Kleshchev for charges {charges}")
        d = decomposition_number(query)
        t = unique_tableau(query)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    data = {"lambda": str(query.lam), "mu": str(query.mu), "charges": list(charges), "d": d,
            "tableau": str(t) if t else None}
    emit(args, f"d = {d}" + (f"; tableau {t}" if t else ""), data)
    return EXIT_OK


# -- argument parser ------------------------------------------------------

def _common(p: argparse.ArgumentParser, charges: bool = True) -> None:
    p.add_argument("--e", type=int, default=None, help="cyclic quiver with e vertices (e >= 3)")
    p.add_argument("--linear", action="store_true", help="linear quiver (default)")
    if charges:
        p.add_argument("--charge", "--charges", dest="charges", default=None, help="comma-separated multicharge")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest module dimension for engine checks")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="klrspecht", description="KLR algebras, permutation modules and Specht filtrations")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", help="dimensions of M and S with hook lengths")
    p.add_argument("shape")
    _common(p)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("filtration", help="layers of a Specht filtration with residue diagrams")
    p.add_argument("shape")
    p.add_argument("--kind", choices=["auto", "hook", "two-row", "general"], default="auto")
    p.add_argument("--verify", action="store_true", help="check the layers against engine span dimensions")
    _common(p)
    p.set_defaults(func=cmd_filtration)

    p = sub.add_parser("verify", help="check an operator identity in M^lambda",
                       description="identities: " + ", ".join(f"{k} ({s.alias})" for k, s in REGISTRY.items()))
    p.add_argument("identity")
    p.add_argument("--shape", required=True)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--j", type=int, default=None)
    _common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="exhaustive combinatorial scans")
    p.add_argument("property", help=", ".join(SCANS))
    p.add_argument("--max-n", type=int, default=8)
    _common(p, charges=False)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("garnir", help="Garnir belt, tableau and word")
    p.add_argument("shape")
    p.add_argument("--node", default=None, help="row,col or component,row,col")
    _common(p, charges=False)
    p.set_defaults(func=cmd_garnir)

    p = sub.add_parser("decomp", help="level-two decomposition numbers")
    p.add_argument("shapes", nargs="+", help="one partition (chain check) or lambda and mu")
    p.add_argument("--max-n", type=int, default=12)
    _common(p)
    p.set_defaults(func=cmd_decomp)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "cap", 1) is not None and args.cap < 1:
        print("error: --cap must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        quiver_of(args)
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
