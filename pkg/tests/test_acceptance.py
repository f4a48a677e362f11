"""Acceptance criteria, one test each.  Every test prints a single PASS/FAIL line."""

import time
from itertools import permutations

import pytest

from klrspecht.cartan import Quiver, format_weight
from klrspecht.decomp import is_kleshchev, scan_std_mu_unique
from klrspecht.filtration import general_layers, hook_filtration, hook_inequality, mu_shape, total_dim, verify_filtration
from klrspecht.garnir import garnir_datum
from klrspecht.identities import verify_identity
from klrspecht.modules import ModuleContext, check_defining_relations, garnir_element, span, specht_quotient_dim
from klrspecht.partitions import Node, count_std, dim_perm, partitions
from klrspecht.tableaux import Tableau, chosen_word, initial

LINEAR = Quiver.linear()
E3, E4, E10 = Quiver.affine(3), Quiver.affine(4), Quiver.affine(10)


@pytest.fixture
def verdict(capsys):
    def emit(label: str, ok: bool, detail: str = "") -> None:
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} {label}" + (f": {detail}" if detail else ""))
        assert ok, detail

    return emit


def brute_standard_count(lam) -> int:
    """Fill the diagram with every permutation of 1..n and keep the standard ones."""
    n = sum(lam)
    count = 0
    for perm in permutations(range(1, n + 1)):
        rows, k = [], 0
        for p in lam:
            rows.append(perm[k:k + p])
            k += p
        if all(a < b for row in rows for a, b in zip(row, row[1:])) and all(
            lower[j] > upper[j] for upper, lower in zip(rows, rows[1:]) for j in range(len(lower))
        ):
            count += 1
    return count


def test_1_hook_example_golden(verdict):
    t0 = time.perf_counter()
    layers = hook_filtration(4, 5, E10, 0)
    dims = [L.dim for L in layers]
    weights = [format_weight({}, L.charges, E10) for L in layers]
    elapsed = time.perf_counter() - t0
    ok = (
        dims == [56, 70, 504, 1890, 5040, 7560]
        and sum(dims) == 15120 == dim_perm((4, 1, 1, 1, 1, 1))
        and weights == [
            "Lambda_0",
            "Lambda_9",
            "Lambda_0 + Lambda_8",
            "Lambda_0 + Lambda_9 + Lambda_7",
            "Lambda_0 + Lambda_9 + Lambda_8 + Lambda_6",
            "Lambda_0 + Lambda_9 + Lambda_8 + Lambda_7 + Lambda_5",
        ]
        and elapsed < 1
    )
    verdict("1 hook (4,1^5), e=10", ok, f"dims {dims}, {elapsed:.3f}s")


def test_2_general_example_golden(verdict):
    t0 = time.perf_counter()
    lam = (5, 5, 4, 2, 2)
    dm, ds = dim_perm(lam), count_std(lam)
    mu11 = general_layers(lam)[1].resolution.terms[0]
    elapsed = time.perf_counter() - t0
    ok = dm == 4631346720 and ds == 4594590 and str(mu11) == "4|6,4,2,2" and elapsed < 1
    verdict("2 dims of (5,5,4,2,2)", ok, f"{dm} / {ds}, mu_11 = {mu11}, {elapsed:.3f}s")


def test_3_residues_and_words_golden(verdict):
    t0 = time.perf_counter()
    T0 = initial((4, 2))
    i_lam = T0.residue_sequence(E3, 0)
    res_s4 = T0.apply_transposition(4).residue_sequence(E3, 0)
    w_T = chosen_word(Tableau.from_rows((4, 2), [[1, 3, 4, 5], [2, 6]]))
    g = garnir_datum((1, 2), (4, 2))
    elapsed = time.perf_counter() - t0
    ok = (
        i_lam == (0, 1, 2, 0, 2, 0)
        and res_s4 == (0, 1, 2, 2, 0, 0)
        and w_T == (2, 3, 4)
        and g.word == (3, 4, 5, 2, 3, 4)
        and chosen_word(g.tableau) == g.word
        and elapsed < 1
    )
    verdict("3 residue sequences and words on (4,2)", ok, f"{i_lam}, {res_s4}, {w_T}, {g.word}")


def test_4_relation_suite(verdict):
    t0 = time.perf_counter()
    bad, checked = [], 0
    for q in (E3, E4, LINEAR):
        for n in range(1, 7):
            for lam in partitions(n):
                report = check_defining_relations(ModuleContext(lam, q))
                checked += report.checked
                if not report.ok:
                    bad.append(f"{lam} {q}: {report.violations[0]}")
    elapsed = time.perf_counter() - t0
    verdict("4 defining relations, n <= 6", not bad and elapsed < 120,
            f"{checked} instances, {len(bad)} failures, {elapsed:.1f}s")


def test_5_specht_quotient_dims(verdict):
    t0 = time.perf_counter()
    bad = []
    cases = [(lam, LINEAR) for n in range(1, 8) for lam in partitions(n)]
    cases += [(lam, E3) for n in range(1, 7) for lam in partitions(n)]
    for lam, q in cases:
        got = specht_quotient_dim(ModuleContext(lam, q, cap=None))
        if got != count_std(lam):
            bad.append(f"{lam} {q}: {got}")
    for n in range(1, 8):
        for lam in partitions(n):
            if count_std(lam) != brute_standard_count(lam):
                bad.append(f"count_std{lam}")
    elapsed = time.perf_counter() - t0
    verdict("5 Specht quotient = #Std", not bad, f"{len(cases)} quotients, {len(bad)} failures, {elapsed:.1f}s")


def test_6_hook_filtration_engine(verdict):
    t0 = time.perf_counter()
    bad, count = [], 0
    for q in (E3, E4):
        for k in range(1, 8):
            for r in range(1, 8 - k):
                lam = (k,) + (1,) * r
                layers = hook_filtration(k, r, q)
                rep = verify_filtration(layers, lam, q, cap=5040)
                expect = [sum(L.dim for L in layers[i:]) for i in range(len(layers))]
                count += 1
                if not rep.ok or rep.span_dims != expect:
                    bad.append(f"{lam} {q}: {rep.span_dims} vs {expect}")
    elapsed = time.perf_counter() - t0
    verdict("6 hook filtrations k+r <= 7", not bad and elapsed < 300,
            f"{count} hooks, {len(bad)} failures, {elapsed:.1f}s")


def test_7_two_row_identities(verdict):
    bad = []
    for shape in [(2, 2), (3, 2), (3, 3)]:
        for key in ("thm5.4", "lemma5.3", "lemma5.10", "cor5.6"):
            result = verify_identity(key, shape, LINEAR)
            if not result.holds or not result.checks:
                bad.append(f"{key} {shape}")
    verdict("7 two-row identities and cyclicity", not bad, ", ".join(bad) or "all hold")


def test_8_std_mu_uniqueness(verdict):
    scan = scan_std_mu_unique(8)
    verdict("8 #Std^mu(lam) <= 1 for n <= 8", not scan.violations,
            f"{scan.pairs} pairs, {len(scan.violations)} violations")


def test_9_general_filtration_engine(verdict):
    bad = []
    for lam in [(2, 2, 1), (2, 2, 2)]:
        layers = general_layers(lam)
        rep = verify_filtration(layers, lam, LINEAR)
        if not rep.ok:
            bad.extend(rep.failures)
        if total_dim(layers) != dim_perm(lam):
            bad.append(f"{lam}: layers do not sum to dim M")
        r = len(lam)
        ctx = ModuleContext(lam, LINEAR)
        last = span([garnir_element(Node(1, r - 1, lam[r - 1]), ctx)], ctx).dimension
        if last != count_std(mu_shape(lam, r - 1, 1)):
            bad.append(f"{lam}: dim M_(r-1) = {last}")
        first = layers[1]
        if not all(is_kleshchev(mu, first.charges) for mu in first.resolution.terms):
            bad.append(f"{lam}: non-Kleshchev resolution term")
    verdict("9 general layers on (2,2,1), (2,2,2)", not bad, "; ".join(bad) or "span dims match")


def test_10_hook_inequality_scan(verdict):
    failures = []
    table = {}
    for n in range(2, 13):
        for lam in partitions(n):
            if len(lam) < 2:
                continue
            h = hook_inequality(lam)
            if not h.holds:
                failures.append(lam)
            key = ("equal" if h.equality else "strict", "lam3>=2" if len(lam) > 2 and lam[2] >= 2 else "lam3<2")
            table[key] = table.get(key, 0) + 1
    summary = ", ".join(f"{a}/{b}: {c}" for (a, b), c in sorted(table.items()))
    verdict("10 hook inequality for n <= 12", not failures, summary)
