import pytest
from hypothesis import given, settings, strategies as st

from klrspecht.cartan import Quiver
from klrspecht.decomp import (
    DecompQuery,
    block_of,
    decomposition_number,
    is_kleshchev,
    scan_std_mu_unique,
    std_mu_set,
    unique_tableau,
    verify_decomposition_chain,
)
from klrspecht.filtration import general_layers
from klrspecht.partitions import dominates, multipartitions, residue_content
from klrspecht.tableaux import enumerate_standard, initial, tableau_dominates

LINEAR = Quiver.linear()


def brute_std_mu(lam, mu, charges):
    """Filter every standard lam-tableau by residue sequence and dominance."""
    target = initial(mu).residue_sequence(LINEAR, charges)
    t_mu = initial(mu)
    return [
        s for s in enumerate_standard(lam)
        if s.residue_sequence(LINEAR, charges) == target and tableau_dominates(s, t_mu)
    ]


def chain(lam, x=0):
    layer = general_layers(lam, x)[1]
    return list(layer.resolution.terms), layer.charges


def test_kleshchev_examples():
    assert not is_kleshchev("2|1", (0, 0))
    assert is_kleshchev("|3,2,1", (0, 0))
    assert is_kleshchev("|", (2, 0))
    terms, charges = chain((3, 3, 2, 2))
    assert all(is_kleshchev(mu, charges) for mu in terms)
    with pytest.raises(ValueError):
        is_kleshchev("1|1", (0, 1))
    with pytest.raises(ValueError):
        is_kleshchev("1|1", (0,))


def test_query_validation():
    with pytest.raises(ValueError):
        DecompQuery("1|1", "2|", (0, 1))
    with pytest.raises(ValueError):
        DecompQuery("1|1", "1|", (1, 0))
    with pytest.raises(ValueError):
        DecompQuery((2,), (2,), (0,))
    with pytest.raises(ValueError):
        decomposition_number(DecompQuery("1|1", "2|", (0, 0)))


def test_decomposition_examples():
    terms, charges = chain((2, 2, 2))
    mu = terms[0]
    assert decomposition_number(DecompQuery(mu, mu, charges)) == 1
    assert decomposition_number(DecompQuery(terms[0], terms[1], charges)) == 1
    terms, charges = chain((3, 3, 2, 2))
    assert len(terms) >= 2
    for j in range(len(terms)):
        for s in range(j + 2, len(terms)):
            assert decomposition_number(DecompQuery(terms[j], terms[s], charges)) == 0


def test_unique_tableau_examples():
    terms, charges = chain((2, 2, 2))
    mu = terms[0]
    assert unique_tableau(DecompQuery(mu, mu, charges)) == initial(mu)
    t = unique_tableau(DecompQuery(terms[0], terms[1], charges))
    assert [t] == brute_std_mu(terms[0], terms[1], charges)
    # different residue contents
    assert unique_tableau(DecompQuery("2|", "1|1", (5, 0))) is None
    assert std_mu_set(DecompQuery("2|", "|2", (5, 0))) == []


def test_std_mu_matches_brute_force():
    for n in range(1, 6):
        bips = list(multipartitions(n, 2))
        for d in range(0, n + 2):
            for lam in bips:
                for mu in bips:
                    q = DecompQuery(lam, mu, (d, 0))
                    assert std_mu_set(q) == brute_std_mu(lam, mu, (d, 0))


def test_block_of():
    blk = block_of("1|1", (1, 0))
    assert all(residue_content(nu, LINEAR, (1, 0)) == residue_content("1|1", LINEAR, (1, 0)) for nu in blk)
    assert "1|1" in [str(nu) for nu in blk]


def test_chain_checks():
    assert verify_decomposition_chain((2, 2, 2)).ok
    rep = verify_decomposition_chain((3, 2))
    assert rep.ok and len(rep.chain) == 1
    rep = verify_decomposition_chain((3, 3, 2, 2))
    assert rep.ok and rep.checked > 0
    rep = verify_decomposition_chain((5, 5, 4, 2, 2))
    assert not rep.ok and rep.skipped.startswith("SKIPPED(cap)")
    assert verify_decomposition_chain((4,)).skipped is not None


def test_uniqueness_scan_small():
    scan = scan_std_mu_unique(6)
    assert scan.pairs > 0
    assert scan.violations == [] and scan.dominance_failures == []


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 7).flatmap(lambda n: st.tuples(
    st.sampled_from(list(multipartitions(n, 2))), st.sampled_from(list(multipartitions(n, 2))), st.integers(0, 8))))
def test_nonzero_only_when_dominating(args):
    lam, mu, d = args
    found = std_mu_set(DecompQuery(lam, mu, (d, 0)))
    assert len(found) <= 1
    if found:
        assert dominates(lam, mu)
