import json

import pytest
from hypothesis import given, settings, strategies as st

from klrspecht.cartan import Quiver, format_weight
from klrspecht.decomp import is_kleshchev
from klrspecht.filtration import (
    FiltrationLayer,
    general_layers,
    hook_dim_identity,
    hook_filtration,
    hook_inequality,
    k_index,
    layers_from_json,
    layers_to_json,
    level_ell_combine,
    mu_shape,
    nu_layer,
    nu_layer_dim,
    simple_dim,
    skew_chain,
    split_partition,
    total_dim,
    two_row_filtration,
    verify_filtration,
)
from klrspecht.modules import ModuleContext, garnir_element, span
from klrspecht.partitions import Multipartition, Node, count_std, dim_perm, dominates, partitions, residue_content

LINEAR = Quiver.linear()
E10 = Quiver.affine(10)


def test_hook_example_layers():
    layers = hook_filtration(4, 5, E10, 0)
    assert [L.dim for L in layers] == [56, 70, 504, 1890, 5040, 7560]
    assert total_dim(layers) == 15120 == dim_perm((4, 1, 1, 1, 1, 1))
    weights = [format_weight({}, L.charges, E10) for L in layers]
    assert weights == [
        "Lambda_0",
        "Lambda_9",
        "Lambda_0 + Lambda_8",
        "Lambda_0 + Lambda_9 + Lambda_7",
        "Lambda_0 + Lambda_9 + Lambda_8 + Lambda_6",
        "Lambda_0 + Lambda_9 + Lambda_8 + Lambda_7 + Lambda_5",
    ]
    assert str(layers[2].shape) == "4|2,1,1,1"
    assert layers[3].generators == (Node(1, 3, 1), Node(1, 4, 1), Node(1, 5, 1))


def test_hook_small_cases():
    (only,) = hook_filtration(3, 0)
    assert only.shape.components == ((3,),)
    layers = hook_filtration(5, 1)
    assert [str(L.shape) for L in layers] == ["5,1", "6"]
    assert [L.dim for L in layers] == [5, 1]
    assert hook_dim_identity(4, 5) and hook_dim_identity(7, 1)


def test_hook_layers_stay_in_block():
    for k in range(1, 6):
        for r in range(0, 6):
            for q in (LINEAR, Quiver.affine(3), E10):
                layers = hook_filtration(k, r, q, 2)
                alpha = residue_content(layers[0].shape, q, layers[0].charges)
                for L in layers:
                    assert residue_content(L.shape, q, L.charges) == alpha


def test_two_row_examples():
    layers = two_row_filtration(2, 2)
    assert str(layers[1].shape) == "3|1"
    assert [L.dim for L in layers] == [2, 4]
    assert [L.dim for L in two_row_filtration(3, 2)] == [5, 5]
    assert str(two_row_filtration(4, 1)[1].shape) == "5|"
    assert tuple(two_row_filtration(4, 2, 3)[1].charges) == (2, 3)
    with pytest.raises(ValueError):
        two_row_filtration(1, 2)


def test_general_example():
    lam = (5, 5, 4, 2, 2)
    layers = general_layers(lam)
    assert str(layers[1].shape) == "4|6,4,2,2"
    assert layers[0].dim == 4594590
    assert total_dim(layers) == 4631346720
    assert k_index(lam, 1) == 2
    assert k_index((2, 2, 2), 1) == 2
    assert k_index((2, 2, 1), 1) == 1
    with pytest.raises(ValueError):
        general_layers(lam, q=Quiver.affine(5))


def test_general_matches_two_row_up_to_component_order():
    for k in range(1, 7):
        for r in range(1, k + 1):
            g = general_layers((k, r))
            t = two_row_filtration(k, r)
            assert [L.dim for L in g] == [L.dim for L in t]
            assert g[1].shape.components == tuple(reversed(t[1].shape.components))
            assert tuple(g[1].charges) == tuple(reversed(t[1].charges))


def test_resolutions_are_strict_kleshchev_chains():
    for n in range(2, 11):
        for lam in partitions(n):
            for L in general_layers(lam)[1:]:
                terms = L.resolution.terms
                for a, b in zip(terms, terms[1:]):
                    assert dominates(a, b) and a != b
                if L.index == 1:
                    assert all(is_kleshchev(mu, L.charges) for mu in terms)


def test_every_constructor_sums_to_dim_perm():
    for n in range(1, 13):
        for lam in partitions(n):
            assert total_dim(general_layers(lam)) == dim_perm(lam), lam
            if len(lam) == 2:
                assert total_dim(two_row_filtration(*lam)) == dim_perm(lam)
            if all(p == 1 for p in lam[1:]):
                assert total_dim(hook_filtration(lam[0], len(lam) - 1)) == dim_perm(lam)


def test_nu_layers_and_simple_dims():
    lam = (5, 5, 4, 2, 2)
    assert nu_layer(lam, 1) == mu_shape(lam, 1, 1)
    assert str(nu_layer((4, 2), 1)) == "1|5"
    assert simple_dim((2, 2, 1)) == count_std(mu_shape((2, 2, 1), 1, 1))
    assert simple_dim((2, 2, 2)) == count_std(mu_shape((2, 2, 2), 1, 1)) - count_std(mu_shape((2, 2, 2), 1, 2))
    assert simple_dim((3, 3, 2, 2), j=k_index((3, 3, 2, 2), 1)) == count_std(mu_shape((3, 3, 2, 2), 1, 2))
    for n in range(2, 11):
        for lam in partitions(n):
            if len(lam) < 2:
                continue
            layers = general_layers(lam)
            for i in range(1, len(lam)):
                assert nu_layer_dim(lam, i) == layers[i].dim
            for j in range(1, k_index(lam, 1) + 1):
                assert simple_dim(lam, j) > 0
            # composition series of each resolution term
            k = k_index(lam, 1)
            for j in range(1, k + 1):
                nxt = simple_dim(lam, j + 1) if j < k else 0
                assert count_std(mu_shape(lam, 1, j)) == simple_dim(lam, j) + nxt


def test_last_layer_is_single_specht():
    for n in range(2, 11):
        for lam in partitions(n):
            if len(lam) >= 2:
                last = general_layers(lam)[-1]
                assert last.dim == count_std(mu_shape(lam, len(lam) - 1, 1))


def test_hook_inequality_cases():
    h = hook_inequality((2, 2))
    assert h.holds and h.lhs == 3 * 2 * 1 and h.rhs == 6
    assert hook_inequality((2, 1, 1)).equality
    assert not hook_inequality((2, 2, 2)).equality
    k1 = hook_inequality((4, 1))
    assert k1.holds
    with pytest.raises(ValueError):
        hook_inequality((3,))


def test_split_partition():
    shape, charges = split_partition((4, 2), 1)
    assert str(shape) == "4|2" and tuple(charges) == (0, -1)
    for n in range(2, 11):
        for lam in partitions(n):
            for k in range(1, len(lam)):
                shape, charges = split_partition(lam, k, 3)
                assert residue_content(shape, LINEAR, charges) == residue_content(lam, LINEAR, 3)
                assert dim_perm(shape) == dim_perm(lam)
    with pytest.raises(ValueError):
        split_partition((3, 1), 2)


def test_level_ell_combine():
    single = hook_filtration(3, 2)
    assert level_ell_combine([single]) == single
    a, b = hook_filtration(2, 1), hook_filtration(3, 3)
    combined = level_ell_combine([a, b])
    assert len(combined) == max(len(a), len(b))
    assert sum(L.dim for L in combined) == dim_perm(Multipartition(((2, 1), (3, 1, 1, 1))))
    assert combined[1].generators == (Node(1, 1, 1), Node(2, 1, 1), Node(2, 2, 1), Node(2, 3, 1))


def test_skew_chain_nested_spans():
    assert skew_chain((5,)) == [None, ()]
    assert skew_chain((3, 1)) == [None, (Node(1, 1, 1),), ()]
    lam = (2, 1, 1, 1)
    chain = skew_chain(lam)
    assert len(chain) == len(lam) + 1
    ctx = ModuleContext(lam, LINEAR)
    dims = [ctx.dim if g is None else span([garnir_element(A, ctx) for A in g], ctx).dimension for g in chain]
    assert dims == sorted(dims, reverse=True) and dims[-1] == 0


def test_verify_examples():
    rep = verify_filtration(hook_filtration(3, 2, Quiver.affine(4)), (3, 1, 1), Quiver.affine(4))
    assert rep.ok and len(rep.span_dims) == 3
    rep = verify_filtration(two_row_filtration(2, 2), (2, 2), LINEAR)
    assert rep.ok and rep.span_dims[1] == 4 == count_std("3|1")
    rep = verify_filtration(general_layers((2, 2, 1)), (2, 2, 1), LINEAR)
    assert rep.ok
    assert rep.span_dims[1] - rep.span_dims[2] == simple_dim((2, 2, 1))


def test_verify_reports_wrong_prediction():
    layers = two_row_filtration(2, 2)
    broken = [layers[0], FiltrationLayer(1, layers[1].generators, layers[1].shape, layers[1].charges, 3)]
    assert not verify_filtration(broken, (2, 2), LINEAR).ok


def test_json_schema_and_round_trip():
    layers = general_layers((5, 5, 4, 2, 2))
    data = layers_to_json(layers)
    assert list(data[1].keys()) == ["index", "generators", "shape", "charges", "dim", "resolution"]
    assert data[1]["resolution"][0] == {"shape": "4|6,4,2,2", "dim": str(count_std("4|6,4,2,2"))}
    assert layers_from_json(json.loads(json.dumps(data))) == layers


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 8), st.integers(0, 8), st.integers(-5, 5))
def test_hook_json_round_trip(k, r, j):
    layers = hook_filtration(k, r, E10, j)
    assert layers_from_json(json.loads(json.dumps(layers_to_json(layers)))) == layers


@given(st.integers(2, 12).flatmap(lambda n: st.sampled_from([p for p in partitions(n) if len(p) >= 2])))
def test_hook_inequality_holds(lam):
    assert hook_inequality(lam).holds
