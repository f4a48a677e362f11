from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from klrspecht.linalg import QQ, Echelon, PrimeField, as_field, rank


def dense_rank(rows, width, p=None):
    """Plain row reduction over Q, or over GF(p) when ``p`` is given."""
    m = [[Fraction(r.get(j, 0)) if p is None else r.get(j, 0) % p for j in range(width)] for r in rows]
    rk = 0
    for col in range(width):
        piv = next((i for i in range(rk, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        inv = 1 / m[rk][col] if p is None else pow(m[rk][col], -1, p)
        for i in range(len(m)):
            if i != rk and m[i][col]:
                f = m[i][col] * inv
                m[i] = [a - f * b if p is None else (a - f * b) % p for a, b in zip(m[i], m[rk])]
        rk += 1
    return rk


sparse_rows = st.lists(
    st.dictionaries(st.integers(0, 6), st.integers(-4, 4).filter(bool), max_size=5), max_size=8
)


def test_field_specs():
    assert as_field(None) is QQ
    assert as_field("QQ") is QQ
    assert as_field(5) == PrimeField(5)
    with pytest.raises(ValueError):
        PrimeField(4)
    assert PrimeField(7).inv(3) * 3 % 7 == 1


def test_echelon_normalises_pivots():
    ech = Echelon()
    row = ech.insert({2: 3, 4: 6})
    assert row == {2: 1, 4: 2}
    assert ech.insert({2: 1, 4: 2}) is None
    assert ech.contains({2: -2, 4: -4})
    assert not ech.contains({4: 1})
    assert len(ech) == 1


@given(sparse_rows)
def test_rank_matches_dense_elimination_over_q(rows):
    assert rank(rows) == dense_rank(rows, 7)


@given(sparse_rows, st.sampled_from([2, 3, 5]))
def test_rank_matches_dense_elimination_mod_p(rows, p):
    assert rank(rows, PrimeField(p)) == dense_rank(rows, 7, p)


@given(sparse_rows)
def test_reduced_rows_span_inserted(rows):
    ech = Echelon()
    for r in rows:
        ech.insert(dict(r))
    for r in rows:
        assert ech.contains(dict(r))
    pivots = [p for p, _ in ech.reduced_rows()]
    assert pivots == sorted(pivots)
