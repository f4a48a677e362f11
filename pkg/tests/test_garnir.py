import pytest

from klrspecht import words
from klrspecht.partitions import Node, multipartitions, partitions
from klrspecht.tableaux import enumerate_row_standard, initial
from klrspecht.garnir import garnir_belt, garnir_datum, garnir_nodes, garnir_tableau, garnir_word


def oracle_tableau(A, shape):
    """Search every row-standard tableau for the one fixing T^shape off the belt
    and increasing along the belt from bottom-left to top-right."""
    belt = garnir_belt(A, shape)
    T0 = initial(shape)
    hits = []
    for T in enumerate_row_standard(shape):
        if any(T.entry(B) != T0.entry(B) for B in T.nodes if B not in belt):
            continue
        values = [T.entry(B) for B in belt]
        if values == sorted(values):
            hits.append(T)
    assert len(hits) == 1
    return hits[0]


def test_garnir_nodes_examples():
    assert garnir_nodes((4, 2)) == [Node(1, 1, 1), Node(1, 1, 2)]
    assert garnir_nodes((3, 1, 1, 1)) == [Node(1, i, 1) for i in (1, 2, 3)]
    assert garnir_nodes((7,)) == []
    assert garnir_nodes("1|1,1") == [Node(2, 1, 1)]


def test_belts():
    assert set(garnir_belt((1, 2), (4, 2))) == {(1, 1, 2), (1, 1, 3), (1, 1, 4), (1, 2, 1), (1, 2, 2)}
    assert set(garnir_belt((1, 1), (2, 1))) == {(1, 1, 1), (1, 1, 2), (1, 2, 1)}
    assert set(garnir_belt((1, 1), (1, 1))) == {(1, 1, 1), (1, 2, 1)}
    with pytest.raises(ValueError):
        garnir_belt((2, 1), (4, 2))


def test_garnir_tableau_examples():
    assert garnir_tableau((1, 2), (4, 2)).rows() == [[(1, 4, 5, 6), (2, 3)]]
    k, r = 3, 2
    hook = (k,) + (1,) * r
    assert garnir_tableau((1, 1), hook) == initial(hook).apply_word(tuple(range(1, k + 1)))
    assert garnir_tableau((1, 1), (2, 2)).rows() == [[(2, 3), (1, 4)]]


def test_garnir_word_examples():
    assert garnir_word((1, 2), (4, 2)) == (3, 4, 5, 2, 3, 4)
    k = 4
    hook = (k, 1, 1, 1)
    assert garnir_word((1, 1), hook) == (1, 2, 3, 4)
    for i in (2, 3):
        assert garnir_word((i, 1), hook) == (k + i - 1,)
    assert garnir_word((1, 1), (5, 2)) == (1, 2, 3, 4, 5)


def test_two_row_words_have_factorised_form():
    k, r = 5, 3
    for s in range(1, r + 1):
        expect = []
        for t in range(s - 1, -1, -1):
            expect.extend(range(s + t, k + t + 1))
        assert garnir_word((1, s), (k, r)) == tuple(expect)


def test_multipartition_offsets():
    d = garnir_datum((2, 1, 1), "2|2,1")
    assert d.word == (3, 4)
    assert initial("2|2,1").apply_word(d.word) == d.tableau


def test_every_small_shape_against_oracle():
    shapes = [lam for n in range(1, 9) for lam in partitions(n)]
    shapes += [lam for n in range(1, 6) for lam in multipartitions(n, 2)]
    for lam in shapes:
        nodes = garnir_nodes(lam)
        comps = lam.components if hasattr(lam, "components") else (lam,)
        assert len(nodes) == sum(sum(c[1:]) for c in comps)
        for A in nodes:
            d = garnir_datum(A, lam)
            assert d.tableau == oracle_tableau(A, lam)
            assert initial(lam).apply_word(d.word) == d.tableau
            assert words.is_reduced(d.word, d.tableau.size)
            assert len(d.word) == words.length(d.tableau.permutation())
            assert d.tableau.is_row_standard()
