import itertools

import pytest
from hypothesis import given, settings

from cogmech import (
    Digraph,
    FormizationMode,
    FormizationTable,
    ModeMismatchError,
    ResourceLimitError,
    TableSizeError,
    formization_equivalent,
    formize,
    recover_labels,
)
from graphs import arcs_of, digraphs, published_table
from oracles import formization_counts, permutation_equivalent

SINGLE, MIXED = FormizationMode.SINGLE_LEVELED, FormizationMode.MIXED_LEVELED


def test_formize_label_order_matches_published(E1, E2):
    # the published tables list vertices alphabetically
    assert formize(E2, presentation_order=False) == published_table("e2_table")
    assert formize(E1, presentation_order=False) == published_table("e1_table")


def test_presentation_order(E1):
    t = formize(E1)
    assert t.labels == tuple("ehfgibadc")
    keys = [(t.cycle_vector[i], t.out_vector[i], t.in_vector[i]) for i in range(t.n)]
    assert keys == sorted(keys, reverse=True)


def test_loop_counted_once_everywhere():
    t = formize(Digraph("a", [("a", "a")]))
    assert (t.path_matrix, t.cycle_vector, t.out_vector, t.in_vector) == (((1,),), (1,), (1,), (1,))


def test_table_validation():
    with pytest.raises(TableSizeError):
        FormizationTable.from_lists([[0, 1]], [0], [0], [0])
    with pytest.raises(TableSizeError):
        FormizationTable.from_lists([[0]], [0, 1], [0], [0])


def test_mode_mismatch(E1):
    single, mixed = formize(E1, SINGLE), formize(E1, MIXED)
    with pytest.raises(ModeMismatchError):
        formization_equivalent(single, mixed)
    assert formization_equivalent(single, mixed, "mixed")


def test_sizes_differ_not_equivalent(E1, E2):
    assert not formization_equivalent(formize(E1), formize(E2))


def test_witness_is_least():
    ring = Digraph("abc", arcs_of("ab bc ca"))
    result = formization_equivalent(formize(ring, presentation_order=False), formize(ring, presentation_order=False))
    assert result.witness == (0, 1, 2)


def test_search_guard():
    verts = "abcdef"
    d = Digraph(verts, [(x, y) for x in verts for y in verts if x != y])
    t = formize(d)
    with pytest.raises(ResourceLimitError):
        formization_equivalent(t, t, max_nodes=3)


def test_equivalent_but_not_isomorphic():
    # vertex a of x points at all others; in y no vertex has out-degree 3
    x = Digraph("abcd", arcs_of("ab ac ad ba"))
    y = Digraph("abcd", arcs_of("ab ad ba bc"))
    assert formization_equivalent(formize(x, SINGLE), formize(y, SINGLE))
    assert not formization_equivalent(formize(x, MIXED), formize(y, MIXED))
    assert max(x.out_degree(v) for v in x.vertices) != max(y.out_degree(v) for v in y.vertices)


def test_recover_labels_e1_unique(E1):
    table = published_table("e1_table")
    found = recover_labels(table, E1)
    assert [a.labels for a in found] == [tuple("abcdefghi")]
    assert found[0].mapping()["o5"] == "e"
    # cross-check with the all-permutation oracle
    m, c = formization_counts(E1.vertices, E1.arcs)
    assert len(permutation_equivalent(table.path_matrix, table.cycle_vector, m, c)) == 1


def test_recover_labels_symmetric_ring():
    ring = Digraph("abc", arcs_of("ab bc ca"))
    # one path between every ordered pair, so even reflections fit
    found = recover_labels(formize(ring), ring)
    assert {a.labels for a in found} == set(itertools.permutations("abc"))
    chain = Digraph("abc", arcs_of("ab bc"))
    assert [a.labels for a in recover_labels(formize(chain, presentation_order=False), chain)] == [tuple("abc")]


def test_recover_labels_size_mismatch(E1, E2):
    with pytest.raises(TableSizeError):
        recover_labels(formize(E1), E2)


@settings(max_examples=100)
@given(digraphs(max_vertices=5))
def test_formize_matches_oracle(d):
    t = formize(d, presentation_order=False)
    m, c = formization_counts(d.vertices, d.arcs)
    assert [list(r) for r in t.path_matrix] == m
    assert list(t.cycle_vector) == c
    assert list(t.out_vector) == [sum(1 for a in d.arcs if a[0] == v) for v in d.vertices]


@settings(max_examples=60)
@given(digraphs(max_vertices=4), digraphs(max_vertices=4))
def test_equivalence_matches_permutation_oracle(d1, d2):
    t1, t2 = formize(d1, presentation_order=False), formize(d2, presentation_order=False)
    perms = permutation_equivalent(t1.path_matrix, t1.cycle_vector, t2.path_matrix, t2.cycle_vector)
    result = formization_equivalent(t1, t2)
    assert result.equivalent == bool(perms)
    if perms:
        assert result.witness == min(perms)


def test_permuted_round_trip(E2):
    t = formize(E2, presentation_order=False)
    order = [3, 1, 4, 0, 2, 9, 8, 7, 6, 5]
    inverse = sorted(range(t.n), key=order.__getitem__)
    assert t.permuted(order).permuted(inverse) == t
    assert t.permuted(order).labels == tuple(E2.vertices[i] for i in order)


def test_transcribed_tables_parse():
    for name in ("e2_table", "e1_table"):
        t = published_table(name)
        assert t.labels is None and t.n in (9, 10)
        assert all(t.path_matrix[i][j] >= 0 for i, j in itertools.product(range(t.n), repeat=2))
