import pytest
from hypothesis import given, settings

from cogmech import (
    CharacterizationMode,
    Digraph,
    NoGroundError,
    UncoverableError,
    characterize,
    hybrid_completion,
    standard_cognition_characterization,
)
from graphs import digraphs
from oracles import simple_walks


@pytest.mark.parametrize(
    "text, mode",
    [("sym", CharacterizationMode.SYMBOLISTIC), ("Connectionistic", CharacterizationMode.CONNECTIONISTIC),
     ("hyb", CharacterizationMode.HYBRIDISTIC)],
)
def test_mode_parse(text, mode):
    assert CharacterizationMode.parse(text) is mode


def test_mode_parse_rejects():
    with pytest.raises(ValueError):
        CharacterizationMode.parse("neural")


@pytest.mark.parametrize("which, pairs", [("a", [("c", "d")]), ("b", []), ("c", [("b", "c")]), ("d", [])])
def test_hybrid_completion_f6(which, pairs):
    from graphs import f6

    assert hybrid_completion(f6(which)) == pairs
    assert characterize(f6(which), "hybridistic").total


def test_hybrid_e2(E2):
    report = characterize(E2, "hyb")
    assert report.total
    assert report.completion == tuple(hybrid_completion(E2))
    assert set(report.uniters) == set(report.completion)


def test_hybrid_uncoverable():
    d = Digraph("abz", [("a", "b")])
    with pytest.raises(UncoverableError) as info:
        hybrid_completion(d)
    assert info.value.vertices == ("z",)
    report = characterize(d, "hybridistic")
    assert not report.total and report.uncovered_vertices() == ["z"]


def test_connectionistic_loop_needs_diagonal(E2):
    report = characterize(E2, "connectionistic")
    assert ("e", "e") in report.uniters


def test_empty_nets_not_stored(E2):
    report = characterize(E2, "symbolistic")
    assert set(report.units) == set("cdefghij")
    assert report.uncovered_vertices() == ["a", "b"]


def test_standard_e1(E1):
    std = standard_cognition_characterization(E1)
    assert list(std.units) == list("efghi")
    assert std.self_report.total and std.non_self_report.total
    assert std.partition.ground == frozenset("efghi")
    assert std.uniters[("d", "i")] == Digraph("di", [("d", "i")])
    assert std.uniters[("a", "e")].arcs == {("a", "b"), ("a", "c"), ("b", "c"), ("c", "e")}


def test_standard_needs_ground(E2):
    with pytest.raises(NoGroundError):
        standard_cognition_characterization(E2)


@settings(max_examples=100)
@given(digraphs(max_vertices=5))
def test_symbolistic_totality_law(d):
    _, cycles = simple_walks(d.vertices, d.arcs)
    on_cycle = {a for c in cycles for a in zip(c, c[1:])}
    arcless = [v for v in d.vertices if not any(v in a for a in d.arcs)]
    total = characterize(d, "symbolistic").total
    assert total == (on_cycle == d.arcs and not arcless)


@settings(max_examples=100)
@given(digraphs(max_vertices=5))
def test_connectionistic_and_hybrid_cover_all_arcs(d):
    arcless = [v for v in d.vertices if not any(v in a for a in d.arcs)]
    con = characterize(d, "connectionistic")
    hyb = characterize(d, "hybridistic")
    assert con.total == (not arcless)
    assert hyb.total == (not arcless)
    assert con.uncovered_arcs() == hyb.uncovered_arcs() == []
