"""Reference digraphs and a hypothesis strategy for small random digraphs."""

from __future__ import annotations

from pathlib import Path

from hypothesis import strategies as st

from cogmech import Digraph, parse_formization_csv

DATA = Path(__file__).parent / "data"


def arcs_of(spec: str) -> list[tuple[str, str]]:
    return [(p[0], p[1]) for p in spec.split()]


E1_VERTICES = list("abcdefghi")
E1_ARCS = arcs_of("ab ac bc bi ce df di eg eh fe fi gf he hg ih")
E2_VERTICES = list("abcdefghij")
E2_ARCS = arcs_of("bg cf da de ee ef eg fc fg gd hi ij jh")

# Arc sets read back from the path/cycle lists printed beside each drawing.
F6_ARCS = {
    "a": arcs_of("ab ba cd"),
    "b": arcs_of("ab ba cd dc"),
    "c": arcs_of("ab ba bc cd dc"),
    "d": arcs_of("ab ba bc cd dc da"),
}


def e1() -> Digraph:
    return Digraph(E1_VERTICES, E1_ARCS)


def e2() -> Digraph:
    return Digraph(E2_VERTICES, E2_ARCS)


def f6(which: str) -> Digraph:
    return Digraph("abcd", F6_ARCS[which])


def published_table(name: str, mode: str = "single"):
    return parse_formization_csv((DATA / f"{name}.csv").read_text(), mode)


# Five small digraphs pairwise sharing some measure vectors.
SHARED = ["shared_d1", "shared_d2", "shared_d3", "shared_d4", "shared_d5"]
# Four digraphs sharing both degree and cycle vectors.
D6 = ["d6_i", "d6_ii", "d6_iii", "d6_iv"]

# Published walk listing of E2, transcribed row by row.
E2_PATHS = """
b g d a, b g d e f c, b g d, b g d e, b g d e f, b g
c f g d a, c f g d, c f g d e, c f, c f g
d a, d e f c, d e, d e f, d e f g, d e g
e f g d a, e g d a, e f c, e f g d, e g d, e e, e f, e f g, e g
f g d a, f c, f g d, f g d e, f g
g d a, g d e f c, g d, g d e, g d e f
h i, h i j
i j h, i j
j h, j h i
"""
E2_CYCLES = """
c f c
d e f g d, d e g d
e e, e f g d e, e g d e
f c f, f g d e f
g d e f g, g d e g
h i j h
i j h i
j h i j
"""


def split_listing(block: str) -> list[str]:
    return [w.strip() for line in block.strip().splitlines() for w in line.split(",")]


LABELS = "uvwxyz"


@st.composite
def digraphs(draw, min_vertices: int = 1, max_vertices: int = 6, loops: bool = True) -> Digraph:
    n = draw(st.integers(min_vertices, max_vertices))
    verts = list(LABELS[:n])
    pairs = [(t, h) for t in verts for h in verts if loops or t != h]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Digraph(verts, [p for p, keep in zip(pairs, chosen) if keep])


@st.composite
def digraph_and_relabeling(draw, max_vertices: int = 6):
    d = draw(digraphs(max_vertices=max_vertices))
    shuffled = draw(st.permutations(list(d.vertices)))
    # Fresh labels so the relabeled copy shares nothing with the original by name.
    rename = {v: f"n{shuffled.index(v)}" for v in d.vertices}
    order = draw(st.permutations([rename[v] for v in d.vertices]))
    return d, Digraph(order, [(rename[t], rename[h]) for t, h in d.arcs]), rename
