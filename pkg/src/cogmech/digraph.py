"""Immutable digraphs, subgraph algebra and connectivity predicates.

A :class:`Digraph` keeps its vertices in construction order; that order is
used everywhere output has to be deterministic.  Equality, however, is set
equality on vertices and arcs, so two digraphs built from the same sets in a
different order compare equal.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from .errors import DigraphError

Arc = tuple[str, str]


def _check_label(label: object) -> str:
    if not isinstance(label, str) or not label or any(ch.isspace() for ch in label):
        raise DigraphError(f"invalid vertex label {label!r}: must be a non-empty token without whitespace")
    return label


class Digraph:
    """A finite digraph with loops allowed and no parallel arcs."""

    __slots__ = ("_vertices", "_arcs", "_index", "_succ", "_pred")

    def __init__(self, vertices: Iterable[str] = (), arcs: Iterable[tuple[str, str]] = ()) -> None:
        verts = tuple(_check_label(v) for v in vertices)
        index: dict[str, int] = {}
        for v in verts:
            if v in index:
                raise DigraphError(f"duplicate vertex {v!r}")
            index[v] = len(index)

        arc_set: set[Arc] = set()
        for arc in arcs:
            tail, head = arc
            for end in (tail, head):
                if end not in index:
                    raise DigraphError(f"arc ({tail},{head}) has unknown endpoint {end!r}")
            if (tail, head) in arc_set:
                raise DigraphError(f"duplicate arc ({tail},{head})")
            arc_set.add((tail, head))

        succ: dict[str, list[str]] = {v: [] for v in verts}
        pred: dict[str, list[str]] = {v: [] for v in verts}
        for tail, head in sorted(arc_set, key=lambda a: (index[a[0]], index[a[1]])):
            succ[tail].append(head)
            pred[head].append(tail)

        self._vertices = verts
        self._arcs = frozenset(arc_set)
        self._index = index
        self._succ = {v: tuple(ws) for v, ws in succ.items()}
        self._pred = {v: tuple(ws) for v, ws in pred.items()}

    @classmethod
    def empty(cls) -> Digraph:
        return cls((), ())

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def arcs(self) -> frozenset[Arc]:
        return self._arcs

    def sorted_arcs(self) -> list[Arc]:
        """Arcs ordered by (tail position, head position)."""
        return [(t, h) for t in self._vertices for h in self._succ[t]]

    def position(self, v: str) -> int:
        return self._index[v]

    def successors(self, v: str) -> tuple[str, ...]:
        """Heads of arcs leaving ``v``, in vertex order (includes ``v`` for a loop)."""
        self.require(v)
        return self._succ[v]

    def predecessors(self, v: str) -> tuple[str, ...]:
        self.require(v)
        return self._pred[v]

    def out_degree(self, v: str) -> int:
        return len(self.successors(v))

    def in_degree(self, v: str) -> int:
        return len(self.predecessors(v))

    def has_arc(self, tail: str, head: str) -> bool:
        return (tail, head) in self._arcs

    def has_loop(self, v: str) -> bool:
        return (v, v) in self._arcs

    def require(self, *labels: str) -> None:
        for v in labels:
            if v not in self._index:
                raise DigraphError(f"unknown vertex {v!r}")

    def is_empty(self) -> bool:
        return not self._vertices

    def __contains__(self, v: object) -> bool:
        return v in self._index

    def __len__(self) -> int:
        return len(self._vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._arcs == other._arcs and self._index.keys() == other._index.keys()

    def __hash__(self) -> int:
        return hash((frozenset(self._vertices), self._arcs))

    def __repr__(self) -> str:
        arcs = ", ".join(f"({t},{h})" for t, h in self.sorted_arcs())
        return f"Digraph({{{', '.join(self._vertices)}}}; {{{arcs}}})"


def build_digraph(vertices: Iterable[str], arcs: Iterable[tuple[str, str]]) -> Digraph:
    """Build a digraph, rejecting duplicates and arcs with unknown endpoints."""
    return Digraph(vertices, arcs)


def induced_subdigraph(d: Digraph, subset: Iterable[str]) -> Digraph:
    """Sub-digraph on ``subset`` with every arc of ``d`` between its members."""
    keep = set(subset)
    d.require(*sorted(keep))
    verts = [v for v in d.vertices if v in keep]
    return Digraph(verts, [(t, h) for t, h in d.sorted_arcs() if t in keep and h in keep])


def union_digraphs(h: Digraph, l: Digraph) -> Digraph:  # noqa: E741
    verts = list(h.vertices) + [v for v in l.vertices if v not in h]
    arcs = h.sorted_arcs() + [a for a in l.sorted_arcs() if a not in h.arcs]
    return Digraph(verts, arcs)


def union_all(nets: Iterable[Digraph]) -> Digraph:
    result = Digraph.empty()
    for net in nets:
        result = union_digraphs(result, net)
    return result


def is_subdigraph(h: Digraph, d: Digraph) -> bool:
    # A Digraph cannot hold an arc with a missing endpoint, so only containment is left.
    return all(v in d for v in h.vertices) and h.arcs <= d.arcs


def reachable_from(d: Digraph, x: str) -> set[str]:
    """Vertices reachable from ``x`` by a walk of length at least one."""
    d.require(x)
    seen: set[str] = set()
    stack = list(d.successors(x))
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        stack.extend(w for w in d.successors(v) if w not in seen)
    return seen


def is_connected(d: Digraph, x: str, y: str) -> bool:
    """True iff a walk of length >= 1 runs from ``x`` to ``y``.

    ``is_connected(d, v, v)`` therefore needs a loop or a cycle through ``v``.
    """
    d.require(x, y)
    return y in reachable_from(d, x)


@dataclass(frozen=True)
class Condensation:
    """Strongly connected components and the arcs between them.

    ``components`` are ordered by the position of their earliest vertex;
    ``arcs`` are pairs of component indices.
    """

    components: tuple[frozenset[str], ...]
    component_of: Mapping[str, int]
    arcs: frozenset[tuple[int, int]]

    def sinks(self) -> list[int]:
        has_out = {i for i, _ in self.arcs}
        return [i for i in range(len(self.components)) if i not in has_out]


def scc_condensation(d: Digraph) -> Condensation:
    """Tarjan's algorithm, iterative so deep chains do not hit the recursion limit."""
    index: dict[str, int] = {}
    low: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    found: list[list[str]] = []
    counter = 0

    for root in d.vertices:
        if root in index:
            continue
        work: list[tuple[str, int]] = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack.add(v)
            succ = d.successors(v)
            recursed = False
            while i < len(succ):
                w = succ[i]
                i += 1
                if w not in index:
                    work.append((v, i))
                    work.append((w, 0))
                    recursed = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if recursed:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                found.append(comp)
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])

    found.sort(key=lambda comp: min(d.position(v) for v in comp))
    components = tuple(frozenset(c) for c in found)
    component_of = {v: i for i, comp in enumerate(components) for v in comp}
    arcs = frozenset(
        (component_of[t], component_of[h]) for t, h in d.arcs if component_of[t] != component_of[h]
    )
    return Condensation(components, component_of, arcs)


def is_cyclic_component(d: Digraph, comp: Iterable[str]) -> bool:
    """Whether every vertex of an SCC lies on a cycle (size > 1 or a loop)."""
    members = list(comp)
    return len(members) > 1 or (len(members) == 1 and d.has_loop(members[0]))


@dataclass(frozen=True)
class StructureFlags:
    strongly_connected: bool
    strongly_cyclic: bool


def structure_flags(d: Digraph) -> StructureFlags:
    cond = scc_condensation(d)
    cyclic = all(is_cyclic_component(d, comp) for comp in cond.components)
    connected = len(cond.components) <= 1 and cyclic
    return StructureFlags(strongly_connected=connected, strongly_cyclic=cyclic)


class Status(str, enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    BY_CONSTRUCTION = "by-construction"
    DEFERRED = "deferred"


@dataclass(frozen=True)
class CharacteristicCheck:
    number: int
    name: str
    status: Status
    witnesses: tuple[str, ...] = ()


CHARACTERISTIC_NAMES = {
    1: "individual",
    2: "confined",
    3: "existent vicinity",
    4: "non-isolated",
    5: "non-multial",
    6: "covering vicinities",
    7: "covering assembly",
    8: "uniformly dispersive",
    9: "two-ended",
    10: "universal",
    11: "accordant walks",
    12: "diversal",
    13: "steady",
    14: "exhaustive",
}


@dataclass(frozen=True)
class MechanismValidationReport:
    checks: tuple[CharacteristicCheck, ...] = field(default_factory=tuple)

    def __getitem__(self, number: int) -> CharacteristicCheck:
        return self.checks[number - 1]

    @property
    def ok(self) -> bool:
        return all(c.status is not Status.FAILS for c in self.checks)

    def failures(self) -> list[CharacteristicCheck]:
        return [c for c in self.checks if c.status is Status.FAILS]


def validate_mechanism(d: Digraph) -> MechanismValidationReport:
    """Report which mechanism characteristics hold for ``d``.

    Only #3 (every vertex has an out-arc) and #4 (every vertex touches an arc
    to or from a distinct vertex) can fail under this data model.  Walk-level
    characteristics #11-#14 are marked deferred: they are properties of the
    walks produced later, not of the digraph.
    """
    no_out = tuple(v for v in d.vertices if not d.successors(v))
    isolated = tuple(
        v
        for v in d.vertices
        if not any(w != v for w in d.successors(v)) and not any(w != v for w in d.predecessors(v))
    )
    checks = []
    for number, name in CHARACTERISTIC_NAMES.items():
        if number == 3:
            checks.append(CharacteristicCheck(3, name, Status.FAILS if no_out else Status.HOLDS, no_out))
        elif number == 4:
            checks.append(CharacteristicCheck(4, name, Status.FAILS if isolated else Status.HOLDS, isolated))
        elif number >= 11:
            checks.append(CharacteristicCheck(number, name, Status.DEFERRED))
        else:
            checks.append(CharacteristicCheck(number, name, Status.BY_CONSTRUCTION))
    return MechanismValidationReport(tuple(checks))
