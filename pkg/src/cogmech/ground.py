"""Ground (cognition self) detection and the ground/non-ground partition.

A ground is a vertex set that every outside vertex is connected to
(underlyingness), that is connected to no outside vertex (primitiveness),
and whose members are all connected to and from some common non-empty set
of vertices (unifiedness).  Such a set is necessarily the unique sink
strongly connected component reachable from everywhere, which is how
:func:`find_ground` finds it in linear time.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .digraph import (
    Digraph,
    induced_subdigraph,
    is_cyclic_component,
    reachable_from,
    scc_condensation,
)
from .errors import DigraphError, NotAGroundError

FEATURES = ("underlyingness", "primitiveness", "unifiedness")


@dataclass(frozen=True)
class BaseFeatureReport:
    underlyingness: bool
    primitiveness: bool
    unifiedness: bool
    unifier: frozenset[str] = frozenset()

    @property
    def basalness(self) -> bool:
        return self.underlyingness and self.primitiveness

    @property
    def singleness(self) -> bool:
        return self.underlyingness and self.unifiedness

    @property
    def uniqueness(self) -> bool:
        return self.primitiveness and self.unifiedness

    @property
    def compositional_fundamentality(self) -> bool:
        return self.underlyingness and self.primitiveness and self.unifiedness

    def as_tuple(self) -> tuple[bool, bool, bool]:
        return (self.underlyingness, self.primitiveness, self.unifiedness)

    def failing(self) -> tuple[str, ...]:
        return tuple(name for name, ok in zip(FEATURES, self.as_tuple()) if not ok)


def _check_candidate(d: Digraph, candidate: Iterable[str]) -> frozenset[str]:
    s = frozenset(candidate)
    if not s:
        raise DigraphError("candidate ground must be non-empty")
    d.require(*sorted(s))
    return s


def base_characteristics(d: Digraph, candidate: Iterable[str]) -> BaseFeatureReport:
    """Evaluate the three base characteristics of ``candidate`` inside ``d``.

    Connectivity is taken in the whole digraph.  Unifiedness holds iff one
    vertex ``u`` is connected to and from every member; when it does, the
    cyclic strongly connected component holding the members is reported as
    the witness set ``unifier``.
    """
    s = _check_candidate(d, candidate)
    outside = [v for v in d.vertices if v not in s]

    underlying = all(s <= reachable_from(d, v) for v in outside)
    primitive = not any(h not in s for t, h in d.arcs if t in s)

    cond = scc_condensation(d)
    comps = {cond.component_of[v] for v in s}
    unifier: frozenset[str] = frozenset()
    if len(comps) == 1:
        comp = cond.components[comps.pop()]
        if is_cyclic_component(d, comp):
            unifier = comp
    return BaseFeatureReport(underlying, primitive, bool(unifier), unifier)


@dataclass(frozen=True)
class GroundPartition:
    """The ground of a digraph and the pieces derived from it.

    ``non_ground_net`` is induced on ``non_ground_vertices`` and may repeat
    ground arcs between reciprocal vertices.  ``outer_net`` has the same
    vertices but only the arcs outside the ground net, so ``ground_net`` and
    ``outer_net`` split the arc set of the host exactly.
    """

    host: Digraph
    ground: frozenset[str]
    reciprocal: frozenset[str]
    non_ground_vertices: frozenset[str]
    ground_net: Digraph
    non_ground_net: Digraph
    outer_net: Digraph

    def ordered(self, vertices: Iterable[str]) -> list[str]:
        keep = set(vertices)
        return [v for v in self.host.vertices if v in keep]

    def boundary_arcs(self) -> list[tuple[str, str]]:
        return [(t, h) for t, h in self.host.sorted_arcs() if t not in self.ground and h in self.ground]


def _build_partition(d: Digraph, ground: frozenset[str]) -> GroundPartition:
    reciprocal = frozenset(h for t, h in d.arcs if t not in ground and h in ground)
    non_ground = frozenset(v for v in d.vertices if v not in ground) | reciprocal
    ground_net = induced_subdigraph(d, ground)
    outer_net = Digraph(
        [v for v in d.vertices if v in non_ground],
        [a for a in d.sorted_arcs() if a[0] not in ground],
    )
    return GroundPartition(
        host=d,
        ground=ground,
        reciprocal=reciprocal,
        non_ground_vertices=non_ground,
        ground_net=ground_net,
        non_ground_net=induced_subdigraph(d, non_ground),
        outer_net=outer_net,
    )


def find_ground(d: Digraph) -> GroundPartition | None:
    """Return the ground partition of ``d``, or ``None`` if it has no ground."""
    if d.is_empty():
        return None
    cond = scc_condensation(d)
    sinks = cond.sinks()
    # With a finite condensation, a unique sink is reachable from every component.
    if len(sinks) != 1:
        return None
    ground = cond.components[sinks[0]]
    if not is_cyclic_component(d, ground):
        return None
    return _build_partition(d, ground)


def partition_from_candidate(d: Digraph, candidate: Iterable[str]) -> GroundPartition:
    """Build the partition for a candidate after checking it really is a ground."""
    s = _check_candidate(d, candidate)
    report = base_characteristics(d, s)
    if not report.compositional_fundamentality:
        failing = report.failing()
        raise NotAGroundError(f"candidate is not a ground: {', '.join(failing)} fails", failing)
    return _build_partition(d, s)
