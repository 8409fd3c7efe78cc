"""Characterization: equipping vertices with units and/or uniters.

Symbolistic mode uses units only, connectionistic uses uniters only, and
hybridistic takes every unit and then greedily adds uniters until the
whole digraph is covered.  The standard characterization of a cognition
mechanism is symbolistic on its ground and connectionistic on the rest.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .digraph import Digraph, union_all
from .enumeration import Limits, unit, uniter
from .errors import NoGroundError, UncoverableError
from .ground import GroundPartition, find_ground


class CharacterizationMode(str, enum.Enum):
    SYMBOLISTIC = "symbolistic"
    CONNECTIONISTIC = "connectionistic"
    HYBRIDISTIC = "hybridistic"

    @classmethod
    def parse(cls, value: str | CharacterizationMode) -> CharacterizationMode:
        if isinstance(value, cls):
            return value
        for mode in cls:
            if value.lower() in (mode.value, mode.value[:3]):
                return mode
        raise ValueError(f"unknown characterization mode {value!r}")


Pair = tuple[str, str]


@dataclass(frozen=True)
class CharacterizationReport:
    """Units and uniters chosen for ``host`` and how much of it they cover.

    Only non-empty nets are stored; a vertex or pair missing from ``units``
    or ``uniters`` has an empty one.
    """

    host: Digraph
    mode: CharacterizationMode
    units: dict[str, Digraph] = field(default_factory=dict)
    uniters: dict[Pair, Digraph] = field(default_factory=dict)
    completion: tuple[Pair, ...] = ()

    @property
    def covered(self) -> Digraph:
        return union_all([*self.units.values(), *self.uniters.values()])

    @property
    def total(self) -> bool:
        return self.covered == self.host

    def uncovered_vertices(self) -> list[str]:
        covered = self.covered
        return [v for v in self.host.vertices if v not in covered]

    def uncovered_arcs(self) -> list[Pair]:
        covered = self.covered.arcs
        return [a for a in self.host.sorted_arcs() if a not in covered]


def _units(d: Digraph, limits: Limits | None) -> dict[str, Digraph]:
    nets = {x: unit(d, x, limits) for x in d.vertices}
    return {x: net for x, net in nets.items() if not net.is_empty()}


def _all_uniters(d: Digraph, limits: Limits | None) -> dict[Pair, Digraph]:
    # Diagonal pairs only matter for loops: the loop walk is the one path from x to x.
    nets = {(x, y): uniter(d, x, y, limits) for x in d.vertices for y in d.vertices}
    return {pair: net for pair, net in nets.items() if not net.is_empty()}


def _size(net: Digraph) -> int:
    return len(net) + len(net.arcs)


def _greedy_completion(
    d: Digraph, units: dict[str, Digraph], limits: Limits | None
) -> tuple[list[Pair], dict[Pair, Digraph], list[str]]:
    """Greedy cover; returns chosen pairs, their nets and vertices left uncovered."""
    covered_v = {v for net in units.values() for v in net.vertices}
    covered_a = {a for net in units.values() for a in net.arcs}
    candidates = {p: net for p, net in _all_uniters(d, limits).items() if p[0] != p[1]}
    chosen: list[Pair] = []
    nets: dict[Pair, Digraph] = {}

    while len(covered_v) < len(d) or len(covered_a) < len(d.arcs):
        best = None
        best_key = None
        for pair, net in candidates.items():
            gain = sum(v not in covered_v for v in net.vertices) + len(net.arcs - covered_a)
            if gain == 0:
                continue
            # most new coverage, then the smallest uniter, then label order
            key = (-gain, _size(net), pair)
            if best_key is None or key < best_key:
                best, best_key = pair, key
        if best is None:
            break
        net = candidates.pop(best)
        chosen.append(best)
        nets[best] = net
        covered_v.update(net.vertices)
        covered_a.update(net.arcs)

    uncovered = [v for v in d.vertices if v not in covered_v]
    return chosen, nets, uncovered


def hybrid_completion(d: Digraph, limits: Limits | None = None) -> list[Pair]:
    """Uniter pairs that, added to all units, cover ``d`` completely.

    Only vertices without any arc can stay uncovered: every non-loop arc is a
    path and every loop is a cycle.  Those vertices raise
    :class:`UncoverableError`.
    """
    chosen, _, uncovered = _greedy_completion(d, _units(d, limits), limits)
    if uncovered:
        raise UncoverableError(
            f"vertices on no path and no cycle: {', '.join(uncovered)}", tuple(uncovered)
        )
    return chosen


def characterize(
    d: Digraph, mode: CharacterizationMode | str, limits: Limits | None = None
) -> CharacterizationReport:
    mode = CharacterizationMode.parse(mode)
    if mode is CharacterizationMode.SYMBOLISTIC:
        return CharacterizationReport(d, mode, units=_units(d, limits))
    if mode is CharacterizationMode.CONNECTIONISTIC:
        return CharacterizationReport(d, mode, uniters=_all_uniters(d, limits))
    units = _units(d, limits)
    chosen, nets, _ = _greedy_completion(d, units, limits)
    return CharacterizationReport(d, mode, units=units, uniters=nets, completion=tuple(chosen))


@dataclass(frozen=True)
class StandardCharacterization:
    """Self characterized symbolistically, non-self connectionistically."""

    partition: GroundPartition
    self_report: CharacterizationReport
    non_self_report: CharacterizationReport

    @property
    def units(self) -> dict[str, Digraph]:
        return self.self_report.units

    @property
    def uniters(self) -> dict[Pair, Digraph]:
        return self.non_self_report.uniters


def standard_cognition_characterization(
    d: Digraph, limits: Limits | None = None
) -> StandardCharacterization:
    """Units on the ground net and uniters on the non-ground side.

    Uniters are computed on :attr:`GroundPartition.outer_net`, i.e. without
    arcs that already belong to the ground net.
    """
    partition = find_ground(d)
    if partition is None:
        raise NoGroundError("digraph has no ground")
    return StandardCharacterization(
        partition,
        characterize(partition.ground_net, CharacterizationMode.SYMBOLISTIC, limits),
        characterize(partition.outer_net, CharacterizationMode.CONNECTIONISTIC, limits),
    )
