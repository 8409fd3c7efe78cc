"""Walks over a host digraph, their classification, joining and carrying nets."""

from __future__ import annotations

import enum
from collections.abc import Sequence
from dataclasses import dataclass

from .digraph import Digraph
from .errors import DigraphError, WalkError


class Closure(str, enum.Enum):
    CIRCULATION = "circulation"  # closed walk
    DELIVERATION = "deliveration"  # open walk


@dataclass(frozen=True)
class WalkKind:
    closure: Closure
    simple: bool

    @property
    def is_cycle(self) -> bool:
        return self.simple and self.closure is Closure.CIRCULATION

    @property
    def is_path(self) -> bool:
        return self.simple and self.closure is Closure.DELIVERATION


@dataclass(frozen=True, eq=False)
class Walk:
    """A vertex sequence of length >= 2 whose consecutive pairs are arcs of ``host``.

    Build through :func:`make_walk`; the constructor itself does not validate.
    Two walks are equal when their sequences match and their hosts are equal.
    """

    host: Digraph
    seq: tuple[str, ...]

    @property
    def initial(self) -> str:
        return self.seq[0]

    @property
    def terminal(self) -> str:
        return self.seq[-1]

    def arcs(self) -> list[tuple[str, str]]:
        return list(zip(self.seq, self.seq[1:]))

    def __len__(self) -> int:
        return len(self.seq)

    def __str__(self) -> str:
        return " ".join(self.seq)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Walk):
            return NotImplemented
        return self.seq == other.seq and (self.host is other.host or self.host == other.host)

    def __hash__(self) -> int:
        return hash(self.seq)

    def __lt__(self, other: Walk) -> bool:
        return self.seq < other.seq


def make_walk(d: Digraph, seq: Sequence[str]) -> Walk:
    seq = tuple(seq)
    if len(seq) < 2:
        raise WalkError(f"a walk needs at least two vertices, got {len(seq)}")
    for v in seq:
        if v not in d:
            raise DigraphError(f"unknown vertex {v!r}")
    for i, (t, h) in enumerate(zip(seq, seq[1:])):
        if not d.has_arc(t, h):
            raise WalkError(f"({t},{h}) at position {i} is not an arc", index=i)
    return Walk(d, seq)


def classify_walk(w: Walk) -> WalkKind:
    seq = w.seq
    if seq[0] == seq[-1]:
        body = seq[:-1]
        return WalkKind(Closure.CIRCULATION, len(set(body)) == len(body))
    return WalkKind(Closure.DELIVERATION, len(set(seq)) == len(seq))


def join_walks(first: Walk, second: Walk) -> Walk:
    """Succession: ``first`` followed by ``second`` sharing the joint vertex once."""
    if first.host is not second.host and first.host != second.host:
        raise WalkError("walks belong to different host digraphs")
    if first.terminal != second.initial:
        raise WalkError(f"cannot join: {first.terminal!r} != {second.initial!r}")
    return Walk(first.host, first.seq + second.seq[1:])


def carrying_net(w: Walk) -> Digraph:
    """Traversed sub-digraph: the distinct vertices and arcs the walk uses."""
    verts = list(dict.fromkeys(w.seq))
    arcs = list(dict.fromkeys(w.arcs()))
    return Digraph(verts, arcs)


def steady_instances(concept: Digraph, init: str, term: str, limits=None) -> list[Walk]:
    """Simple walks from ``init`` to ``term`` that traverse all of ``concept``.

    An empty result means the concept is not steady for this pair of ends.
    """
    from .enumeration import all_cycles, all_paths

    concept.require(init, term)
    # A simple walk uses at most |V| arcs, so larger concepts cannot be carried.
    if len(concept.arcs) > len(concept):
        return []
    walks = all_cycles(concept, init, limits) if init == term else all_paths(concept, init, term, limits)
    return [w for w in walks if carrying_net(w) == concept]
