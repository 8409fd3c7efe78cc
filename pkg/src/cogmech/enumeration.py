"""Exhaustive enumeration of paths and cycles, units, uniters and listings.

Enumeration is exponential in the worst case.  Every entry point takes an
optional :class:`Limits`; exceeding it raises :class:`ResourceLimitError`
instead of running away.  Results are sorted by label sequence so output
never depends on traversal order.
"""

from __future__ import annotations

import itertools
import os
from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

from .digraph import Digraph
from .errors import DigraphError, ResourceLimitError
from .walks import Walk, carrying_net

DEFAULT_MAX_WALKS = 10**6
DEFAULT_MAX_VERTICES = 15

ENV_MAX_WALKS = "COGMECH_MAX_WALKS"
ENV_MAX_VERTICES = "COGMECH_MAX_VERTICES"


@dataclass(frozen=True)
class Limits:
    """Guards for exhaustive enumeration; ``None`` disables a guard."""

    max_walks: int | None = DEFAULT_MAX_WALKS
    max_vertices: int | None = DEFAULT_MAX_VERTICES

    @classmethod
    def from_env(cls, environ: dict[str, str] | None = None) -> Limits:
        env = os.environ if environ is None else environ
        kwargs = {}
        for name, key in (("max_walks", ENV_MAX_WALKS), ("max_vertices", ENV_MAX_VERTICES)):
            raw = env.get(key)
            if raw:
                value = int(raw)
                kwargs[name] = None if value <= 0 else value
        return cls(**kwargs)

    def check_size(self, d: Digraph) -> None:
        if self.max_vertices is not None and len(d) > self.max_vertices:
            raise ResourceLimitError(
                f"digraph has {len(d)} vertices, above the enumeration guard of {self.max_vertices}"
            )


class _Budget:
    __slots__ = ("remaining", "limit")

    def __init__(self, limits: Limits) -> None:
        self.limit = limits.max_walks
        self.remaining = limits.max_walks

    def spend(self) -> None:
        if self.remaining is None:
            return
        self.remaining -= 1
        if self.remaining < 0:
            raise ResourceLimitError(f"enumeration exceeded {self.limit} walks")


def _prepare(d: Digraph, limits: Limits | None, *labels: str) -> _Budget:
    d.require(*labels)
    limits = limits or Limits()
    limits.check_size(d)
    return _Budget(limits)


def _reaching(d: Digraph, y: str) -> set[str]:
    """Vertices with a walk to ``y`` (``y`` included)."""
    seen = {y}
    stack = [y]
    while stack:
        v = stack.pop()
        for u in d.predecessors(v):
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen


def _simple_extensions(
    d: Digraph, start: str, budget: _Budget, allowed: set[str] | None = None
) -> Iterator[tuple[str, ...]]:
    """Every path (length >= 2) beginning at ``start``, in depth-first order.

    ``allowed`` restricts which vertices may be entered after ``start``.
    """
    path = [start]
    on_path = {start}
    iters = [iter(d.successors(start))]
    while iters:
        for w in iters[-1]:
            if w in on_path or (allowed is not None and w not in allowed):
                continue
            path.append(w)
            on_path.add(w)
            budget.spend()
            yield tuple(path)
            iters.append(iter(d.successors(w)))
            break
        else:
            iters.pop()
            on_path.discard(path.pop())


def _cycle_sequences(d: Digraph, x: str, budget: _Budget) -> Iterator[tuple[str, ...]]:
    if d.has_loop(x):
        budget.spend()
        yield (x, x)
    back = _reaching(d, x)
    for seq in _simple_extensions(d, x, budget, allowed=back):
        if d.has_arc(seq[-1], x):
            budget.spend()
            yield seq + (x,)


def all_paths(d: Digraph, x: str, y: str, limits: Limits | None = None) -> list[Walk]:
    """All paths from ``x`` to ``y``.

    For ``x == y`` the result is the loop walk ``[x, x]`` when ``(x, x)`` is an
    arc and empty otherwise, which is how the published tables count paths on
    the diagonal.
    """
    budget = _prepare(d, limits, x, y)
    if x == y:
        return [Walk(d, (x, x))] if d.has_loop(x) else []
    allowed = _reaching(d, y)
    if x not in allowed:
        return []
    seqs = [s for s in _simple_extensions(d, x, budget, allowed) if s[-1] == y]
    return [Walk(d, s) for s in sorted(seqs)]


def all_cycles(d: Digraph, x: str, limits: Limits | None = None) -> list[Walk]:
    """All cycles over ``x`` starting and ending there, the loop walk included."""
    budget = _prepare(d, limits, x)
    return [Walk(d, s) for s in sorted(_cycle_sequences(d, x, budget))]


def path_counts(d: Digraph, limits: Limits | None = None) -> dict[str, Counter[str]]:
    """``counts[x][y]`` = number of paths from x to y, diagonal by the loop rule."""
    budget = _prepare(d, limits)
    counts: dict[str, Counter[str]] = {}
    for x in d.vertices:
        c: Counter[str] = Counter(seq[-1] for seq in _simple_extensions(d, x, budget))
        if d.has_loop(x):
            c[x] = 1
        counts[x] = c
    return counts


def cycle_counts(d: Digraph, limits: Limits | None = None) -> dict[str, int]:
    budget = _prepare(d, limits)
    return {x: sum(1 for _ in _cycle_sequences(d, x, budget)) for x in d.vertices}


def _net_in_host_order(d: Digraph, walks: Iterable[Walk]) -> Digraph:
    verts: set[str] = set()
    arcs: set[tuple[str, str]] = set()
    for w in walks:
        verts.update(w.seq)
        arcs.update(w.arcs())
    return Digraph(
        [v for v in d.vertices if v in verts],
        [a for a in d.sorted_arcs() if a in arcs],
    )


def unit(d: Digraph, x: str, limits: Limits | None = None) -> Digraph:
    """Union of the carrying nets of every cycle over ``x`` (empty if none)."""
    return _net_in_host_order(d, all_cycles(d, x, limits))


def uniter(d: Digraph, x: str, y: str, limits: Limits | None = None) -> Digraph:
    """Union of the carrying nets of every path from ``x`` to ``y``.

    ``x == y`` is accepted and yields the loop net of ``x`` (or empty), in
    line with the diagonal convention of :func:`all_paths`.
    """
    return _net_in_host_order(d, all_paths(d, x, y, limits))


@dataclass(frozen=True)
class WalkListing:
    """Paths grouped by initial vertex and cycles grouped by start vertex.

    Loop walks are listed in both sections.  Groups follow host vertex order
    and hold only vertices with at least one walk.
    """

    host: Digraph
    paths: dict[str, list[Walk]] = field(default_factory=dict)
    cycles: dict[str, list[Walk]] = field(default_factory=dict)

    def all_paths(self) -> list[Walk]:
        return list(itertools.chain.from_iterable(self.paths.values()))

    def all_cycles(self) -> list[Walk]:
        return list(itertools.chain.from_iterable(self.cycles.values()))

    @property
    def path_count(self) -> int:
        return sum(len(ws) for ws in self.paths.values())

    @property
    def cycle_count(self) -> int:
        return sum(len(ws) for ws in self.cycles.values())


def full_listing(d: Digraph, limits: Limits | None = None) -> WalkListing:
    budget = _prepare(d, limits)
    paths: dict[str, list[Walk]] = {}
    cycles: dict[str, list[Walk]] = {}
    for x in d.vertices:
        seqs = list(_simple_extensions(d, x, budget))
        if d.has_loop(x):
            seqs.append((x, x))
        if seqs:
            paths[x] = [Walk(d, s) for s in sorted(seqs)]
        cyc = sorted(_cycle_sequences(d, x, budget))
        if cyc:
            cycles[x] = [Walk(d, s) for s in cyc]
    return WalkListing(d, paths, cycles)


def diversal_check(walks: Iterable[Walk]) -> list[tuple[Walk, Walk]]:
    """Pairs of distinct walks whose carrying nets coincide."""
    walks = sorted(set(walks))
    if walks:
        host = walks[0].host
        if any(w.host is not host and w.host != host for w in walks):
            raise DigraphError("walks belong to different host digraphs")
    groups: dict[Digraph, list[Walk]] = {}
    for w in walks:
        groups.setdefault(carrying_net(w), []).append(w)
    pairs = [pair for group in groups.values() for pair in itertools.combinations(group, 2)]
    return sorted(pairs, key=lambda p: (p[0].seq, p[1].seq))
