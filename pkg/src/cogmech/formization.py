"""Formization tables, permutation-aware equivalence and label recovery.

A formization strips vertex labels and keeps counting measures: paths
between every ordered pair, cycles over each vertex, and out/in degree.
Two tables describe the same unlabeled structure when one simultaneous
row/column permutation maps the measures of one onto the other.  The
search partitions indices by cheap invariants (node measures, diagonal,
sorted row and column) and backtracks only inside those classes.
"""

from __future__ import annotations

import enum
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from .digraph import Digraph
from .enumeration import Limits, cycle_counts, path_counts
from .errors import ModeMismatchError, ResourceLimitError, TableSizeError

DEFAULT_MAX_SEARCH_NODES = 10**7


class FormizationMode(str, enum.Enum):
    SINGLE_LEVELED = "single"  # cycle counts + path counts
    MIXED_LEVELED = "mixed"  # out/in degrees + path counts

    @classmethod
    def parse(cls, value: str | FormizationMode) -> FormizationMode:
        if isinstance(value, cls):
            return value
        aliases = {"single": cls.SINGLE_LEVELED, "single_leveled": cls.SINGLE_LEVELED,
                   "mixed": cls.MIXED_LEVELED, "mixed_leveled": cls.MIXED_LEVELED}
        try:
            return aliases[value.lower().replace("-", "_")]
        except KeyError:
            raise ValueError(f"unknown formization mode {value!r}") from None


Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, eq=False)
class FormizationTable:
    """All four measures for ``n`` unlabeled vertices, indexed o1..oN.

    ``labels`` records which vertex each index came from when the table was
    produced by :func:`formize`; it is ``None`` for transcribed tables and is
    ignored by equality.
    """

    path_matrix: Matrix
    cycle_vector: tuple[int, ...]
    out_vector: tuple[int, ...]
    in_vector: tuple[int, ...]
    mode: FormizationMode = FormizationMode.SINGLE_LEVELED
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        n = len(self.path_matrix)
        if any(len(row) != n for row in self.path_matrix):
            raise TableSizeError("path matrix must be square")
        for name in ("cycle_vector", "out_vector", "in_vector"):
            if len(getattr(self, name)) != n:
                raise TableSizeError(f"{name} has length {len(getattr(self, name))}, expected {n}")
        if self.labels is not None and len(self.labels) != n:
            raise TableSizeError("labels must match the table size")

    @classmethod
    def from_lists(
        cls,
        path_matrix: Sequence[Sequence[int]],
        cycle_vector: Sequence[int],
        out_vector: Sequence[int],
        in_vector: Sequence[int],
        mode: FormizationMode | str = FormizationMode.SINGLE_LEVELED,
        labels: Sequence[str] | None = None,
    ) -> FormizationTable:
        return cls(
            tuple(tuple(int(x) for x in row) for row in path_matrix),
            tuple(int(x) for x in cycle_vector),
            tuple(int(x) for x in out_vector),
            tuple(int(x) for x in in_vector),
            FormizationMode.parse(mode),
            tuple(labels) if labels is not None else None,
        )

    @property
    def n(self) -> int:
        return len(self.path_matrix)

    def with_mode(self, mode: FormizationMode | str) -> FormizationTable:
        return FormizationTable(self.path_matrix, self.cycle_vector, self.out_vector,
                                self.in_vector, FormizationMode.parse(mode), self.labels)

    def node_measures(self, mode: FormizationMode | None = None) -> list[tuple[int, ...]]:
        mode = mode or self.mode
        if mode is FormizationMode.SINGLE_LEVELED:
            return [(c,) for c in self.cycle_vector]
        return list(zip(self.out_vector, self.in_vector))

    def permuted(self, order: Sequence[int]) -> FormizationTable:
        """Table whose index k is this table's index ``order[k]``."""
        p = self.path_matrix
        return FormizationTable(
            tuple(tuple(p[i][j] for j in order) for i in order),
            tuple(self.cycle_vector[i] for i in order),
            tuple(self.out_vector[i] for i in order),
            tuple(self.in_vector[i] for i in order),
            self.mode,
            tuple(self.labels[i] for i in order) if self.labels is not None else None,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormizationTable):
            return NotImplemented
        return (
            self.path_matrix == other.path_matrix
            and self.cycle_vector == other.cycle_vector
            and self.out_vector == other.out_vector
            and self.in_vector == other.in_vector
            and self.mode == other.mode
        )

    def __hash__(self) -> int:
        return hash((self.path_matrix, self.cycle_vector, self.out_vector, self.in_vector, self.mode))


def _presentation_order(t: FormizationTable) -> list[int]:
    cols = list(zip(*t.path_matrix)) if t.n else []

    def key(i: int) -> tuple:
        return (
            t.cycle_vector[i],
            t.out_vector[i],
            t.in_vector[i],
            tuple(sorted(t.path_matrix[i])),
            tuple(sorted(cols[i])),
        )

    # reverse=True keeps equal keys in input order
    return sorted(range(t.n), key=key, reverse=True)


def formize(
    d: Digraph,
    mode: FormizationMode | str = FormizationMode.SINGLE_LEVELED,
    limits: Limits | None = None,
    *,
    presentation_order: bool = True,
) -> FormizationTable:
    """Formization table of ``d``.

    Loops count once on the diagonal of the path matrix, once in the cycle
    count and once in each degree.  By default indices are reordered by
    descending invariants; pass ``presentation_order=False`` to keep host
    vertex order.
    """
    paths = path_counts(d, limits)
    cycles = cycle_counts(d, limits)
    verts = d.vertices
    table = FormizationTable(
        tuple(tuple(paths[x][y] for y in verts) for x in verts),
        tuple(cycles[x] for x in verts),
        tuple(d.out_degree(x) for x in verts),
        tuple(d.in_degree(x) for x in verts),
        FormizationMode.parse(mode),
        verts,
    )
    return table.permuted(_presentation_order(table)) if presentation_order else table


def _signatures(t: FormizationTable, mode: FormizationMode | None) -> list[tuple]:
    """Per-index invariants; ``mode=None`` means all node measures."""
    cols = list(zip(*t.path_matrix)) if t.n else []
    if mode is None:
        nodes = list(zip(t.cycle_vector, t.out_vector, t.in_vector))
    else:
        nodes = t.node_measures(mode)
    return [
        (nodes[i], t.path_matrix[i][i], tuple(sorted(t.path_matrix[i])), tuple(sorted(cols[i])))
        for i in range(t.n)
    ]


def _matchings(
    t1: FormizationTable, t2: FormizationTable, mode: FormizationMode | None, max_nodes: int | None
) -> Iterator[tuple[int, ...]]:
    """Yield every ``perm`` with t1 index i matched to t2 index perm[i], lexicographically.

    ``mode=None`` matches every measure instead of one mode's payload.
    """
    n = t1.n
    if n != t2.n:
        return
    s1, s2 = _signatures(t1, mode), _signatures(t2, mode)
    if sorted(s1) != sorted(s2):
        return
    candidates = [[j for j in range(n) if s2[j] == s1[i]] for i in range(n)]
    p1, p2 = t1.path_matrix, t2.path_matrix
    perm = [-1] * n
    used = [False] * n
    visited = 0

    def extend(i: int) -> Iterator[tuple[int, ...]]:
        nonlocal visited
        if i == n:
            yield tuple(perm)
            return
        for j in candidates[i]:
            if used[j]:
                continue
            visited += 1
            if max_nodes is not None and visited > max_nodes:
                raise ResourceLimitError(f"permutation search exceeded {max_nodes} nodes")
            if all(p1[i][k] == p2[j][perm[k]] and p1[k][i] == p2[perm[k]][j] for k in range(i)):
                perm[i] = j
                used[j] = True
                yield from extend(i + 1)
                used[j] = False
                perm[i] = -1

    yield from extend(0)


@dataclass(frozen=True)
class Equivalence:
    equivalent: bool
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.equivalent


def _resolve_mode(t1: FormizationTable, t2: FormizationTable, mode) -> FormizationMode:
    if mode is not None:
        return FormizationMode.parse(mode)
    if t1.mode is not t2.mode:
        raise ModeMismatchError(f"tables use different modes: {t1.mode.value} vs {t2.mode.value}")
    return t1.mode


def formization_equivalent(
    t1: FormizationTable,
    t2: FormizationTable,
    mode: FormizationMode | str | None = None,
    *,
    max_nodes: int | None = DEFAULT_MAX_SEARCH_NODES,
) -> Equivalence:
    """Whether a simultaneous permutation maps ``t1``'s payload onto ``t2``'s.

    The payload is the path matrix plus cycle counts (single-leveled) or
    out/in degrees (mixed-leveled).  ``mode`` overrides the tables' own mode
    tags; without it the tags must agree.  The witness maps index i of
    ``t1`` to index ``witness[i]`` of ``t2`` and is the lexicographically
    least such map.
    """
    m = _resolve_mode(t1, t2, mode)
    for perm in _matchings(t1, t2, m, max_nodes):
        return Equivalence(True, perm)
    return Equivalence(False, None)


@dataclass(frozen=True)
class LabelAssignment:
    """Bijection from table indices o1..oN to vertices; ``labels[k]`` names o(k+1)."""

    labels: tuple[str, ...]

    def mapping(self) -> dict[str, str]:
        return {f"o{k + 1}": v for k, v in enumerate(self.labels)}

    def __str__(self) -> str:
        return ", ".join(f"{k}={v}" for k, v in self.mapping().items())


def recover_labels(
    t: FormizationTable,
    reference: Digraph,
    limits: Limits | None = None,
    *,
    max_nodes: int | None = DEFAULT_MAX_SEARCH_NODES,
) -> list[LabelAssignment]:
    """Every labeling of ``t``'s indices by ``reference``'s vertices that reproduces ``t``.

    All four measures must match, whatever ``t.mode`` says.  More than one
    result means the reference digraph has symmetries the measures cannot
    tell apart.
    """
    if t.n != len(reference):
        raise TableSizeError(f"table has {t.n} vertices, reference digraph has {len(reference)}")
    ref = formize(reference, t.mode, limits, presentation_order=False)
    verts = reference.vertices
    return [
        LabelAssignment(tuple(verts[j] for j in perm))
        for perm in _matchings(t, ref, None, max_nodes)
    ]
