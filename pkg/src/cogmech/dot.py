"""Graphviz DOT output with the ground/non-ground color conventions.

* no partition requested: everything black
* :data:`NO_GROUND`: everything brown
* a :class:`GroundPartition`: ground red, non-ground blue, ground-reciprocal
  vertices magenta; arcs take the color of the net that owns them

Removed arcs are drawn dotted and added arcs dashed.
"""

from __future__ import annotations

from .digraph import Digraph
from .errors import DigraphError
from .ground import GroundPartition
from .mechfile import ArcDiff


class _NoGround:
    def __repr__(self) -> str:
        return "NO_GROUND"


NO_GROUND = _NoGround()
"""Pass as ``partition`` to mark a digraph known to have no ground."""

BLACK, BROWN, RED, BLUE, MAGENTA = "black", "brown", "red", "blue", "magenta"


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _attrs(**kw: str) -> str:
    return "[" + ", ".join(f"{k}={v}" for k, v in kw.items()) + "]"


def vertex_colors(d: Digraph, partition: GroundPartition | _NoGround | None) -> dict[str, str]:
    if partition is None:
        return {v: BLACK for v in d.vertices}
    if partition is NO_GROUND:
        return {v: BROWN for v in d.vertices}
    colors = {}
    for v in d.vertices:
        if v in partition.reciprocal:
            colors[v] = MAGENTA
        elif v in partition.ground:
            colors[v] = RED
        else:
            colors[v] = BLUE
    return colors


def arc_color(arc: tuple[str, str], partition: GroundPartition | _NoGround | None) -> str:
    if partition is None:
        return BLACK
    if partition is NO_GROUND:
        return BROWN
    tail, head = arc
    return RED if tail in partition.ground and head in partition.ground else BLUE


def emit_dot(
    d: Digraph,
    partition: GroundPartition | _NoGround | None = None,
    diff: ArcDiff | None = None,
    *,
    name: str = "D",
) -> str:
    """Render ``d`` as a DOT digraph.

    ``diff.added`` must be arcs of ``d``; ``diff.removed`` are arcs of the
    pre-edit digraph and may mention vertices ``d`` no longer has, which are
    then drawn dotted.
    """
    if isinstance(partition, GroundPartition):
        if not all(v in d for v in partition.ground | partition.non_ground_vertices):
            raise DigraphError("partition references vertices outside the digraph")
    added = diff.added if diff else frozenset()
    removed = diff.removed if diff else frozenset()
    for t, h in sorted(added):
        if not d.has_arc(t, h):
            raise DigraphError(f"added arc ({t},{h}) is not in the digraph")
    for t, h in sorted(removed):
        if d.has_arc(t, h):
            raise DigraphError(f"removed arc ({t},{h}) is still in the digraph")

    colors = vertex_colors(d, partition)
    lines = [f"digraph {_quote(name)} {{", "  node [shape=circle];"]
    for v in d.vertices:
        c = colors[v]
        lines.append(f"  {_quote(v)} {_attrs(color=c, fontcolor=c)};")
    gone = sorted({end for arc in removed for end in arc if end not in d})
    for v in gone:
        c = BLACK if partition is None else (BROWN if partition is NO_GROUND else BLUE)
        lines.append(f"  {_quote(v)} {_attrs(color=c, fontcolor=c, style='dotted')};")

    for arc in d.sorted_arcs():
        kw = {"color": arc_color(arc, partition)}
        if arc in added:
            kw["style"] = "dashed"
        lines.append(f"  {_quote(arc[0])} -> {_quote(arc[1])} {_attrs(**kw)};")
    for arc in sorted(removed):
        kw = {"color": arc_color(arc, partition), "style": "dotted"}
        lines.append(f"  {_quote(arc[0])} -> {_quote(arc[1])} {_attrs(**kw)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
