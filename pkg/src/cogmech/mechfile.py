"""The ``.mech`` text format and edit scripts.

::

    # comment
    vertices: a b c
    a -> b
    b -> c
    edit:
    -a b->c
    +v x
    +a c->x

Blank lines and ``#`` comments are ignored.  The ``vertices:`` header must
come before any arc.  The optional ``edit:`` section holds one edit per
line: ``+v x``, ``-v x``, ``+a x->y`` or ``-a x->y``.
"""

from __future__ import annotations

import re
from collections.abc import Iterable
from dataclasses import dataclass

from .digraph import Digraph
from .errors import DigraphError, FormatError

_ARC = re.compile(r"^(\S+?)\s*->\s*(\S+)$")
_EDIT_OPS = ("+v", "-v", "+a", "-a")


@dataclass(frozen=True)
class Edit:
    op: str
    tail: str
    head: str | None = None

    def __post_init__(self) -> None:
        if self.op not in _EDIT_OPS:
            raise ValueError(f"unknown edit {self.op!r}")
        if (self.op[1] == "a") != (self.head is not None):
            raise ValueError(f"edit {self.op} has the wrong number of operands")

    @property
    def arc(self) -> tuple[str, str]:
        assert self.head is not None
        return (self.tail, self.head)

    def inverse(self) -> Edit:
        if self.op == "-v":
            raise ValueError("removing a vertex drops its arcs and cannot be inverted")
        flipped = ("-" if self.op[0] == "+" else "+") + self.op[1]
        return Edit(flipped, self.tail, self.head)

    def __str__(self) -> str:
        if self.head is None:
            return f"{self.op} {self.tail}"
        return f"{self.op} {self.tail}->{self.head}"


@dataclass(frozen=True)
class EditScript:
    edits: tuple[Edit, ...] = ()

    @classmethod
    def of(cls, *lines: str) -> EditScript:
        """Build a script from edit lines such as ``"-a i->h"``."""
        return cls(tuple(_parse_edit(line, None) for line in lines))

    def inverse(self) -> EditScript:
        return EditScript(tuple(e.inverse() for e in reversed(self.edits)))

    def __len__(self) -> int:
        return len(self.edits)

    def __iter__(self):
        return iter(self.edits)

    def __bool__(self) -> bool:
        return bool(self.edits)


@dataclass(frozen=True)
class MechFile:
    digraph: Digraph
    edits: EditScript = EditScript()


def _parse_edit(text: str, lineno: int | None) -> Edit:
    parts = text.split(None, 1)
    if len(parts) != 2 or parts[0] not in _EDIT_OPS:
        raise FormatError(f"bad edit line {text!r}", lineno)
    op, rest = parts
    if op[1] == "v":
        label = rest.strip()
        if not label or any(ch.isspace() for ch in label):
            raise FormatError(f"bad vertex in edit {text!r}", lineno)
        return Edit(op, label)
    m = _ARC.match(rest.strip())
    if not m:
        raise FormatError(f"bad arc in edit {text!r}", lineno)
    return Edit(op, m.group(1), m.group(2))


def parse_mech(text: str) -> MechFile:
    vertices: list[str] | None = None
    arcs: list[tuple[str, str]] = []
    edits: list[Edit] = []
    in_edits = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vertices:"):
            if vertices is not None:
                raise FormatError("duplicate vertices header", lineno)
            if in_edits:
                raise FormatError("vertices header inside edit section", lineno)
            vertices = line[len("vertices:"):].split()
            continue
        if line == "edit:":
            if in_edits:
                raise FormatError("duplicate edit section", lineno)
            in_edits = True
            continue
        if in_edits:
            edits.append(_parse_edit(line, lineno))
            continue
        m = _ARC.match(line)
        if not m:
            raise FormatError(f"cannot parse {line!r}", lineno)
        if vertices is None:
            raise FormatError("vertices header required before arcs", lineno)
        arcs.append((m.group(1), m.group(2)))

    if vertices is None:
        raise FormatError("vertices header required")
    try:
        d = Digraph(vertices, arcs)
    except DigraphError as exc:
        raise FormatError(str(exc)) from exc
    return MechFile(d, EditScript(tuple(edits)))


def emit_mech(d: Digraph, edits: EditScript | Iterable[Edit] = ()) -> str:
    lines = ["vertices: " + " ".join(d.vertices) if d.vertices else "vertices:"]
    lines += [f"{t} -> {h}" for t, h in d.sorted_arcs()]
    edits = list(edits)
    if edits:
        lines.append("edit:")
        lines += [str(e) for e in edits]
    return "\n".join(lines) + "\n"


def apply_edits(d: Digraph, script: EditScript | Iterable[Edit]) -> Digraph:
    """Apply edits in order and return a new digraph; ``d`` is left untouched."""
    vertices = list(d.vertices)
    arcs = d.sorted_arcs()
    for e in script:
        if e.op == "+v":
            if e.tail in vertices:
                raise DigraphError(f"cannot add vertex {e.tail!r}: already present")
            vertices.append(e.tail)
        elif e.op == "-v":
            if e.tail not in vertices:
                raise DigraphError(f"cannot remove vertex {e.tail!r}: not present")
            vertices.remove(e.tail)
            arcs = [a for a in arcs if e.tail not in a]
        elif e.op == "+a":
            if e.arc in arcs:
                raise DigraphError(f"cannot add arc ({e.tail},{e.head}): already present")
            for end in e.arc:
                if end not in vertices:
                    raise DigraphError(f"cannot add arc ({e.tail},{e.head}): unknown vertex {end!r}")
            arcs.append(e.arc)
        else:
            if e.arc not in arcs:
                raise DigraphError(f"cannot remove arc ({e.tail},{e.head}): not present")
            arcs.remove(e.arc)
    return Digraph(vertices, arcs)


@dataclass(frozen=True)
class ArcDiff:
    removed: frozenset[tuple[str, str]] = frozenset()
    added: frozenset[tuple[str, str]] = frozenset()


def diff_digraphs(before: Digraph, after: Digraph) -> ArcDiff:
    return ArcDiff(removed=before.arcs - after.arcs, added=after.arcs - before.arcs)
