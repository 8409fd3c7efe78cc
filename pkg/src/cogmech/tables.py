"""Text renderings of formization tables and walk listings.

CSV layout (markdown uses the same rows)::

    paths,o1,o2
    o1,0,1
    o2,1,0
    cycles,1,1
    from,1,1
    to,1,1
"""

from __future__ import annotations

import csv
import io

from .enumeration import WalkListing
from .errors import FormatError
from .formization import FormizationMode, FormizationTable


def _rows(t: FormizationTable, show_labels: bool) -> list[list[str]]:
    heads = [f"o{k + 1}" for k in range(t.n)]
    rows = [["paths", *heads]]
    rows += [[heads[i], *map(str, row)] for i, row in enumerate(t.path_matrix)]
    rows.append(["cycles", *map(str, t.cycle_vector)])
    rows.append(["from", *map(str, t.out_vector)])
    rows.append(["to", *map(str, t.in_vector)])
    if show_labels and t.labels is not None:
        rows.append(["label", *t.labels])
    return rows


def emit_formization(t: FormizationTable, fmt: str = "csv", *, show_labels: bool = False) -> str:
    rows = _rows(t, show_labels)
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        return buf.getvalue()
    if fmt in ("md", "markdown"):
        width = len(rows[0])
        out = ["| " + " | ".join(rows[0]) + " |", "|" + "---|" * width]
        out += ["| " + " | ".join(r) + " |" for r in rows[1:]]
        return "\n".join(out) + "\n"
    raise ValueError(f"unknown table format {fmt!r}")


def parse_formization_csv(
    text: str, mode: FormizationMode | str = FormizationMode.SINGLE_LEVELED
) -> FormizationTable:
    """Read a table written by :func:`emit_formization` (or transcribed by hand)."""
    rows = [r for r in csv.reader(io.StringIO(text)) if r and any(cell.strip() for cell in r)]
    rows = [[cell.strip() for cell in r] for r in rows if not r[0].startswith("#")]
    if not rows or rows[0][0] != "paths":
        raise FormatError("table must start with a 'paths' header row", 1)
    n = len(rows[0]) - 1
    named: dict[str, list[int]] = {}
    matrix: list[list[int]] = []
    labels = None
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != n + 1:
            raise FormatError(f"expected {n + 1} cells, found {len(row)}", lineno)
        key, cells = row[0], row[1:]
        if key == "label":
            labels = cells
            continue
        try:
            values = [int(c) for c in cells]
        except ValueError:
            raise FormatError(f"non-integer cell in row {key!r}", lineno) from None
        if any(v < 0 for v in values):
            raise FormatError(f"negative count in row {key!r}", lineno)
        if key in ("cycles", "from", "to"):
            named[key] = values
        else:
            matrix.append(values)
    if len(matrix) != n:
        raise FormatError(f"path matrix has {len(matrix)} rows, expected {n}")
    missing = [k for k in ("cycles", "from", "to") if k not in named]
    if missing:
        raise FormatError(f"missing rows: {', '.join(missing)}")
    return FormizationTable.from_lists(matrix, named["cycles"], named["from"], named["to"], mode, labels)


def emit_walk_listing(listing: WalkListing, fmt: str = "plain") -> str:
    sections = (("paths", listing.paths), ("cycles", listing.cycles))
    if fmt == "plain":
        out = []
        for title, groups in sections:
            out.append(title)
            out += [f"{v}: " + ", ".join(str(w) for w in walks) for v, walks in groups.items()]
            out.append("")
        return "\n".join(out)
    if fmt in ("md", "markdown"):
        out = []
        for title, groups in sections:
            out += [f"| **{title}** |", "|---|"]
            out += ["| " + ", ".join(str(w) for w in walks) + " |" for walks in groups.values()]
            out.append("")
        return "\n".join(out)
    raise ValueError(f"unknown listing format {fmt!r}")
