"""Command line front end: ``cogmech <subcommand> FILE ...``.

Exit codes: 0 success, 1 negative analysis result (no ground with
``--require-ground`` or for ``characterize --mode standard``, tables not
equivalent for ``compare``), 2 usage or parse error, 3 resource guard hit.
Enumeration guards default to ``COGMECH_MAX_WALKS`` / ``COGMECH_MAX_VERTICES``
when set; ``0`` disables a guard.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Iterable, Sequence

from . import __version__
from .characterization import CharacterizationMode, characterize, standard_cognition_characterization
from .digraph import Digraph, Status, validate_mechanism
from .dot import NO_GROUND, emit_dot
from .enumeration import Limits, all_cycles, all_paths, full_listing, unit, uniter
from .errors import CogmechError, NoGroundError, ResourceLimitError
from .formization import FormizationMode, FormizationTable, formization_equivalent, formize
from .ground import FEATURES, GroundPartition, base_characteristics, find_ground
from .mechfile import MechFile, apply_edits, diff_digraphs, parse_mech
from .tables import emit_formization, emit_walk_listing, parse_formization_csv

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class _Usage(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc.strerror}") from None


def _load(args: argparse.Namespace) -> Digraph:
    mech = parse_mech(_read(args.file))
    if getattr(args, "apply_edits", False) and mech.edits:
        return apply_edits(mech.digraph, mech.edits)
    return mech.digraph


def _limits(args: argparse.Namespace) -> Limits:
    base = Limits.from_env()
    walks = base.max_walks if args.max_walks is None else (args.max_walks or None)
    verts = base.max_vertices if args.max_vertices is None else (args.max_vertices or None)
    return Limits(max_walks=walks, max_vertices=verts)


def _ordered(d: Digraph, vertices: Iterable[str]) -> str:
    keep = set(vertices)
    return " ".join(v for v in d.vertices if v in keep)


def fmt_net(net: Digraph) -> str:
    arcs = " ".join(f"{t}->{h}" for t, h in net.sorted_arcs())
    return f"{{{' '.join(net.vertices)}}} [{arcs}]"


def _ground_lines(d: Digraph, p: GroundPartition) -> list[str]:
    return [
        f"ground: {_ordered(d, p.ground)}",
        f"reciprocal: {_ordered(d, p.reciprocal)}",
        f"non-ground: {_ordered(d, p.non_ground_vertices)}",
    ]


def cmd_validate(args, out) -> int:
    report = validate_mechanism(_load(args))
    for c in report.checks:
        line = f"#{c.number} {c.name}: {c.status.value}"
        if c.status is Status.FAILS:
            line += " (" + " ".join(c.witnesses) + ")"
        out.write(line + "\n")
    return EXIT_OK


def cmd_list(args, out) -> int:
    out.write(emit_walk_listing(full_listing(_load(args), _limits(args)), args.format))
    return EXIT_OK


def cmd_paths(args, out) -> int:
    for w in all_paths(_load(args), args.x, args.y, _limits(args)):
        out.write(f"{w}\n")
    return EXIT_OK


def cmd_cycles(args, out) -> int:
    for w in all_cycles(_load(args), args.x, _limits(args)):
        out.write(f"{w}\n")
    return EXIT_OK


def cmd_unit(args, out) -> int:
    out.write(fmt_net(unit(_load(args), args.x, _limits(args))) + "\n")
    return EXIT_OK


def cmd_uniter(args, out) -> int:
    out.write(fmt_net(uniter(_load(args), args.x, args.y, _limits(args))) + "\n")
    return EXIT_OK


def cmd_ground(args, out) -> int:
    d = _load(args)
    p = find_ground(d)
    if p is None:
        out.write("no ground\n")
        return EXIT_NEGATIVE if args.require_ground else EXIT_OK
    out.write("\n".join(_ground_lines(d, p)) + "\n")
    return EXIT_OK


def _write_report(out, report, heading: str) -> None:
    out.write(f"{heading}\n")
    for v, net in report.units.items():
        out.write(f"  unit {v}: {fmt_net(net)}\n")
    for (x, y), net in report.uniters.items():
        out.write(f"  uniter {x}->{y}: {fmt_net(net)}\n")
    if report.completion:
        out.write("  completion: " + " ".join(f"{x}->{y}" for x, y in report.completion) + "\n")
    out.write(f"  total: {'yes' if report.total else 'no'}\n")
    if not report.total:
        if report.uncovered_vertices():
            out.write("  uncovered vertices: " + " ".join(report.uncovered_vertices()) + "\n")
        if report.uncovered_arcs():
            out.write("  uncovered arcs: " + " ".join(f"{t}->{h}" for t, h in report.uncovered_arcs()) + "\n")


def cmd_characterize(args, out) -> int:
    d = _load(args)
    limits = _limits(args)
    if args.mode == "standard":
        try:
            std = standard_cognition_characterization(d, limits)
        except NoGroundError:
            out.write("no ground: standard characterization needs one\n")
            return EXIT_NEGATIVE
        _write_report(out, std.self_report, "self (symbolistic)")
        _write_report(out, std.non_self_report, "non-self (connectionistic)")
        return EXIT_OK
    report = characterize(d, CharacterizationMode.parse(args.mode), limits)
    _write_report(out, report, report.mode.value)
    return EXIT_OK


def cmd_formize(args, out) -> int:
    table = formize(_load(args), args.mode, _limits(args))
    out.write(emit_formization(table, args.format, show_labels=args.labels))
    return EXIT_OK


def _load_table(path: str, mode: FormizationMode, limits: Limits) -> FormizationTable:
    text = _read(path)
    first = next((ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")), "")
    if path.endswith(".csv") or first.startswith("paths"):
        return parse_formization_csv(text, mode)
    return formize(parse_mech(text).digraph, mode, limits)


def cmd_compare(args, out) -> int:
    mode = FormizationMode.parse(args.mode)
    limits = _limits(args)
    t1 = _load_table(args.a, mode, limits)
    t2 = _load_table(args.b, mode, limits)
    result = formization_equivalent(t1, t2, mode)
    if not result.equivalent:
        out.write("not equivalent\n")
        return EXIT_NEGATIVE
    names = t2.labels or tuple(f"o{k + 1}" for k in range(t2.n))
    src = t1.labels or tuple(f"o{k + 1}" for k in range(t1.n))
    witness = " ".join(f"{src[i]}={names[j]}" for i, j in enumerate(result.witness))
    out.write(f"equivalent\nwitness: {witness}\n")
    return EXIT_OK


def _verdict(d: Digraph, p: GroundPartition | None) -> str:
    if p is None:
        return "no ground"
    return f"ground {{{_ordered(d, p.ground)}}}; reciprocal {{{_ordered(d, p.reciprocal)}}}"


def cmd_evolve(args, out) -> int:
    mech: MechFile = parse_mech(_read(args.file))
    if not mech.edits:
        raise _Usage("evolve needs an edit: section")
    before = mech.digraph
    after = apply_edits(before, mech.edits)
    p_before, p_after = find_ground(before), find_ground(after)
    out.write(f"before: {_verdict(before, p_before)}\n")
    line = f"after: {_verdict(after, p_after)}"
    old = [v for v in before.vertices if v in after and p_before is not None and v in p_before.ground]
    report = base_characteristics(after, old) if old else None
    if report is not None and p_after is None and report.failing():
        line += " - " + ", ".join(report.failing()) + " fails"
    out.write(line + "\n")
    if report is not None:
        flags = " ".join(f"{n}={'yes' if ok else 'no'}" for n, ok in zip(FEATURES, report.as_tuple()))
        out.write(f"previous ground after edits: {flags}\n")
    out.write(emit_dot(after, p_after if p_after is not None else NO_GROUND, diff_digraphs(before, after)))
    return EXIT_OK


def cmd_render(args, out) -> int:
    mech = parse_mech(_read(args.file))
    d = mech.digraph
    diff = None
    if args.diff:
        if not mech.edits:
            raise _Usage("--diff needs an edit: section")
        after = apply_edits(d, mech.edits)
        diff = diff_digraphs(d, after)
        d = after
    elif args.apply_edits and mech.edits:
        d = apply_edits(d, mech.edits)
    partition = None
    if args.partition:
        partition = find_ground(d) or NO_GROUND
    out.write(emit_dot(d, partition, diff))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cogmech", description="Analyze cognition-mechanism digraphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-walks", type=int, default=None, help="enumeration guard (0 = none)")
    common.add_argument("--max-vertices", type=int, default=None, help="vertex-count guard (0 = none)")
    common.add_argument("--apply-edits", action="store_true", help="analyze the digraph after its edit section")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help: str, *positional: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument("file", help=".mech file, or - for stdin")
        for arg in positional:
            p.add_argument(arg)
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "mechanism characteristics report")
    add("list", cmd_list, "all paths and cycles").add_argument("--format", choices=["plain", "md"], default="plain")
    add("paths", cmd_paths, "all paths from X to Y", "x", "y")
    add("cycles", cmd_cycles, "all cycles over X", "x")
    add("unit", cmd_unit, "all-cyclic sub-digraph over X", "x")
    add("uniter", cmd_uniter, "all-pathic sub-digraph from X to Y", "x", "y")
    add("ground", cmd_ground, "ground partition").add_argument("--require-ground", action="store_true")
    p = add("characterize", cmd_characterize, "units/uniters in a characterization mode")
    p.add_argument("--mode", choices=["sym", "con", "hyb", "standard"], default="standard")
    p = add("formize", cmd_formize, "formization table")
    p.add_argument("--mode", choices=["single", "mixed"], default="single")
    p.add_argument("--format", choices=["csv", "md"], default="csv")
    p.add_argument("--labels", action="store_true", help="append the source label of each index")
    p = sub.add_parser("compare", parents=[common], help="formization equivalence of two .mech or .csv inputs")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--mode", choices=["single", "mixed"], default="single")
    p.set_defaults(func=cmd_compare)
    add("evolve", cmd_evolve, "ground verdicts before/after the edit section, plus diff DOT")
    p = add("render", cmd_render, "DOT output")
    p.add_argument("--partition", action="store_true", help="color by ground partition")
    p.add_argument("--diff", action="store_true", help="apply edits and style removed/added arcs")
    return parser


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except ResourceLimitError as exc:
        err.write(f"cogmech: resource limit: {exc}\n")
        return EXIT_RESOURCE
    except (_Usage, CogmechError, ValueError) as exc:
        err.write(f"cogmech: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
