import io
import subprocess
import sys

import pytest

from cogmech import __version__
from cogmech.cli import main
from graphs import DATA

E1 = str(DATA / "e1.mech")
E2 = str(DATA / "e2.mech")
CASE1 = str(DATA / "case1.mech")


def run(*argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_ground():
    code, out, _ = run("ground", E1)
    assert code == 0
    assert out == "ground: e f g h i\nreciprocal: e f i\nnon-ground: a b c d e f i\n"


def test_ground_absent_exit_codes():
    assert run("ground", E2)[:2] == (0, "no ground\n")
    assert run("ground", "--require-ground", E2)[0] == 1


def test_validate():
    code, out, _ = run("validate", E2)
    assert code == 0
    assert "#3 " in out and "fails (a)" in out
    assert out.count("\n") == 14


def test_paths_cycles_unit_uniter():
    assert run("paths", E2, "e", "a")[1] == "e f g d a\ne g d a\n"
    assert run("cycles", E2, "d")[1] == "d e f g d\nd e g d\n"
    assert run("unit", E2, "c")[1] == "{c f} [c->f f->c]\n"
    assert run("uniter", E2, "d", "c")[1] == "{c d e f} [d->e e->f f->c]\n"


def test_list_md():
    code, out, _ = run("list", "--format", "md", E2)
    assert code == 0 and out.startswith("| **paths** |")


def test_characterize_modes():
    code, out, _ = run("characterize", "--mode", "sym", E2)
    assert code == 0
    assert "total: no" in out and "uncovered vertices: a b" in out
    assert "total: yes" in run("characterize", "--mode", "con", E2)[1]
    out = run("characterize", "--mode", "hyb", E2)[1]
    assert "completion:" in out and "total: yes" in out


def test_characterize_standard_needs_ground():
    code, out, _ = run("characterize", E2)
    assert code == 1 and out.startswith("no ground")


def test_formize_and_compare(tmp_path):
    code, csv_text, _ = run("formize", "--labels", E1)
    assert code == 0 and csv_text.splitlines()[-1] == "label,e,h,f,g,i,b,a,d,c"
    out_csv = tmp_path / "e1.csv"
    out_csv.write_text(csv_text)
    code, out, _ = run("compare", E1, str(DATA / "e1_table.csv"))
    assert code == 0 and out.startswith("equivalent\nwitness: ")
    pairs = set(out.splitlines()[1].split()[1:])
    assert pairs == {f"{v}=o{k}" for k, v in enumerate("abcdefghi", start=1)}
    assert run("compare", str(out_csv), str(DATA / "e1_table.csv"), "--mode", "mixed")[0] == 0
    code, out, _ = run("compare", E1, str(DATA / "e2_table.csv"))
    assert (code, out) == (1, "not equivalent\n")


def test_formize_md():
    out = run("formize", "--format", "md", "--mode", "mixed", E2)[1]
    assert out.startswith("| paths |")


def test_evolve_case1():
    code, out, _ = run("evolve", CASE1)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "before: ground {e f g h i}; reciprocal {e f i}"
    assert lines[1] == "after: no ground - unifiedness fails"
    assert lines[2] == "previous ground after edits: underlyingness=yes primitiveness=yes unifiedness=no"
    assert lines[3].startswith("digraph")
    assert '"i" -> "h" [color=brown, style=dotted];' in out


def test_evolve_needs_edits():
    code, _, err = run("evolve", E1)
    assert code == 2 and "edit:" in err


def test_render():
    out = run("render", "--partition", E1)[1]
    assert '"g" [color=red, fontcolor=red];' in out
    assert "brown" in run("render", "--partition", E2)[1]
    assert "color=black" in run("render", E1)[1]
    assert "style=dotted" in run("render", "--diff", CASE1)[1]
    assert '"i" -> "h"' not in run("render", "--apply-edits", CASE1)[1]


def test_apply_edits_flag():
    assert run("ground", CASE1)[1].startswith("ground: e f g h i")
    assert run("ground", "--apply-edits", CASE1)[1] == "no ground\n"


def test_stdin(monkeypatch):
    text = (DATA / "e1.mech").read_text()
    code, out, _ = run("ground", "-", stdin=text, monkeypatch=monkeypatch)
    assert code == 0 and out.startswith("ground: e f g h i")


@pytest.mark.parametrize(
    "argv",
    [
        ["ground"],
        ["nonsense", E1],
        ["characterize", "--mode", "neural", E1],
        ["ground", "/no/such/file.mech"],
        ["paths", E1, "a", "zz"],
    ],
)
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_parse_error_reports_line(tmp_path):
    bad = tmp_path / "bad.mech"
    bad.write_text("vertices: a b\na => b\n")
    code, _, err = run("ground", str(bad))
    assert code == 2 and "line 2" in err


def test_resource_guard(monkeypatch):
    code, _, err = run("list", "--max-walks", "5", E2)
    assert code == 3 and "resource limit" in err
    assert run("list", "--max-vertices", "3", E2)[0] == 3
    monkeypatch.setenv("COGMECH_MAX_WALKS", "5")
    assert run("list", E2)[0] == 3
    assert run("list", "--max-walks", "0", E2)[0] == 0


def test_version(capsys):
    assert run("--version")[0] == 0
    assert __version__ in capsys.readouterr().out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cogmech", "ground", E1], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("ground:")
