import json
import subprocess
import sys

from cyclebounds.cli import main
from cyclebounds.families import k1_plus_2kd, petersen
from cyclebounds.graph import write_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "4")
    assert code == 0 and len(out.split()) == 11
    code, out, _ = run(capsys, "enumerate", "--n", "1..5", "--connected")
    assert len(out.split()) == 1 + 1 + 2 + 6 + 21


def test_check_from_file(tmp_path, capsys):
    f = tmp_path / "g.g6"
    f.write_text(write_graph6(k1_plus_2kd(2)) + "\n" + write_graph6(petersen()) + "\n")
    code, out, _ = run(capsys, "check", "--graphs", str(f), "--theorems", "T14,T16", "--format", "json",
                       "--no-timing")
    data = json.loads(out)
    assert code == 0
    assert data["counts"]["T14"]["inapplicable"] == 2
    assert data["counts"]["T16"]["exception"] == 1
    assert "seconds" not in data and data["schema_version"] == 1


def test_check_builtin_enumeration(capsys):
    code, out, _ = run(capsys, "check", "--n", "1..5", "--connected", "--lambda", "1..2", "--no-timing")
    assert code == 0 and "graphs: 31" in out and "violated verdicts: 0" in out


def test_check_parse_error_is_reported(tmp_path, capsys):
    f = tmp_path / "bad.g6"
    f.write_text("Bw\nB!\n")
    code, out, _ = run(capsys, "check", "--graphs", str(f), "--theorems", "A")
    assert code == 0 and "parse error line 2" in out


def test_check_bad_theorem(capsys):
    code, _, err = run(capsys, "check", "--n", "3", "--theorems", "Z1")
    assert code == 2 and "cannot parse" in err


def test_sharpness(capsys):
    code, out, _ = run(capsys, "sharpness", "--family", "hub", "--params", "kappa=2,delta=3..4",
                       "--theorem", "T2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and all(i["equality"] for i in data[0]["instances"])


def test_sharpness_claims_filter(capsys):
    code, out, _ = run(capsys, "sharpness", "--claims", "--theorem", "T16")
    assert code == 0 and "petersen" in out and "exception" in out


def test_invariants_table(tmp_path, capsys):
    f = tmp_path / "p.g6"
    f.write_text(write_graph6(petersen()) + "\n")
    code, out, _ = run(capsys, "invariants", "--graphs", str(f))
    assert code == 0 and "4/3" in out


def test_module_entry_point_reads_stdin():
    proc = subprocess.run([sys.executable, "-m", "cyclebounds", "check", "--theorems", "A", "--no-timing"],
                          input="Bw\n", capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "graphs: 1" in proc.stdout
