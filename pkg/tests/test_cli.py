import json
import subprocess
import sys
from fractions import Fraction

import pytest

from hkgrass.cli import Entry, Report, _jsonable, main, run


def run_json(capsys, *argv):
    code = main(list(argv) + ["--format", "json", "--no-timings"])
    return code, json.loads(capsys.readouterr().out)


def test_reference_report_all_match():
    rep, code = run(["paper-numbers"])
    assert code == 0 and len(rep.entries) == 14 and rep.ok


def test_json_schema_and_determinism(capsys):
    code, first = run_json(capsys, "hilb2", "blowup")
    _, second = run_json(capsys, "hilb2", "blowup")
    assert code == 0 and first == second
    for row in first["entries"]:
        assert set(row) == {"label", "expected", "computed", "match", "elapsed_ms"}
        assert row["elapsed_ms"] is None


def test_byte_identical_output(capsys):
    main(["trilab", "config-b", "--prime", "101", "--seed", "7", "--format", "json",
          "--no-timings"])
    a = capsys.readouterr().out
    main(["trilab", "config-b", "--prime", "101", "--seed", "7", "--format", "json",
          "--no-timings"])
    assert capsys.readouterr().out == a


def test_config_b_has_one_point(capsys):
    code, out = run_json(capsys, "trilab", "config-b", "--prime", "101", "--seed", "7")
    row = next(r for r in out["entries"] if r["label"] == "|Z & Z'|")
    assert code == 0 and row["computed"] == 1


def test_plethysm_subcommand(capsys):
    code, out = run_json(capsys, "plethysm", "--i", "2", "--n", "6")
    row = next(r for r in out["entries"] if r["label"] == "dimension sum")
    assert code == 0 and row["computed"] == 190


def test_mismatch_sets_exit_status(capsys):
    code, out = run_json(capsys, "bwb", "sweep", "omega_twists", "--range", "2..2")
    assert code == 1 and not out["all_match"]


def test_partial_sweep_reports_skips(capsys):
    code, out = run_json(capsys, "bwb", "sweep", "F_tensor_wedge", "--budget-seconds", "0")
    rows = {r["label"]: r["computed"] for r in out["entries"]}
    assert rows["indices skipped (budget)"] > 0


def test_rationals_serialize_as_fractions():
    assert _jsonable(Fraction(55, 2)) == "55/2"
    assert _jsonable(Fraction(4, 2)) == "2"
    assert _jsonable((1, Fraction(1, 3))) == [1, "1/3"]


def test_report_match_semantics():
    rep = Report("t", [Entry("a", 1, 1), Entry("b", 2)])
    assert rep.ok
    rep.entries.append(Entry("c", 3, 4))
    assert not rep.ok
    assert "MISMATCH" in rep.to_table()


@pytest.mark.parametrize("argv", [["nope"], ["chow", "bogus"], ["trilab", "scan", "--bad"]])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code != 0
    assert "usage" in capsys.readouterr().err


def test_scan_rejects_unsupported_prime(capsys):
    assert main(["trilab", "scan", "--prime", "5"]) == 2
    assert "projective points" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hkgrass", "hilb2", "bb"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "nonsplit" in proc.stdout


def test_scan_from_trivector_file(tmp_path, capsys):
    import random
    from hkgrass.trilab import PrimeField, singular_trivector
    path = tmp_path / "sigma.txt"
    path.write_text(singular_trivector(PrimeField(2), random.Random(3)).to_text())
    code, out = run_json(capsys, "trilab", "scan", "--sigma", str(path))
    rows = {r["label"]: r["computed"] for r in out["entries"]}
    assert code == 0 and rows["singular points"] >= 1
