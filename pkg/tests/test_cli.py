import csv
import io
import json

from su2comm.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_waves_csv(capsys):
    code, out, _ = run(capsys, "waves", "--theta", "1.2,0.5,0", "--P", "0.7071067811865476", "--samples", "64")
    assert code == EXIT_OK
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["theta", "P", "phi", "Q"]
    assert len(rows) == 1 + 3 * 64
    assert all(abs(float(r[3])) <= 1.0 for r in rows[1:])


def test_waves_figure_two(capsys):
    code, out, _ = run(capsys, "waves", "--theta", "pi", "--P", "0.99,0.5,-0.5,0+", "--samples", "32")
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert {r["P"] for r in rows} == {"0.99", "0.5", "-0.5", "0+"}
    assert set(float(r["Q"]) for r in rows if r["P"] == "0+") <= {-1.0, 0.0, 1.0}


def test_waves_flat(capsys):
    code, out, _ = run(capsys, "waves", "--theta", "1.0", "--P", "1", "--samples", "16")
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert all(r["Q"] == "0.0" for r in rows)


def test_waves_json(capsys):
    code, out, _ = run(capsys, "waves", "--theta", "1", "--P", "0.5", "--samples", "4", "--format", "json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert len(data) == 4 and set(data[0]) == {"theta", "P", "phi", "Q"}


def test_waves_usage_errors(capsys):
    assert run(capsys, "waves", "--theta", "4")[0] == EXIT_USAGE
    assert run(capsys, "waves", "--P", "1.5")[0] == EXIT_USAGE
    assert run(capsys, "waves", "--theta", "0", "--P", "1")[0] == EXIT_USAGE
    assert run(capsys, "waves", "--theta", "x")[0] == EXIT_USAGE
    assert run(capsys, "waves", "--samples", "1")[0] == EXIT_USAGE


def test_verify_quat(capsys):
    code, out, _ = run(capsys, "verify", "quat")
    assert code == EXIT_OK
    rep = json.loads(out)
    assert rep["pass"] and {c["name"] for c in rep["suites"]["quat"]} >= {"associativity", "inverse"}


def test_verify_tight_tolerance(capsys):
    code, out, _ = run(capsys, "verify", "quat", "--tol", "1e-17")
    assert code == EXIT_FAIL
    rep = json.loads(out)
    assert any(not c["pass"] and c["max_defect"] > 1e-17 for c in rep["suites"]["quat"])


def test_verify_homalg(capsys):
    code, out, _ = run(capsys, "verify", "homalg")
    assert code == EXIT_OK
    names = [c["name"] for c in json.loads(out)["suites"]["homalg"] if c["name"].startswith("table_")]
    assert len(names) == 6


def test_cohomology_bundled(capsys):
    code, out, _ = run(capsys, "cohomology", "atiyah_A.json")
    assert code == EXIT_OK
    rep = json.loads(out)
    assert rep["total"]["table"] == ["Z", "0", "Z", "Z^4", "Z", "0", "Z"]
    assert rep["checks"]["exactness"]


def test_cohomology_errors(capsys, tmp_path):
    code, _, err = run(capsys, "cohomology", str(tmp_path / "missing.json"))
    assert code == EXIT_USAGE and "cannot read" in err
    bad = tmp_path / "bad.json"
    bad.write_text('{\n  "name": "x",\n  oops\n}')
    code, _, err = run(capsys, "cohomology", str(bad))
    assert code == EXIT_USAGE and "bad.json:3:" in err
    incomplete = tmp_path / "inc.json"
    incomplete.write_text('{"name": "x", "spaces": {}}')
    assert run(capsys, "cohomology", str(incomplete))[0] == EXIT_FAIL


def test_out_file(capsys, tmp_path):
    p = tmp_path / "w.csv"
    code, out, _ = run(capsys, "waves", "--samples", "8", "--out", str(p))
    assert code == EXIT_OK and out == ""
    assert p.read_text().startswith("theta,P,phi,Q\n")


def test_deterministic(capsys):
    a = run(capsys, "homeo", "--samples", "20", "--seed", "3")[1]
    b = run(capsys, "homeo", "--samples", "20", "--seed", "3")[1]
    assert a == b and json.loads(a)["pass"]


def test_retract_and_flow(capsys):
    code, out, _ = run(capsys, "retract", "--samples", "5")
    assert code == EXIT_OK
    code, out, _ = run(capsys, "flow", "--seeds", "3")
    assert code == EXIT_OK
    assert json.loads(out)["line"] == "converged 3/3 (100.0%)"


def test_format_rejected(capsys):
    assert run(capsys, "verify", "quat", "--format", "csv")[0] == EXIT_USAGE
    assert run(capsys, "flow", "--tol", "-1")[0] == EXIT_USAGE
    assert run(capsys, "nonsense")[0] == EXIT_USAGE
