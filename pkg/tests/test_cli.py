import io
import subprocess
import sys
from pathlib import Path

import pytest

from skewbch.cli import main
from skewbch.replay import EXPECTED, format_results, run_paper_examples
from skewbch.simulate import SimConfig, simulate

SPECS = Path(__file__).resolve().parent.parent / "specs"
PAPER_SPEC = str(SPECS / "paper_delta5.txt")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def machine(out):
    return dict(line.split("=", 1) for line in out.splitlines())


@pytest.fixture(scope="module")
def codeword():
    buf = io.StringIO()
    sys.stdout, old = buf, sys.stdout
    try:
        assert main(["encode", "--spec", PAPER_SPEC, "1,t,0"]) == 0
    finally:
        sys.stdout = old
    return buf.getvalue().strip()


def test_build(capsys):
    code, out, _ = run(capsys, "build", "--spec", PAPER_SPEC, "--machine")
    assert code == 0
    info = machine(out)
    assert (info["n"], info["k"], info["delta"], info["tau"]) == ("7", "3", "5", "2")
    code, out, _ = run(capsys, "build", "--spec", PAPER_SPEC)
    assert "beta = (t+a)/t^2" in out and "code alpha=t r=0 delta=5" in out


def test_encode_corrupt_decode(capsys, codeword):
    code, received, _ = run(capsys, "corrupt", "--spec", PAPER_SPEC, codeword, "--positions", "1,2", "--values", "t,1")
    assert code == 0 and received != codeword
    code, out, _ = run(capsys, "decode", "--spec", PAPER_SPEC, received, "--machine")
    info = machine(out)
    assert code == 0
    assert info["status"] == "corrected" and info["positions"] == "1,2" and info["values"] == "t,1"
    assert info["corrected"] == codeword


def test_decode_reads_stdin(capsys, monkeypatch, codeword):
    monkeypatch.setattr(sys, "stdin", io.StringIO(codeword + "\n"))
    code, out, _ = run(capsys, "decode", "--spec", PAPER_SPEC, "-", "--machine")
    assert code == 0 and machine(out)["status"] == "clean"


def test_random_corruption_is_seeded(capsys, codeword):
    args = ("corrupt", "--spec", PAPER_SPEC, codeword, "--errors", "2", "--seed", "4")
    first = run(capsys, *args)[1]
    assert run(capsys, *args)[1] == first
    assert run(capsys, *args[:-1], "5")[1] != first


def test_key_equation_failure_exit_codes(capsys, codeword):
    _, received, _ = run(capsys, "corrupt", "--spec", PAPER_SPEC, codeword, "--positions", "1,5", "--values", "1,1")
    code, out, _ = run(capsys, "decode", "--spec", PAPER_SPEC, received, "--no-recover", "--machine")
    assert code == 3 and machine(out)["status"] == "key-equation-failure"
    code, out, _ = run(capsys, "decode", "--spec", PAPER_SPEC, received, "--machine")
    info = machine(out)
    assert code == 0 and info["status"] == "corrected-after-recovery" and info["corrected"] == codeword


def test_undecodable_exit_code(capsys, codeword):
    _, received, _ = run(
        capsys, "corrupt", "--spec", PAPER_SPEC, codeword, "--positions", "0,2,4", "--values", "t,1,t+a"
    )
    code, out, _ = run(capsys, "decode", "--spec", PAPER_SPEC, received, "--machine")
    assert code == 4 and machine(out)["status"] == "undecodable"


@pytest.mark.parametrize(
    "argv",
    [
        ["build", "--spec", "/nonexistent/spec.txt"],
        ["encode", "--spec", PAPER_SPEC, "1,2"],
        ["encode", "--spec", PAPER_SPEC, "1,t,%"],
        ["decode", "--spec", PAPER_SPEC, "1,1"],
        ["corrupt", "--spec", PAPER_SPEC, "0,0,0,0,0,0,0", "--positions", "1,1"],
        ["corrupt", "--spec", PAPER_SPEC, "0,0,0,0,0,0,0", "--positions", "9"],
        ["corrupt", "--spec", PAPER_SPEC, "0,0,0,0,0,0,0", "--positions", "1", "--values", "0"],
        ["corrupt", "--spec", PAPER_SPEC, "0,0,0,0,0,0,0", "--errors", "3"],
        ["simulate", "--spec", PAPER_SPEC, "--trials", "0"],
        ["simulate", "--spec", PAPER_SPEC, "--degree-bound", "x"],
        ["nonsense"],
        [],
    ],
)
def test_input_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_bad_spec_file_exits_2(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("field p=2 m=3 modulus=1,1,0,1\nsigma image=(t+a)/t\ncode alpha=a delta=5\n")
    code, _, err = run(capsys, "build", "--spec", str(bad))
    assert code == 2 and "NotNormalBasis" in err


def test_simulate_machine_report(capsys):
    args = ("simulate", "--spec", PAPER_SPEC, "--trials", "6", "--errors", "2", "--degree-bound", "0,2", "--machine")
    code, out, _ = run(capsys, *args)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "seed=0" and "wall" not in out
    rows = [ln for ln in lines if ln.startswith("bound=")]
    assert [r.split()[0] for r in rows] == ["bound=0", "bound=2"]
    assert "key_equation_failures=6" in rows[0]  # constant values are always dependent
    assert run(capsys, *args)[1] == out


def test_simulate_without_recovery_counts_failures():
    text = Path(PAPER_SPEC).read_text()
    report = simulate(SimConfig(text, trials=5, num_errors=2, degree_bounds=(0,), auto_recover=False))
    row = report.rows[0]
    assert row.key_equation_failures == 5 and row.recoveries_succeeded == 0 and row.undecodable == 5


def test_simulate_parallel_matches_serial():
    text = Path(PAPER_SPEC).read_text()
    cfg = dict(spec_text=text, trials=8, degree_bounds=(1, 2), seed=3, values="dependent")
    serial = simulate(SimConfig(jobs=1, **cfg)).machine_lines()
    parallel = simulate(SimConfig(jobs=3, **cfg)).machine_lines()
    assert serial == parallel


def test_simulate_value_modes():
    text = Path(PAPER_SPEC).read_text()
    for mode in ("ones", "dependent"):
        row = simulate(SimConfig(text, trials=4, num_errors=2, degree_bounds=(2,), values=mode)).rows[0]
        assert row.key_equation_failures == 4 and row.recoveries_succeeded == 4
    with pytest.raises(ValueError):
        simulate(SimConfig(text, values="bogus"))


def test_paper_examples_command(capsys):
    code, out, _ = run(capsys, "paper-examples", "--machine")
    assert code == 0
    assert len(out.splitlines()) == len(EXPECTED)
    assert all(line.endswith("result=pass") for line in out.splitlines())


def test_replay_detects_a_wrong_expectation():
    results = run_paper_examples({"two_errors/positions": "{1,3}", "recovery/v_I": "x + t"})
    failed = {r.key for r in results if not r.passed}
    assert failed == {"two_errors/positions", "recovery/v_I"}
    text = format_results(results)
    assert "FAIL  recovery/v_I" in text and f"{len(EXPECTED) - 2}/{len(EXPECTED)} checks passed" in text
    with pytest.raises(KeyError):
        run_paper_examples({"no/such": "1"})


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "skewbch", "build", "--spec", PAPER_SPEC, "--machine"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and "tau=2" in proc.stdout
