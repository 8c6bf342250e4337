import json
import os
import subprocess
from pathlib import Path

import pytest

CLI = os.environ.get("PHA_CLI", "pha")
DATA = Path(os.environ.get("PHA_DATA", Path(__file__).resolve().parent.parent / "data"))


def run(*args, env=None):
    e = dict(os.environ)
    e.pop("PHA_FIELD", None)
    if env:
        e.update(env)
    return subprocess.run([CLI, *map(str, args)], capture_output=True, text=True, env=e, timeout=120)


def run_json(*args, **kw):
    p = run("--format", "json", *args, **kw)
    return p.returncode, json.loads(p.stdout)


@pytest.mark.parametrize(
    "args, code",
    [
        (["verify", "action", DATA / "zero_on_g.json"], 0),
        (["verify", "action", DATA / "half_scaling.json"], 1),
        (["verify", "action", DATA / "malformed.json"], 2),
        (["morita", DATA / "half_scaling.json"], 3),
        (["grading", DATA / "grading_z2.json"], 0),
        (["grading", DATA / "grading_bad_coset.json"], 1),
        (["group-roundtrip", DATA / "group_action_qxq.json"], 0),
        (["smash", DATA / "zero_on_g.json"], 0),
        (["globalize", DATA / "zero_on_g.json", "--check-minimal"], 0),
        (["verify", "action", DATA / "does_not_exist.json"], 2),
        (["fuzz", "--seed", "7", "--count", "10"], 0),
    ],
)
def test_exit_codes(args, code):
    p = run(*args)
    assert p.returncode == code, p.stdout + p.stderr


def test_zero_on_g_globalizes_to_two_dimensions():
    code, rep = run_json("globalize", DATA / "zero_on_g.json", "--check-minimal")
    assert code == 0
    assert rep["outputs"]["dim_B"] == 2
    assert rep["outputs"]["minimal"] is True


def test_half_scaling_witness():
    code, rep = run_json("verify", "action", DATA / "half_scaling.json")
    assert code == 1
    comp = next(c for c in rep["checks"] if c["name"].endswith(".composition"))
    assert comp["status"] == "fail"
    assert "h=g_1" in comp["witness"]


def test_grading_outputs():
    code, rep = run_json("grading", DATA / "grading_z2.json")
    assert code == 0
    assert rep["outputs"]["dim_B"] == 8
    assert all(v == "1/2" for row in rep["outputs"]["eigenvalues"] for v in row)


def test_bad_coset_witness():
    code, rep = run_json("grading", DATA / "grading_bad_coset.json")
    assert code == 1
    c = next(c for c in rep["checks"] if c["name"] == "spec.coset_condition")
    assert c["witness"] == "(i,k,j)=(1,2,1)"


def test_smash_morita_context():
    code, rep = run_json("morita", DATA / "zero_on_g.json")
    assert code == 0
    assert rep["outputs"]["dims"] == [1, 4, 2, 2]
    assert rep["outputs"]["strict"] is True
    assert rep["outputs"]["B_is_matrix_algebra"] is True


def test_json_reports_are_byte_stable():
    a = run("--format", "json", "globalize", DATA / "zero_on_g.json").stdout
    b = run("--format", "json", "globalize", DATA / "zero_on_g.json").stdout
    assert a == b
    assert "wall_time_s" not in a
    timed = json.loads(run("--format", "json", "--timing", "globalize", DATA / "zero_on_g.json").stdout)
    assert "wall_time_s" in timed


def test_input_hash_is_reported():
    p = run("verify", "action", DATA / "zero_on_g.json")
    assert "fnv1a64=" in p.stdout


def test_field_option_and_environment():
    code, rep = run_json("--field", "fp:7", "verify", "action", DATA / "zero_on_g.json")
    assert code == 0
    code, _ = run_json("verify", "action", DATA / "zero_on_g.json", env={"PHA_FIELD": "fp:5"})
    assert code == 0
    p = run("verify", "action", DATA / "zero_on_g.json", env={"PHA_FIELD": "reals"})
    assert p.returncode == 2


def test_report_rerenders_saved_output(tmp_path):
    saved = tmp_path / "r.json"
    saved.write_text(run("--format", "json", "verify", "action", DATA / "half_scaling.json").stdout)
    p = run("report", saved)
    assert p.returncode == 1
    assert "result: fail" in p.stdout
    garbage = tmp_path / "g.json"
    garbage.write_text("{")
    assert run("report", garbage).returncode == 2


def test_fuzz_is_seed_reproducible():
    a = run("--format", "json", "fuzz", "--seed", "3", "--count", "20").stdout
    b = run("--format", "json", "fuzz", "--seed", "3", "--count", "20").stdout
    assert a == b
    assert json.loads(a)["ok"] is True


def test_verify_in_parallel_matches_serial():
    files = [DATA / "zero_on_g.json", DATA / "half_scaling.json", DATA / "swap_global.json"]
    serial = run("--format", "json", "verify", "action", *files, "--jobs", "1")
    parallel = run("--format", "json", "verify", "action", *files, "--jobs", "3")
    assert serial.stdout == parallel.stdout
    assert serial.returncode == parallel.returncode == 1


def test_category_documents():
    assert run("verify", "category", DATA / "matrix_units.json").returncode == 0


def test_usage_errors():
    assert run().returncode == 2
    assert run("morita", DATA / "zero_on_g.json", "--construction", "nonsense").returncode == 2
