import json
import os
import shutil
import subprocess

import jsonschema
import pytest

CLI = os.environ.get("IRLAB_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="IRLAB_CLI not set")


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("IRLAB_BUDGET", None)
    if env:
        full_env.update(env)
    return subprocess.run([CLI, *map(str, args)], capture_output=True, text=True, env=full_env, timeout=600)


def report(*args):
    r = run(*args)
    assert r.returncode == 0, r.stderr
    return json.loads(r.stdout)


def write_spec(tmp_path, name, spec):
    path = tmp_path / name
    path.write_text(json.dumps(spec))
    return path


def test_analyze_two_planes(corpus_dir, report_schema):
    r = report("analyze", corpus_dir / "ex54.json")
    jsonschema.validate(r, report_schema)
    assert r["dim"] == 3
    assert r["depth"] == 2
    assert r["socle_dims"] == [0, 0, 1, 2]
    assert r["flags"]["unmixed"] is True
    assert r["filtration"]["chain"] == "0 ⊆ R"


def test_analyze_line_and_plane(corpus_dir, report_schema):
    r = report("analyze", corpus_dir / "ex44.json")
    jsonschema.validate(r, report_schema)
    assert r["flags"]["seq_CM"] is True
    assert r["filtration"]["chain"] == "0 ⊆ (x) ⊆ R"


def test_stable_limit_and_ir_validate(corpus_dir, report_schema):
    s = report("stable", corpus_dir / "ex54.json", "--trials", 2)
    jsonschema.validate(s, report_schema)
    assert s["stable_value"]["N"] == 4
    assert all(c["holds"] for c in s["cross_checks"].values())

    lim = report("limit", corpus_dir / "ex44.json", "--nmax", 3, "--samples", 10)
    jsonschema.validate(lim, report_schema)
    assert [row["n"] for row in lim["alpha_profile"]] == [1, 2, 3]
    assert all(row["max_ir"] <= 2 for row in lim["alpha_profile"])

    ir = report("ir", corpus_dir / "ex44.json", "--params", "y-x,z")
    jsonschema.validate(ir, report_schema)
    assert ir["ir"]["value"] == 1

    auto = report("ir", corpus_dir / "ex44.json")
    jsonschema.validate(auto, report_schema)
    assert auto["ir"]["value"] == 2
    assert "certificate" in auto["ir"]


def test_reruns_are_byte_identical(corpus_dir):
    a = run("stable", corpus_dir / "buchsbaum.json", "--seed", 17, "--trials", 2)
    b = run("stable", corpus_dir / "buchsbaum.json", "--seed", 17, "--trials", 2)
    assert a.returncode == 0
    assert a.stdout == b.stdout


def test_text_output(corpus_dir):
    r = run("analyze", corpus_dir / "ex44.json", "--text")
    assert r.returncode == 0
    assert "0 ⊆ (x) ⊆ R" in r.stdout


def test_version():
    r = run("--version")
    assert r.returncode == 0
    assert r.stdout.strip()


def test_unit_ideal_exits_1(tmp_path):
    path = write_spec(tmp_path, "unit.json", {"variables": ["x", "y"], "ideal": ["1"]})
    r = run("analyze", path)
    assert r.returncode == 1
    assert "unit ideal" in r.stderr


def test_parse_error_exits_1(tmp_path):
    path = write_spec(tmp_path, "bad.json", {"variables": ["x", "y"], "ideal": ["x*"]})
    r = run("analyze", path)
    assert r.returncode == 1
    assert "position" in r.stderr


def test_malformed_file_names_the_file(tmp_path):
    path = tmp_path / "truncated.json"
    path.write_text('{"variables": ["x"]')
    r = run("analyze", path)
    assert r.returncode == 1
    assert "truncated.json" in r.stderr


def test_bad_option_exits_1(corpus_dir):
    assert run("analyze").returncode == 1
    assert run("limit", corpus_dir / "ex44.json", "--nmax", 0).returncode == 1


def test_not_a_system_of_parameters_exits_4(corpus_dir):
    r = run("ir", corpus_dir / "ex44.json", "--params", "y,z")
    assert r.returncode == 4
    assert "not a system of parameters" in r.stderr


def test_budget_exits_2(corpus_dir):
    r = run("stable", corpus_dir / "ex54.json", env={"IRLAB_BUDGET": "3"})
    assert r.returncode == 2
    assert "budget" in r.stderr


def test_invalid_budget_exits_1(corpus_dir):
    r = run("analyze", corpus_dir / "ex44.json", env={"IRLAB_BUDGET": "lots"})
    assert r.returncode == 1


def test_reproduce_filter_by_tag(corpus_dir):
    r = run("reproduce-examples", "--filter", "ex54", "--corpus", corpus_dir)
    assert r.returncode == 0, r.stdout + r.stderr
    ids = [line.split()[0] for line in r.stdout.splitlines() if line.startswith("ac")]
    assert ids == ["ac1", "ac3", "ac8"]
    assert "3/3 passed" in r.stdout


def test_reproduce_unknown_filter_exits_1(corpus_dir):
    assert run("reproduce-examples", "--filter", "nothing-matches", "--corpus", corpus_dir).returncode == 1


def test_corrupted_corpus_exits_1(tmp_path, corpus_dir):
    shutil.copytree(corpus_dir, tmp_path / "corpus")
    (tmp_path / "corpus" / "sqfree03.json").write_text('{"variables": ["x"], "ideal": ["x+"]}')
    r = run("reproduce-examples", "--corpus", tmp_path / "corpus")
    assert r.returncode == 1
    assert "sqfree03.json" in r.stderr


def test_golden_failure_exits_5(tmp_path, corpus_dir):
    shutil.copytree(corpus_dir, tmp_path / "corpus")
    shutil.copy(corpus_dir / "ex44.json", tmp_path / "corpus" / "ex54.json")
    r = run("reproduce-examples", "--filter", "ac1", "--corpus", tmp_path / "corpus")
    assert r.returncode == 5
    assert "first failing assertion" in r.stderr
    assert "FAIL" in r.stdout
