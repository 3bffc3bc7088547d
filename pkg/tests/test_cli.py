"""The command-line surface: exit codes, JSON shapes, determinism."""

import json

import pytest
from click.testing import CliRunner

from omegalg.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def run(runner, *args, env=None):
    return runner.invoke(main, list(args), env=env, catch_exceptions=False)


def test_laws_pass_exit_zero(runner):
    res = run(runner, "laws", "--instance", "minplus", "--suite", "conway-semiring",
              "--samples", "200")
    assert res.exit_code == 0
    data = json.loads(res.stdout)
    assert data["failures"] == []
    assert data["suite"] == "conway-semiring"


def test_laws_liminf_fails_exit_one(runner):
    res = run(runner, "laws", "--instance", "liminf", "--suite", "omega-valuation",
              "--samples", "60")
    assert res.exit_code == 1
    data = json.loads(res.stdout)
    assert any(f["law"] == "regrouping_invariance" for f in data["failures"])


def test_laws_unknown_instance_exit_two(runner):
    res = run(runner, "laws", "--instance", "nosuch", "--suite", "conway-semiring")
    assert res.exit_code == 2


def test_laws_language_hemiring(runner):
    res = run(runner, "laws", "--instance", "lang", "--suite", "conway-hemiring",
              "--samples", "30", "--bound", "6")
    assert res.exit_code == 0


def test_laws_hemimodule_pairs(runner):
    res = run(runner, "laws", "--instance", "minplus", "--suite", "hemimodule",
              "--samples", "100")
    assert res.exit_code == 0
    res2 = run(runner, "laws", "--instance", "limsup-avg", "--suite", "hemimodule")
    assert res2.exit_code == 1
    data = json.loads(res2.stdout)
    assert data["failures"][0]["law"] == "product_omega"


def test_coeff_commands(runner):
    res = run(runner, "coeff", "--instance", "nat", "--expr", "(2a)^+", "--word", "aa")
    assert res.exit_code == 0 and res.stdout.strip() == "4"
    res2 = run(runner, "coeff", "--instance", "bool", "--expr", "(ab)^w",
               "--word", "(ab)^w")
    assert res2.exit_code == 0 and res2.stdout.strip() == "1"
    res3 = run(runner, "coeff", "--instance", "bool", "--expr", "a^+", "--word", "")
    assert res3.exit_code == 2


def test_coeff_word_kind_mismatch(runner):
    res = run(runner, "coeff", "--instance", "bool", "--expr", "a^w", "--word", "aa")
    assert res.exit_code == 2
    res2 = run(runner, "coeff", "--instance", "bool", "--expr", "a^+", "--word", "a^w")
    assert res2.exit_code == 2


def test_coeff_parse_error(runner):
    res = run(runner, "coeff", "--instance", "bool", "--expr", "a +", "--word", "a")
    assert res.exit_code == 2


def test_compile_and_behavior(runner, tmp_path):
    res = run(runner, "compile", "--instance", "disc", "--expr", "a^w",
              "--alphabet", "a")
    assert res.exit_code == 0
    data = json.loads(res.stdout)
    assert data["k"] >= 1
    path = tmp_path / "aut.json"
    path.write_text(json.dumps(data))
    res2 = run(runner, "behavior", "--aut", str(path), "--instance", "disc",
               "--word", "a^w", "--lambda", "0.5")
    assert res2.exit_code == 0
    assert abs(float(res2.stdout.strip()) - 2.0) <= 1e-6


def test_behavior_finite_word(runner, tmp_path):
    res = run(runner, "compile", "--instance", "nat", "--expr", "(2a)^+",
              "--alphabet", "a")
    path = tmp_path / "aut.json"
    path.write_text(res.stdout)
    res2 = run(runner, "behavior", "--aut", str(path), "--instance", "nat",
               "--word", "aa")
    assert res2.stdout.strip() == "4"


def test_group_check(runner):
    res = run(runner, "group-check", "--group", "S3", "--instance", "minplus",
              "--samples", "8")
    assert res.exit_code == 0
    res2 = run(runner, "group-check", "--group", "K9", "--instance", "minplus")
    assert res2.exit_code == 2


def test_counterexamples(runner):
    res = run(runner, "counterexample", "--name", "liminf-regroup")
    assert res.exit_code == 1
    data = json.loads(res.stdout)
    assert data["direct"] == 0.0 and data["regrouped"] == 1.0
    res2 = run(runner, "counterexample", "--name", "avg-regroup", "--depth", "24")
    assert res2.exit_code == 1
    data2 = json.loads(res2.stdout)
    assert abs(data2["direct_estimate"] - 2 / 3) <= 0.02
    assert abs(data2["regrouped_estimate"] - 1 / 3) <= 0.02
    res3 = run(runner, "counterexample", "--name", "avg-product-omega", "--depth", "8")
    assert res3.exit_code == 1
    data3 = json.loads(res3.stdout)
    assert data3["lhs"][-1] == 0.5 and data3["rhs"][-1] >= 0.9


def test_seed_determinism(runner):
    args = ("laws", "--instance", "minplus", "--suite", "conway-semiring",
            "--samples", "50", "--seed", "7")
    assert run(runner, *args).stdout == run(runner, *args).stdout


def test_env_seed_override(runner):
    res = run(runner, "manifest", "--instance", "disc", env={"OMEGA_WEIGHTS_SEED": "99"})
    data = json.loads(res.stdout)
    assert data["seed"] == 99
    assert data["params"] == {"lam": 0.5}


def test_manifest_shape(runner):
    res = run(runner, "manifest", "--instance", "lattice-inf")
    data = json.loads(res.stdout)
    assert set(data) == {"name", "params", "bound_length", "depth", "seed"}
