import json

import pytest

import constants
from main import main
from model import problem_to_json

from tests.problems import argmax_problem, trap_problem


def gen(tmp_path, *extra) -> str:
    output = str(tmp_path / "model.json")
    assert main(["gen", *extra, "-o", output]) == constants.EXIT_OK
    return output


def test_gen_is_deterministic(tmp_path, capsys):
    first = gen(tmp_path, "knapsack", "--variant", "chain", "--stages", "2", "--seed", "7")
    content = open(first).read()
    second = gen(tmp_path, "knapsack", "--variant", "chain", "--stages", "2", "--seed", "7")
    assert open(second).read() == content
    assert "(G) Wrote knapsack-chain-2-7" in capsys.readouterr().out


def test_gen_rejects_a_variant_the_family_lacks(tmp_path):
    assert main(["gen", "investment", "--variant", "hidden", "--stages", "2", "-o", str(tmp_path / "model.json")]) == constants.EXIT_USAGE


def test_gen_rejects_zero_stages(tmp_path):
    with pytest.raises(SystemExit) as error:
        main(["gen", "production", "--stages", "0", "-o", str(tmp_path / "model.json")])
    assert error.value.code == constants.EXIT_USAGE


def test_solve_dd_writes_stats_policy_and_dot(tmp_path, capsys):
    model = gen(tmp_path, "production", "--stages", "2", "--seed", "1")
    stats_path = tmp_path / "stats.json"
    policy_path = tmp_path / "policy.json"
    dot_path = tmp_path / "aodd.dot"
    code = main(["solve", model, "--stats", str(stats_path), "--policy", str(policy_path), "--dot", str(dot_path)])
    assert code == constants.EXIT_OK
    assert capsys.readouterr().out.splitlines()[-1].startswith("value=")
    stats = json.loads(stats_path.read_text())
    assert stats["mode"] == "dd"
    assert stats["cache_hits"] >= 2
    assert stats["hits_by_variable"]["H1"] >= 2
    assert stats["spec"] == {"family": "production", "stages": 2, "seed": 1}
    assert "tree_node_count" in stats
    assert json.loads(policy_path.read_text())["var"] == "V1"
    assert dot_path.read_text().startswith("digraph aodd {")


def test_solve_modes_agree(tmp_path, capsys):
    model = gen(tmp_path, "investment", "--variant", "chain", "--stages", "2", "--seed", "3")
    capsys.readouterr()
    assert main(["solve", model, "--mode", "tree"]) == constants.EXIT_OK
    tree_line = capsys.readouterr().out.strip()
    assert main(["solve", model, "--mode", "dd"]) == constants.EXIT_OK
    assert capsys.readouterr().out.strip() == tree_line


def test_dot_needs_dd_mode(tmp_path):
    model = gen(tmp_path, "production", "--stages", "2")
    with pytest.raises(SystemExit) as error:
        main(["solve", model, "--mode", "tree", "--dot", str(tmp_path / "aodd.dot")])
    assert error.value.code == constants.EXIT_USAGE


def test_unnormalized_model(tmp_path, capsys):
    model = gen(tmp_path, "production", "--stages", "2")
    data = json.loads(open(model).read())
    data["cpts"][0]["rows"][0]["dist"] = {"0": 0.5, "1": 0.4}
    with open(model, "w") as f:
        json.dump(data, f)
    assert main(["solve", model]) == constants.EXIT_INVALID_MODEL
    assert "row sums to 0.9" in capsys.readouterr().err


def test_missing_model_file(tmp_path):
    assert main(["solve", str(tmp_path / "missing.json")]) == constants.EXIT_INVALID_MODEL


def test_compare_prints_one_line(tmp_path, capsys):
    model = gen(tmp_path, "production", "--stages", "2", "--seed", "2")
    capsys.readouterr()
    assert main(["compare", model]) == constants.EXIT_OK
    fields = capsys.readouterr().out.strip().split("\t")
    assert len(fields) == 5
    assert fields[0] == fields[1]
    assert int(fields[3]) < int(fields[2])
    assert float(fields[4]) > 1.0


def test_compare_without_sharing(tmp_path, capsys):
    model = tmp_path / "argmax.json"
    model.write_text(problem_to_json(argmax_problem()))
    assert main(["compare", str(model)]) == constants.EXIT_OK
    assert capsys.readouterr().out.strip() == "2.0\t2.0\t3\t3\t1.000000"


def test_infeasible_model(tmp_path, capsys):
    model = tmp_path / "trap.json"
    model.write_text(problem_to_json(trap_problem()))
    assert main(["solve", str(model)]) == constants.EXIT_INFEASIBLE
    assert capsys.readouterr().out.strip() == "infeasible"
    assert main(["compare", str(model)]) == constants.EXIT_INFEASIBLE


def test_sweep(tmp_path, capsys):
    assert main(["--log-dir", str(tmp_path), "sweep", "knapsack", "--variant", "chain", "--from", "2", "--to", "3"]) == constants.EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "stages\ttree_nodes\tdd_nodes\tratio\tvalue\tseconds"
    assert [line.split("\t")[0] for line in lines[1:]] == ["2", "3"]
    assert (tmp_path / "logs" / "solver.log").exists()
