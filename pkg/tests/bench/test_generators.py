import pytest

from bench import Family, GenSpec, InvalidGenSpecException, Variant, gen_investment, gen_knapsack, gen_production, gen_random, generate
from bench.knapsack import capacity
from model import Objective, problem_to_json, total_order, validate

SPECS = [
    GenSpec(Family.KNAPSACK, Variant.INDEPENDENT, 3, 1),
    GenSpec(Family.KNAPSACK, Variant.CHAIN, 3, 1),
    GenSpec(Family.KNAPSACK, Variant.HIDDEN, 3, 1),
    GenSpec(Family.INVESTMENT, Variant.INDEPENDENT, 2, 4),
    GenSpec(Family.INVESTMENT, Variant.CHAIN, 2, 4),
    GenSpec(Family.PRODUCTION, None, 3, 2),
]


@pytest.mark.parametrize("spec", SPECS)
def test_generated_models_are_valid(spec):
    problem = generate(spec)
    assert validate(problem).ok
    for cpt in problem.factors:
        for row in cpt.rows:
            assert all(probability > 0.0 for _, probability in row.distribution)


@pytest.mark.parametrize("spec", SPECS)
def test_generation_is_deterministic(spec):
    assert problem_to_json(generate(spec)) == problem_to_json(generate(spec))


def test_seed_changes_the_tables():
    first = gen_knapsack(GenSpec(Family.KNAPSACK, Variant.CHAIN, 2, 1))
    second = gen_knapsack(GenSpec(Family.KNAPSACK, Variant.CHAIN, 2, 2))
    assert first.factors != second.factors
    assert first.variables == second.variables


def test_knapsack_counts():
    problem = gen_knapsack(GenSpec(Family.KNAPSACK, Variant.INDEPENDENT, 3, 0))
    assert len(problem.variables) == 21
    assert len(problem.factors) == 6
    assert len(problem.constraints) == 13
    assert problem.objective is Objective.MAXIMIZE
    assert problem.variables[problem.utility_variable].name == "U"
    assert all(len(cpt.parents) == 0 for cpt in problem.factors)


def test_knapsack_chain_parents():
    problem = gen_knapsack(GenSpec(Family.KNAPSACK, Variant.CHAIN, 3, 0))
    parents = {problem.variables[cpt.child].name: problem.names(cpt.parents) for cpt in problem.factors}
    assert parents["weight_1"] == []
    assert parents["weight_3"] == ["weight_2"]
    assert parents["value_2"] == ["value_1"]


def test_knapsack_hidden_variables_are_branched_last():
    problem = gen_knapsack(GenSpec(Family.KNAPSACK, Variant.HIDDEN, 3, 0))
    assert len(problem.variables) == 24
    assert len(problem.factors) == 9
    assert problem.names(total_order(problem))[-3:] == ["hidden_1", "hidden_2", "hidden_3"]
    assert problem.names(total_order(problem))[:3] == ["take_1", "weight_1", "value_1"]


def test_knapsack_capacity_scale():
    assert capacity(GenSpec(Family.KNAPSACK, Variant.CHAIN, 4, 0, 0.5)) == 6
    problem = gen_knapsack(GenSpec(Family.KNAPSACK, Variant.CHAIN, 4, 0, 0.5))
    assert max(problem.variables[problem.variable_id("load_4")].domain) == 6


def test_investment_counts():
    problem = gen_investment(GenSpec(Family.INVESTMENT, Variant.CHAIN, 2, 0))
    assert len(problem.variables) == 14
    assert len(problem.factors) == 4
    assert len(problem.constraints) == 9
    assert problem.variables[problem.variable_id("invest_1")].domain == (0, 1, 2)


def test_production_naming():
    assert [variable.name for variable in gen_production(2, 0).variables] == ["V1", "S1", "V2", "S2", "H1", "H2", "W", "U"]
    names = [variable.name for variable in gen_production(3, 0).variables]
    assert names[-3:] == ["W1", "W2", "U"]
    assert gen_production(2, 0).objective is Objective.MINIMIZE


@pytest.mark.parametrize("seed", range(20))
def test_random_models_are_small_and_valid(seed):
    problem = gen_random(seed)
    assert validate(problem).ok
    assert 1 <= len(total_order(problem)) <= 8
    assert all(len(problem.variables[variable_id].domain) <= 3 for variable_id in total_order(problem))


@pytest.mark.parametrize(
    "family,variant,stages",
    [
        ("investment", "hidden", 2),
        ("production", "chain", 2),
        ("knapsack", "sideways", 2),
        ("lottery", None, 2),
        ("knapsack", "chain", 0),
    ],
)
def test_invalid_spec(family, variant, stages):
    with pytest.raises(InvalidGenSpecException):
        GenSpec.from_names(family, variant, stages, 0)


def test_default_variant():
    assert GenSpec.from_names("knapsack", stages=2).variant is Variant.INDEPENDENT
    assert GenSpec.from_names("production", stages=2).variant is None
    assert GenSpec.from_names("knapsack", "chain", 2, 3).to_dict() == {"family": "knapsack", "stages": 2, "seed": 3, "variant": "chain", "capacity_scale": 0.6}
