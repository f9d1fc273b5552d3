from bench import gen_production
from model import Objective, Problem, Variable, VariableKind, total_order

from tests.problems import argmax_problem


def test_total_order_production_places_hidden_variables_last():
    problem = gen_production(2, 3)
    assert problem.names(total_order(problem)) == ["V1", "S1", "V2", "S2", "H1", "H2"]


def test_total_order_single_variable():
    problem = argmax_problem()
    assert problem.names(total_order(problem)) == ["d"]


def test_total_order_keeps_declaration_order_within_a_stage():
    variables = [
        Variable(0, "A", VariableKind.DECISION, [0, 1], 1),
        Variable(1, "B", VariableKind.DECISION, [0, 1], 1),
        Variable(2, "U", VariableKind.AUXILIARY, [0, 1]),
    ]
    problem = Problem(variables, [], [], 2, Objective.MAXIMIZE)
    assert problem.names(total_order(problem)) == ["A", "B"]


def test_total_order_decisions_before_randoms_and_stages_ascending():
    variables = [
        Variable(0, "r2", VariableKind.RANDOM, [0, 1], 2),
        Variable(1, "r1", VariableKind.RANDOM, [0, 1], 1),
        Variable(2, "d2", VariableKind.DECISION, [0, 1], 2),
        Variable(3, "d1", VariableKind.DECISION, [0, 1], 1),
        Variable(4, "U", VariableKind.AUXILIARY, [0, 1]),
    ]
    problem = Problem(variables, [], [], 4, Objective.MAXIMIZE)
    assert problem.names(total_order(problem)) == ["d1", "r1", "d2", "r2"]
    assert problem.order == total_order(problem)


def test_variable_lookup_by_name():
    problem = gen_production(2, 3)
    assert problem.variable(problem.variable_id("W")).name == "W"
    assert problem.variable(problem.variable_id("U")).is_auxiliary
