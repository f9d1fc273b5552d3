"""Small hand-built problems shared by the tests"""

from model import Cpt, CptRow, LinearConstraint, Objective, Problem, Relation, TableConstraint, Variable, VariableKind

DECISION = VariableKind.DECISION
RANDOM = VariableKind.RANDOM
AUXILIARY = VariableKind.AUXILIARY


def argmax_problem(objective: Objective = Objective.MAXIMIZE) -> Problem:
    """d in {1, 2}, U = d"""
    variables = [Variable(0, "d", DECISION, [1, 2], 1), Variable(1, "U", AUXILIARY, [1, 2])]
    constraints = [LinearConstraint([(1, 1), (-1, 0)], Relation.EQ, 0)]
    return Problem(variables, [], constraints, 1, objective, "argmax")


def expectation_problem() -> Problem:
    """s in {1, 2} with P = (0.3, 0.7), U = s"""
    variables = [Variable(0, "s", RANDOM, [1, 2], 1), Variable(1, "U", AUXILIARY, [1, 2])]
    cpts = [Cpt(0, [], [CptRow([], {1: 0.3, 2: 0.7})])]
    constraints = [LinearConstraint([(1, 1), (-1, 0)], Relation.EQ, 0)]
    return Problem(variables, cpts, constraints, 1, Objective.MAXIMIZE, "expectation")


def surplus_problem() -> Problem:
    """V1 in {1, 2} then random S1 in {1, 2}; W = V1 - S1 with W in {0, 1, 2}; U = W"""
    variables = [
        Variable(0, "V1", DECISION, [1, 2], 1),
        Variable(1, "S1", RANDOM, [1, 2], 1),
        Variable(2, "W", AUXILIARY, [0, 1, 2]),
        Variable(3, "U", AUXILIARY, [0, 1, 2]),
    ]
    cpts = [Cpt(1, [], [CptRow([], {1: 0.5, 2: 0.5})])]
    constraints = [LinearConstraint([(1, 2), (-1, 0), (1, 1)], Relation.EQ, 0), LinearConstraint([(1, 3), (-1, 2)], Relation.EQ, 0)]
    return Problem(variables, cpts, constraints, 3, Objective.MINIMIZE, "surplus")


def capped_problem() -> Problem:
    """V1 in {1, 2}, random S1 in {1, 2} with S1 <= V1, U = V1"""
    variables = [Variable(0, "V1", DECISION, [1, 2], 1), Variable(1, "S1", RANDOM, [1, 2], 1), Variable(2, "U", AUXILIARY, [1, 2])]
    cpts = [Cpt(1, [], [CptRow([], {1: 0.4, 2: 0.6})])]
    constraints = [LinearConstraint([(1, 1), (-1, 0)], Relation.LE, 0), LinearConstraint([(1, 2), (-1, 0)], Relation.EQ, 0)]
    return Problem(variables, cpts, constraints, 2, Objective.MAXIMIZE, "capped")


def table_problem() -> Problem:
    """x, y decisions in {0, 1}; (x, y, U) must be one of (0, 1, 1), (1, 0, 1), (1, 1, 2)"""
    variables = [Variable(0, "x", DECISION, [0, 1], 1), Variable(1, "y", DECISION, [0, 1], 1), Variable(2, "U", AUXILIARY, [0, 1, 2])]
    constraints = [TableConstraint([0, 1, 2], [(0, 1, 1), (1, 0, 1), (1, 1, 2)])]
    return Problem(variables, [], constraints, 2, Objective.MAXIMIZE, "table")


def trap_problem() -> Problem:
    """Random s in {0, 1, 2} then decision d in {0, 2}, with s + d != 2 and s + d != 4. s = 2 leaves d no value,
    but nothing is pruned before s is branched on
    """
    variables = [Variable(0, "s", RANDOM, [0, 1, 2], 1), Variable(1, "d", DECISION, [0, 2], 2), Variable(2, "U", AUXILIARY, [0, 2])]
    cpts = [Cpt(0, [], [CptRow([], {0: 0.2, 1: 0.3, 2: 0.5})])]
    constraints = [
        LinearConstraint([(1, 0), (1, 1)], Relation.NE, 2),
        LinearConstraint([(1, 0), (1, 1)], Relation.NE, 4),
        LinearConstraint([(1, 2), (-1, 1)], Relation.EQ, 0),
    ]
    return Problem(variables, cpts, constraints, 2, Objective.MAXIMIZE, "trap")


def zero_probability_problem() -> Problem:
    """Random s in {0, 1} with P(s = 1) = 0, then d in {0, 1}; U = s + d"""
    variables = [Variable(0, "s", RANDOM, [0, 1], 1), Variable(1, "d", DECISION, [0, 1], 2), Variable(2, "U", AUXILIARY, [0, 1, 2])]
    cpts = [Cpt(0, [], [CptRow([], {0: 1.0, 1: 0.0})])]
    constraints = [LinearConstraint([(1, 2), (-1, 0), (-1, 1)], Relation.EQ, 0)]
    return Problem(variables, cpts, constraints, 2, Objective.MAXIMIZE, "zero-probability")


def negate_utility(problem: Problem) -> Problem:
    """Same problem with the utility replaced by its negation and the objective sense swapped"""
    utility = problem.variables[problem.utility_variable]
    negated = Variable(len(problem.variables), "negated_utility", AUXILIARY, sorted(-value for value in utility.domain))
    constraint = LinearConstraint([(1, negated.id), (1, utility.id)], Relation.EQ, 0)
    objective = Objective.MINIMIZE if problem.objective is Objective.MAXIMIZE else Objective.MAXIMIZE
    return Problem(problem.variables + (negated,), problem.factors, problem.constraints + (constraint,), negated.id, objective, f"{problem.name}-negated")


def dead_end_problem() -> Problem:
    """Decision a in {0, 1, 2} with U = a, then decision d in {0, 2}, then random s in {0, 1, 2} with s + d != 2 and
    s + d != 4. Every d rules out a value of s, so the d node fails under every a, always with the same context
    """
    variables = [
        Variable(0, "a", DECISION, [0, 1, 2], 1),
        Variable(1, "d", DECISION, [0, 2], 2),
        Variable(2, "s", RANDOM, [0, 1, 2], 3),
        Variable(3, "U", AUXILIARY, [0, 1, 2]),
    ]
    cpts = [Cpt(2, [], [CptRow([], {0: 0.2, 1: 0.3, 2: 0.5})])]
    constraints = [
        LinearConstraint([(1, 3), (-1, 0)], Relation.EQ, 0),
        LinearConstraint([(1, 2), (1, 1)], Relation.NE, 2),
        LinearConstraint([(1, 2), (1, 1)], Relation.NE, 4),
    ]
    return Problem(variables, cpts, constraints, 3, Objective.MAXIMIZE, "dead-end")
