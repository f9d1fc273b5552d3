from bench import gen_knapsack, gen_production, GenSpec, Family, Variant
from model import LinearConstraint, Objective, Problem, Relation, Variable, VariableKind, factor_graph


def test_surplus_constraint_factor_neighbors():
    graph = factor_graph(gen_production(2, 5))
    assert graph.factor_neighbors("f5") == {"V1", "S1", "W"}
    assert graph.factor_neighbors("f6") == {"W", "V2", "S2", "U"}
    assert graph.factor_neighbors("f2") == {"H1", "S1"}


def test_zero_factors():
    variables = [Variable(0, "d", VariableKind.DECISION, [0, 1], 1), Variable(1, "U", VariableKind.AUXILIARY, [0, 1])]
    graph = factor_graph(Problem(variables, [], [], 1, Objective.MAXIMIZE))
    assert len(graph.variable_nodes) == 2
    assert graph.factor_nodes == []
    assert graph.edge_count == 0


def test_full_scope_factor_is_a_star():
    variables = [Variable(index, f"x{index}", VariableKind.DECISION, [0, 1], 1) for index in range(4)]
    variables.append(Variable(4, "U", VariableKind.AUXILIARY, range(5)))
    constraint = LinearConstraint([(1, 4)] + [(-1, index) for index in range(4)], Relation.EQ, 0)
    graph = factor_graph(Problem(variables, [], [constraint], 4, Objective.MAXIMIZE))
    assert graph.factor_neighbors("f1") == {"x0", "x1", "x2", "x3", "U"}
    assert graph.edge_count == 5


def test_edge_count_is_sum_of_scope_sizes_and_graph_is_bipartite():
    problem = gen_knapsack(GenSpec(Family.KNAPSACK, Variant.CHAIN, 3, 1))
    graph = factor_graph(problem)
    assert graph.edge_count == sum(len(factor.scope) for factor in problem.all_factors)
    assert len(graph.factor_nodes) == len(problem.all_factors)
    assert graph.is_bipartite()
