import pytest

import constants
from bench import Family, GenSpec, Variant, gen_knapsack, gen_production, gen_random
from compiler import Cache, Compiler, ContextKey, cache_report, compile_aodd
from constraints import DomainState, PropagationEngine
from diagram import NodeKind, check_structure, evaluate, extract_policy
from search import AndOrSearch, solve_tree

from tests.problems import argmax_problem, dead_end_problem, expectation_problem, trap_problem


@pytest.mark.parametrize("seed", [0, 5, 12])
def test_compile_matches_tree_search(seed):
    problem = gen_production(2, seed)
    dd, dd_stats = compile_aodd(problem)
    value, tree_stats = solve_tree(problem)
    assert abs(dd.value - value) <= constants.VALUE_TOLERANCE
    assert dd_stats.size["node_count"] <= tree_stats.size["node_count"]
    assert dd_stats.size["tree_node_count"] == tree_stats.size["node_count"]


def test_hidden_state_is_shared_across_productions():
    _, stats = compile_aodd(gen_production(2, 3))
    assert stats.hits_by_variable.get("H1", 0) >= 2
    assert stats.cache_hits == sum(stats.hits_by_variable.values())
    assert stats.mode == "dd"


def test_nothing_to_share():
    dd, stats = compile_aodd(argmax_problem())
    assert dd.value == 2.0
    assert stats.cache_hits == 0
    assert stats.cache_entries == 1
    assert stats.size["node_count"] == 3


def test_compiled_diagram_is_well_formed_and_reevaluates():
    problem = gen_knapsack(GenSpec(Family.KNAPSACK, Variant.HIDDEN, 3, 2))
    dd, _ = compile_aodd(problem)
    check_structure(dd)
    assert abs(evaluate(dd, problem.objective) - dd.value) <= constants.VALUE_TOLERANCE


def test_infeasible_problem_has_no_diagram():
    dd, stats = compile_aodd(trap_problem())
    assert dd is None
    assert stats.cache_misses >= 1


def test_each_run_gets_a_fresh_cache():
    compiler = Compiler(expectation_problem())
    assert cache_report(compiler.cache) == {"entries": 0, "hits": 0, "misses": 0, "hit_rate": 0.0}
    outcome = compiler.run()
    assert outcome.value == pytest.approx(1.7)
    assert cache_report(Compiler(expectation_problem()).cache)["entries"] == 0


def test_cache_keeps_the_first_entry():
    cache = Cache()
    key = ContextKey(1, ((0, (2,)),))
    assert cache.lookup(key) is None
    cache.store(key, ("first", 1.0))
    cache.store(key, ("second", 2.0))
    assert cache.lookup(key) == ("first", 1.0)
    assert cache_report(cache) == {"entries": 1, "hits": 1, "misses": 1, "hit_rate": 0.5}
    assert cache.hits_by_variable[1] == 1


def compile_rechecking_hits(problem) -> tuple:
    """Compiles problem, and on every cache hit expands the same subproblem again without a cache.
    Returns the outcome and the (cached value, fresh value) pairs"""
    compiler = Compiler(problem)
    lookup = compiler.cache.lookup
    pairs = []

    def rechecking_lookup(key):
        entry = lookup(key)
        if entry is not None:
            fresh = AndOrSearch(problem)
            fresh.state = compiler.search.state
            before = fresh.state.snapshot()
            _, value = fresh._solve(0)
            assert fresh.state.snapshot() == before
            pairs.append((entry[1], value))
        return entry

    compiler.cache.lookup = rechecking_lookup
    return compiler.run(), pairs


@pytest.mark.parametrize("seed", range(60))
def test_cache_hits_equal_a_fresh_expansion_on_random_models(seed):
    outcome, pairs = compile_rechecking_hits(gen_random(seed))
    assert len(pairs) == outcome.stats.cache_hits
    for cached, fresh in pairs:
        assert cached == fresh


@pytest.mark.parametrize("seed", range(8))
def test_cache_hits_equal_a_fresh_expansion_on_production(seed):
    outcome, pairs = compile_rechecking_hits(gen_production(2, seed))
    assert len(pairs) >= 2
    for cached, fresh in pairs:
        assert cached == fresh


def test_cached_failures_fail_again_when_expanded():
    outcome, pairs = compile_rechecking_hits(dead_end_problem())
    assert outcome.value is None
    assert pairs == [(None, None), (None, None)]
    assert outcome.stats.hits_by_variable == {"d": 2}


def complete_paths(dd) -> list[tuple[dict, float]]:
    """(assignment along the path, product of the edge weights including the root's) for every path ending in a leaf"""
    paths = []
    stack = [(dd.root, {}, dd.root_weight.weight)]
    while stack:
        index, assignment, product = stack.pop()
        node = dd.nodes[index]
        if node.kind is NodeKind.LEAF:
            paths.append((assignment, product))
        for edge in node.edges:
            stack.append((edge.child, {**assignment, node.variable: edge.label}, product * edge.weight))
    return paths


def probability_times_utility(problem, assignment: dict) -> float:
    engine = PropagationEngine(problem)
    state = DomainState(problem)
    assert engine.propagate(state).ok
    for variable_id in problem.order:
        if variable_id in assignment:
            assert engine.assign_and_propagate(state, variable_id, assignment[variable_id]).ok
    probability = 1.0
    for cpt in problem.factors:
        probability *= cpt.table()[tuple(state.value(variable_id) for variable_id in cpt.scope)]
    return probability * state.value(problem.utility_variable)


@pytest.mark.parametrize("problem", [gen_production(2, 4), gen_production(3, 1)] + [gen_random(seed) for seed in range(20)], ids=lambda problem: problem.name)
def test_path_weight_product_is_probability_times_utility(problem):
    dd, _ = compile_aodd(problem)
    if dd is None:
        return
    paths = complete_paths(dd)
    assert paths
    for assignment, product in paths:
        assert product == pytest.approx(probability_times_utility(problem, assignment), abs=constants.VALUE_TOLERANCE)


@pytest.mark.parametrize("seed", [0, 3, 9])
def test_second_production_depends_on_first_demand(seed):
    problem = gen_production(2, seed)
    dd, _ = compile_aodd(problem)
    policy = extract_policy(dd, problem.objective)
    assert policy.variable == "V1"
    assert policy.value == 2
    demand = policy.child
    assert demand.variable == "S1"
    assert demand.branch(1).variable == "V2"
    assert demand.branch(1).value == 1
    assert demand.branch(2).value == 2
