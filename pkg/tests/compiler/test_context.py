from bench import gen_production
from compiler import ContextBuilder, ContextKey, context_key
from constraints import DomainState, PropagationEngine

from tests.problems import argmax_problem

production = gen_production(2, 9)
ids = production.ids_by_name


def state_after(assignments: list[tuple[str, int]]) -> DomainState:
    engine = PropagationEngine(production)
    state = DomainState(production)
    assert engine.propagate(state).ok
    for name, value in assignments:
        assert engine.assign_and_propagate(state, ids[name], value).ok
    return state


def test_root_key_of_an_unconstrained_decision():
    problem = argmax_problem()
    state = DomainState(problem)
    assert PropagationEngine(problem).propagate(state).ok
    assert context_key(state, problem, 0) == ContextKey(0, ())


def test_hidden_state_key_holds_only_the_observed_demands():
    state = state_after([("V1", 2), ("S1", 1), ("V2", 1), ("S2", 2)])
    key = ContextBuilder().key(state, ids["H1"])
    assert key == ContextKey(ids["H1"], ((ids["S1"], (1,)), (ids["S2"], (2,))))


def test_paths_differing_only_in_production_share_a_key():
    builder = ContextBuilder()
    first = builder.key(state_after([("V1", 2), ("S1", 1), ("V2", 1), ("S2", 2)]), ids["H1"])
    second = builder.key(state_after([("V1", 2), ("S1", 1), ("V2", 2), ("S2", 2)]), ids["H1"])
    assert first == second
    assert hash(first) == hash(second)


def test_different_observations_give_different_keys():
    builder = ContextBuilder()
    first = builder.key(state_after([("V1", 2), ("S1", 1), ("V2", 1), ("S2", 2)]), ids["H1"])
    second = builder.key(state_after([("V1", 2), ("S1", 1), ("V2", 2), ("S2", 1)]), ids["H1"])
    assert first != second


def test_serialize():
    key = ContextKey(4, ((1, (1,)), (3, (0, 2))))
    assert key.serialize() == b"4|1:1|3:0,2"
    assert ContextKey(0).serialize() == b"0"
