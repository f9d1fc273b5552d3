import pytest

from constraints import DomainState, DomainWipeoutException, RandomReductionException, StaleCheckpointException

from tests.problems import surplus_problem

problem = surplus_problem()
V1, S1, W = 0, 1, 2


def test_restore_brings_back_every_domain():
    state = DomainState(problem)
    before = state.snapshot()
    mark = state.checkpoint()
    state.set_domain(V1, (2,), branching=True)
    state.set_domain(W, (0, 1))
    state.restore(mark)
    assert state.snapshot() == before


def test_nested_checkpoints_restore_innermost_first():
    state = DomainState(problem)
    outer = state.checkpoint()
    state.set_domain(V1, (2,), branching=True)
    after_outer = state.snapshot()
    inner = state.checkpoint()
    state.set_domain(S1, (1,), branching=True)
    state.set_domain(W, (1,))
    state.restore(inner)
    assert state.snapshot() == after_outer
    state.restore(outer)
    assert state.domain(V1) == (1, 2)


def test_restoring_outer_mark_first_is_stale():
    state = DomainState(problem)
    outer = state.checkpoint()
    state.checkpoint()
    with pytest.raises(StaleCheckpointException):
        state.restore(outer)


def test_unchanged_domain_is_not_trailed():
    state = DomainState(problem)
    assert not state.set_domain(W, (0, 1, 2))
    assert state.trail == []


def test_empty_domain_raises_wipeout():
    state = DomainState(problem)
    with pytest.raises(DomainWipeoutException) as error:
        state.set_domain(W, ())
    assert error.value.variable_name == "W"


def test_shrinking_unassigned_random_variable_outside_branching():
    state = DomainState(problem)
    with pytest.raises(RandomReductionException):
        state.set_domain(S1, (1,))
    assert state.set_domain(S1, (1,), branching=True)
    assert state.is_assigned(S1)
    assert state.value(S1) == 1


def test_factor_bookkeeping_follows_assignments_and_restores():
    # factors: 0 = CPT of S1, 1 = (W, V1, S1), 2 = (U, W)
    state = DomainState(problem)
    assert state.unassigned_counts == [1, 3, 2]
    assert state.active_degree == [1, 2, 2, 1]
    mark = state.checkpoint()
    state.set_domain(V1, (2,), branching=True)
    state.set_domain(S1, (1,), branching=True)
    assert state.unassigned_counts == [0, 1, 2]
    assert not state.is_active(0)
    assert state.active_degree == [1, 1, 2, 1]
    assert state.restricted == {V1, S1}
    state.set_domain(W, (0, 1))
    state.set_domain(W, (1,))
    assert state.unassigned_counts == [0, 0, 1]
    assert state.active_degree == [0, 0, 1, 1]
    assert state.assigned_since(0) == [V1, S1, W]
    assert state.assigned_since(2) == [W]
    state.restore(mark)
    assert state.unassigned_counts == [1, 3, 2]
    assert state.active_degree == [1, 2, 2, 1]
    assert state.restricted == set()
    assert state.assigned_since(0) == []


def test_partial_reduction_is_restricted_but_not_assigned():
    state = DomainState(problem)
    state.set_domain(W, (0, 1))
    assert state.restricted == {W}
    assert state.unassigned_counts == [1, 3, 2]
    assert state.assigned_since(0) == []
