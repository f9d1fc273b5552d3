"""PropagationEngine: runs the propagators of a problem to a fixpoint.
Propagators are scheduled from per-variable watch lists; a propagator is never rescheduled by its own changes
since every propagator reaches its own fixpoint in one call
"""

from collections import deque
from enum import Enum

import attr

from model import LinearConstraint, Problem, Relation, TableConstraint

from .domain_state import DomainState
from .exceptions import PropagationFailureException
from .propagators import LinearEqualPropagator, LinearLessEqualPropagator, NotEqualPropagator, Propagator, TablePropagator


class PropagationStatus(Enum):
    STABLE = "stable"
    EMPTY_DOMAIN = "empty-domain"
    RANDOM_REDUCTION = "random-reduction"


@attr.s(frozen=True, auto_attribs=True)
class PropagationResult:
    status: PropagationStatus
    variable_name: str = None

    @property
    def ok(self) -> bool:
        return self.status is PropagationStatus.STABLE

    @property
    def reason(self) -> str:
        return self.status.value

    def __str__(self):
        if self.ok:
            return "stable"
        return f"failure({self.reason} on {self.variable_name})"


STABLE = PropagationResult(PropagationStatus.STABLE)


def build_propagators(problem: Problem) -> list[Propagator]:
    """One propagator per == constraint, one per <= form of each other linear constraint, one per != constraint and one per table

    Args:
        problem (Problem): The problem

    Returns:
        list[Propagator]: The propagators
    """
    propagators = []
    for index, constraint in enumerate(problem.constraints):
        label = f"constraint {index}"
        if isinstance(constraint, TableConstraint):
            propagators.append(TablePropagator(constraint.scope, constraint.allowed, label))
        elif isinstance(constraint, LinearConstraint) and constraint.relation is Relation.NE:
            propagators.append(NotEqualPropagator(constraint.merged_terms(), constraint.rhs, label))
        elif isinstance(constraint, LinearConstraint) and constraint.relation is Relation.EQ:
            propagators.append(LinearEqualPropagator(constraint.merged_terms(), constraint.rhs, label))
        elif isinstance(constraint, LinearConstraint):
            for terms, rhs in constraint.less_equal_forms():
                propagators.append(LinearLessEqualPropagator(terms, rhs, label))
        else:
            raise Exception(f"Unknown constraint type: {type(constraint).__name__}")
    return propagators


class PropagationEngine:
    def __init__(self, problem: Problem):
        self.problem = problem
        self.propagators = build_propagators(problem)
        self.watchers: list[list[int]] = [[] for _ in problem.variables]
        for index, propagator in enumerate(self.propagators):
            for variable_id in propagator.variables:
                self.watchers[variable_id].append(index)

    def propagate(self, state: DomainState, changed_variables: list[int] = None) -> PropagationResult:
        """Runs propagation until no propagator changes a domain

        Args:
            state (DomainState): The state, modified in place
            changed_variables (list[int], optional): Only wake the propagators watching these variables.
                                                     Defaults to None, which runs every propagator

        Returns:
            PropagationResult: stable, or the failure reason. On failure the state must be restored by the caller
        """
        if changed_variables is None:
            queue = deque(range(len(self.propagators)))
            queued = [True] * len(self.propagators)
        else:
            queue = deque()
            queued = [False] * len(self.propagators)
            for variable_id in changed_variables:
                for index in self.watchers[variable_id]:
                    if not queued[index]:
                        queued[index] = True
                        queue.append(index)

        try:
            while queue:
                index = queue.popleft()
                queued[index] = False
                for variable_id in self.propagators[index].propagate(state):
                    for watcher in self.watchers[variable_id]:
                        if watcher != index and not queued[watcher]:
                            queued[watcher] = True
                            queue.append(watcher)
        except PropagationFailureException as failure:
            return PropagationResult(PropagationStatus(failure.reason), failure.variable_name)
        return STABLE

    def assign_and_propagate(self, state: DomainState, variable_id: int, value: int, incremental: bool = True) -> PropagationResult:
        """Assigns value to the variable, then propagates. The assignment itself is never a random reduction

        Args:
            state (DomainState): The state, modified in place
            variable_id (int): The variable
            value (int): A value from the current set of the variable
            incremental (bool, optional): Only wake the propagators watching the variable. Requires the state
                                          to be at a fixpoint before the call. Defaults to True

        Raises:
            ValueError: value is not in the current set

        Returns:
            PropagationResult: As propagate
        """
        if value not in state.domains[variable_id]:
            raise ValueError(f"{value} is not in the current set of {self.problem.variables[variable_id].name}")
        state.set_domain(variable_id, (value,), branching=True)
        return self.propagate(state, [variable_id] if incremental else None)


def propagate(state: DomainState, problem: Problem) -> PropagationResult:
    return PropagationEngine(problem).propagate(state)


def assign_and_propagate(state: DomainState, variable_id: int, value: int, problem: Problem) -> PropagationResult:
    return PropagationEngine(problem).assign_and_propagate(state, variable_id, value, incremental=False)
