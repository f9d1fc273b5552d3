"""Context keys: the branching variable plus the current sets of the restricted variables in active factor scopes.
A factor is active while some variable of its scope is unassigned. A variable is restricted when its current set
is smaller than its declared domain; unrestricted variables carry no information and are left out
"""

import attr

from model import Problem


@attr.s(frozen=True, auto_attribs=True, cache_hash=True)
class ContextKey:
    next_var: int
    restrictions: tuple = ()

    def serialize(self) -> bytes:
        """Canonical byte form. Two keys are equal iff their serializations are equal

        Returns:
            bytes: The serialized key
        """
        parts = [str(self.next_var)]
        for variable_id, values in self.restrictions:
            parts.append(f"{variable_id}:{','.join(str(value) for value in values)}")
        return "|".join(parts).encode("utf-8")


class ContextBuilder:
    """Reads the key off the factor bookkeeping of DomainState: the restricted variables whose active degree is nonzero"""

    def key(self, state, next_var: int) -> ContextKey:
        domains = state.domains
        active_degree = state.active_degree
        restrictions = tuple((variable_id, domains[variable_id]) for variable_id in sorted(state.restricted) if active_degree[variable_id])
        return ContextKey(next_var, restrictions)


def context_key(state, problem: Problem, next_var: int) -> ContextKey:
    """Computes the context of the node about to branch on next_var

    Args:
        state (DomainState): A stable state
        problem (Problem): The problem the state was built for
        next_var (int): The variable about to be branched on

    Raises:
        ValueError: The state belongs to another problem

    Returns:
        ContextKey: The key, restrictions sorted by variable id with values ascending
    """
    if state.problem is not problem:
        raise ValueError(f"State was built for {state.problem.name}, not {problem.name}")
    return ContextBuilder().key(state, next_var)
