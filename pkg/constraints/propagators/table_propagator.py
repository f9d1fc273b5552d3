"""Generalized arc consistency for table constraints: keep exactly the values that appear in some allowed
tuple whose every value is still in the current domains
"""

from .propagator import Propagator


class TablePropagator(Propagator):
    def __init__(self, scope: tuple, allowed: frozenset, label: str):
        variables = []
        for variable in scope:
            if variable not in variables:
                variables.append(variable)
        super().__init__(variables, label)

        # A variable repeated in the scope must take the same value in every position
        positions = [scope.index(variable) for variable in variables]
        self.tuples = []
        for allowed_tuple in sorted(allowed):
            if len(allowed_tuple) != len(scope):
                continue
            if all(allowed_tuple[index] == allowed_tuple[scope.index(variable)] for index, variable in enumerate(scope)):
                self.tuples.append(tuple(allowed_tuple[position] for position in positions))

    def propagate(self, state) -> list[int]:
        domains = state.domains
        current = [domains[variable] for variable in self.variables]
        supported = [set() for _ in self.variables]
        for allowed_tuple in self.tuples:
            for index, value in enumerate(allowed_tuple):
                if value not in current[index]:
                    break
            else:
                for index, value in enumerate(allowed_tuple):
                    supported[index].add(value)

        changed = []
        for index, variable in enumerate(self.variables):
            if len(supported[index]) < len(current[index]):
                state.set_domain(variable, tuple(value for value in current[index] if value in supported[index]))
                changed.append(variable)
        return changed
