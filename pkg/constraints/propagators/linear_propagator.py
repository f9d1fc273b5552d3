"""Bounds consistency for sum(a_i * x_i) <= b and for sum(a_i * x_i) == b, and value filtering for sum(a_i * x_i) != b"""

from bisect import bisect_left, bisect_right

from .propagator import Propagator
from ..exceptions import DomainWipeoutException


class LinearLessEqualPropagator(Propagator):
    def __init__(self, terms: tuple, rhs: int, label: str):
        super().__init__([variable for _, variable in terms], label)
        self.terms = tuple(terms)
        self.rhs = rhs

    def propagate(self, state) -> list[int]:
        """Each term may use at most the slack left by the minimum of all other terms.
           Pruning a term never changes its own minimum contribution, so one pass reaches the fixpoint

        Args:
            state (DomainState): The domains

        Returns:
            list[int]: Changed variables
        """
        domains = state.domains
        minimum = 0
        for coefficient, variable in self.terms:
            domain = domains[variable]
            minimum += coefficient * (domain[0] if coefficient > 0 else domain[-1])
        slack = self.rhs - minimum
        if not self.terms:
            if slack < 0:
                raise DomainWipeoutException(self.label)
            return []

        changed = []
        for coefficient, variable in self.terms:
            domain = domains[variable]
            if coefficient > 0:
                upper = (slack + coefficient * domain[0]) // coefficient
                if domain[-1] > upper:
                    state.set_domain(variable, domain[: bisect_right(domain, upper)])
                    changed.append(variable)
            else:
                remaining = slack + coefficient * domain[-1]
                lower = -(-remaining // coefficient)
                if domain[0] < lower:
                    state.set_domain(variable, domain[bisect_left(domain, lower) :])
                    changed.append(variable)
        return changed


class LinearEqualPropagator(Propagator):
    def __init__(self, terms: tuple, rhs: int, label: str):
        super().__init__([variable for _, variable in terms], label)
        self.terms = tuple(terms)
        self.rhs = rhs

    def propagate(self, state) -> list[int]:
        """Bounds consistency in both directions at once: every term must fit between rhs minus the largest and
           rhs minus the smallest sum of the other terms. Passes repeat until one changes nothing

        Args:
            state (DomainState): The domains

        Returns:
            list[int]: Changed variables
        """
        domains = state.domains
        rhs = self.rhs
        if not self.terms:
            if rhs != 0:
                raise DomainWipeoutException(self.label)
            return []

        changed = {}
        progress = True
        while progress:
            progress = False
            low = high = 0
            for coefficient, variable in self.terms:
                domain = domains[variable]
                if coefficient > 0:
                    low += coefficient * domain[0]
                    high += coefficient * domain[-1]
                else:
                    low += coefficient * domain[-1]
                    high += coefficient * domain[0]

            for coefficient, variable in self.terms:
                domain = domains[variable]
                if coefficient > 0:
                    upper = (rhs - low + coefficient * domain[0]) // coefficient
                    lower = -(-(rhs - high + coefficient * domain[-1]) // coefficient)
                else:
                    lower = -(-(rhs - low + coefficient * domain[-1]) // coefficient)
                    upper = (rhs - high + coefficient * domain[0]) // coefficient
                if domain[0] < lower or domain[-1] > upper:
                    state.set_domain(variable, domain[bisect_left(domain, lower) : bisect_right(domain, upper)])
                    changed[variable] = None
                    progress = True
        return list(changed)


class NotEqualPropagator(Propagator):
    def __init__(self, terms: tuple, rhs: int, label: str):
        super().__init__([variable for _, variable in terms], label)
        self.terms = tuple(terms)
        self.rhs = rhs

    def propagate(self, state) -> list[int]:
        """Only filters once a single variable is left unassigned; before that every value has support

        Args:
            state (DomainState): The domains

        Returns:
            list[int]: Changed variables
        """
        domains = state.domains
        unassigned = None
        fixed_sum = 0
        for coefficient, variable in self.terms:
            domain = domains[variable]
            if len(domain) > 1:
                if unassigned is not None:
                    return []
                unassigned = (coefficient, variable)
            else:
                fixed_sum += coefficient * domain[0]

        if unassigned is None:
            if fixed_sum == self.rhs:
                raise DomainWipeoutException(self.label)
            return []

        coefficient, variable = unassigned
        remaining = self.rhs - fixed_sum
        if remaining % coefficient != 0:
            return []
        forbidden = remaining // coefficient
        domain = domains[variable]
        if forbidden not in domain:
            return []
        state.set_domain(variable, tuple(value for value in domain if value != forbidden))
        return [variable]
