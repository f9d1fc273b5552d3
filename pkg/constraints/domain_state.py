"""DomainState: the current value set of every variable, backed by a trail.
Domains are sorted tuples; a variable is assigned iff its tuple has exactly one value.
The factor bookkeeping (unassigned counts, active degrees, restricted variables) is kept in step with the
domains by set_domain and restore, so callers never rescan factor scopes
"""

from model import Problem, VariableKind

from .exceptions import DomainWipeoutException, RandomReductionException, StaleCheckpointException


class DomainState:
    def __init__(self, problem: Problem):
        self.problem = problem
        self.domains: list[tuple] = [tuple(variable.domain) for variable in problem.variables]
        self.random: list[bool] = [variable.kind is VariableKind.RANDOM for variable in problem.variables]
        self.declared_sizes: list[int] = [len(domain) for domain in self.domains]
        self.trail: list[tuple[int, tuple]] = []
        self.marks: list[tuple[int, int]] = []

        # Factor ids follow problem.all_factors: CPTs first, then constraints
        self.scopes: list[tuple] = [tuple(dict.fromkeys(factor.scope)) for factor in problem.all_factors]
        self.factors_of: list[list[int]] = [[] for _ in problem.variables]
        for index, scope in enumerate(self.scopes):
            for variable_id in scope:
                self.factors_of[variable_id].append(index)
        self.unassigned_counts: list[int] = [sum(1 for variable_id in scope if len(self.domains[variable_id]) > 1) for scope in self.scopes]
        self.active_degree: list[int] = [0] * len(problem.variables)
        for index, scope in enumerate(self.scopes):
            if self.unassigned_counts[index]:
                for variable_id in scope:
                    self.active_degree[variable_id] += 1
        self.restricted: set[int] = set()

    def domain(self, variable_id: int) -> tuple:
        return self.domains[variable_id]

    def is_assigned(self, variable_id: int) -> bool:
        return len(self.domains[variable_id]) == 1

    def value(self, variable_id: int) -> int:
        """The value of an assigned variable"""
        return self.domains[variable_id][0]

    def is_active(self, factor_index: int) -> bool:
        """A factor is active while some variable of its scope is unassigned"""
        return self.unassigned_counts[factor_index] > 0

    def set_domain(self, variable_id: int, values: tuple, branching: bool = False) -> bool:
        """Replaces the current set of a variable with a subset of it, recording the old set on the trail

        Args:
            variable_id (int): The variable
            values (tuple): The new, sorted, subset of the current set
            branching (bool): True when the search itself assigns the variable. Branching on a random variable is
                              an observation, so the random-reduction rule does not apply to it

        Raises:
            DomainWipeoutException: The new set is empty
            RandomReductionException: Propagation tried to shrink an unassigned random variable

        Returns:
            bool: True if the domain changed
        """
        old = self.domains[variable_id]
        if len(values) == len(old):
            return False
        if len(values) == 0:
            raise DomainWipeoutException(self.problem.variables[variable_id].name)
        if self.random[variable_id] and not branching and len(old) > 1:
            raise RandomReductionException(self.problem.variables[variable_id].name)
        self.trail.append((variable_id, old))
        self.domains[variable_id] = values
        if len(old) == self.declared_sizes[variable_id]:
            self.restricted.add(variable_id)
        if len(values) == 1:
            self._on_assigned(variable_id)
        return True

    def _on_assigned(self, variable_id: int):
        counts = self.unassigned_counts
        for index in self.factors_of[variable_id]:
            counts[index] -= 1
            if counts[index] == 0:
                for other in self.scopes[index]:
                    self.active_degree[other] -= 1

    def _on_unassigned(self, variable_id: int):
        counts = self.unassigned_counts
        for index in self.factors_of[variable_id]:
            if counts[index] == 0:
                for other in self.scopes[index]:
                    self.active_degree[other] += 1
            counts[index] += 1

    def checkpoint(self) -> tuple[int, int]:
        """Marks the current state. Marks nest and must be restored innermost first

        Returns:
            tuple[int, int]: The mark (nesting depth, trail length)
        """
        mark = (len(self.marks), len(self.trail))
        self.marks.append(mark)
        return mark

    def restore(self, mark: tuple[int, int]):
        """Undoes every change made since mark, which must be the innermost open checkpoint

        Args:
            mark (tuple[int, int]): The mark returned by checkpoint()
        """
        if not self.marks or self.marks[-1] != mark:
            raise StaleCheckpointException(mark, self.marks[-1] if self.marks else None)
        self.marks.pop()
        trail = self.trail
        domains = self.domains
        while len(trail) > mark[1]:
            variable_id, old = trail.pop()
            if len(domains[variable_id]) == 1:
                self._on_unassigned(variable_id)
            domains[variable_id] = old
            if len(old) == self.declared_sizes[variable_id]:
                self.restricted.discard(variable_id)

    def assigned_since(self, position: int) -> list[int]:
        """Variables that became singletons after the trail held position entries

        Args:
            position (int): A trail length, usually the second half of a mark

        Returns:
            list[int]: The variables, each once, in the order they were first reduced
        """
        domains = self.domains
        return list(dict.fromkeys(variable_id for variable_id, old in self.trail[position:] if len(old) > 1 and len(domains[variable_id]) == 1))

    def snapshot(self) -> tuple:
        """Copy of every current set, for comparisons in tests and logs"""
        return tuple(self.domains)
