"""Edge weights: every CPT contributes its value on the edge where its scope becomes fully assigned, and the
utility variable contributes its value on the edge where it becomes a singleton. Each fires once per path
"""

import attr

from model import Problem


@attr.s(frozen=True, auto_attribs=True)
class EdgeWeight:
    probability: float = 1.0
    utility: float = None

    @property
    def weight(self) -> float:
        if self.utility is None:
            return self.probability
        return self.probability * self.utility


ONE = EdgeWeight()
ZERO = EdgeWeight(0.0)


@attr.s(frozen=True, auto_attribs=True)
class WeightSnapshot:
    """What has not fired yet on the path to a node"""

    pending: tuple
    utility_fired: bool = False

    @classmethod
    def initial(cls, problem: Problem) -> "WeightSnapshot":
        return cls(tuple(range(len(problem.factors))), False)


class WeightTracker:
    def __init__(self, problem: Problem):
        self.problem = problem
        self.scopes = [cpt.scope for cpt in problem.factors]
        self.tables = [cpt.table() for cpt in problem.factors]
        self.utility_variable = problem.utility_variable
        # CPT ids share their index with the factor ids of DomainState since CPTs come first
        self.watchers: list[list[int]] = [[] for _ in problem.variables]
        for index, scope in enumerate(self.scopes):
            for variable_id in dict.fromkeys(scope):
                self.watchers[variable_id].append(index)

    def _value(self, index: int, domains: list) -> float:
        return self.tables[index][tuple(domains[variable][0] for variable in self.scopes[index])]

    def root(self, state) -> EdgeWeight:
        """Weight of the root's virtual edge: every CPT already fully assigned, and the utility if it is fixed

        Args:
            state (DomainState): The propagated initial state

        Returns:
            EdgeWeight: The weight
        """
        domains = state.domains
        probability = 1.0
        for index in range(len(self.scopes)):
            if not state.is_active(index):
                probability *= self._value(index, domains)
        utility = None
        if len(domains[self.utility_variable]) == 1:
            utility = float(domains[self.utility_variable][0])
        return EdgeWeight(probability, utility)

    def step(self, state, since: int) -> EdgeWeight:
        """Weight of an edge from the variables it assigned. A CPT fires when its last unassigned scope
           variable is assigned and the utility fires when it becomes a singleton, so each fires once per path

        Args:
            state (DomainState): The post-propagation state below the edge
            since (int): Trail length above the edge

        Returns:
            EdgeWeight: The weight
        """
        domains = state.domains
        counts = state.unassigned_counts
        utility = None
        fired = set()
        for variable_id in state.assigned_since(since):
            if variable_id == self.utility_variable:
                utility = float(domains[variable_id][0])
            fired.update(index for index in self.watchers[variable_id] if counts[index] == 0)
        probability = 1.0
        for index in sorted(fired):
            probability *= self._value(index, domains)
        return EdgeWeight(probability, utility)

    def edge(self, before: WeightSnapshot, state) -> tuple[EdgeWeight, WeightSnapshot]:
        """Weight of the edge leading into state, and the snapshot for the node below it, by checking every
           CPT still pending in before

        Args:
            before (WeightSnapshot): The snapshot of the parent node
            state (DomainState): The post-propagation state of the child

        Returns:
            tuple[EdgeWeight, WeightSnapshot]: The weight and the child's snapshot
        """
        domains = state.domains
        probability = 1.0
        still_pending = []
        for index in before.pending:
            if all(len(domains[variable]) == 1 for variable in self.scopes[index]):
                probability *= self._value(index, domains)
            else:
                still_pending.append(index)

        utility = None
        fired = before.utility_fired
        if not fired and len(domains[self.utility_variable]) == 1:
            utility = float(domains[self.utility_variable][0])
            fired = True
        return EdgeWeight(probability, utility), WeightSnapshot(tuple(still_pending), fired)


def edge_weight(before: WeightSnapshot, after, problem: Problem, utility_already_fired: bool) -> tuple[EdgeWeight, bool]:
    """Computes the weight of one edge

    Args:
        before (WeightSnapshot): CPTs that still had an unassigned scope variable above the edge
        after (DomainState): The post-propagation state below the edge
        problem (Problem): The problem
        utility_already_fired (bool): Whether the utility was applied higher on the path

    Returns:
        tuple[EdgeWeight, bool]: The weight and whether the utility factor was applied on this edge
    """
    snapshot = WeightSnapshot(before.pending, utility_already_fired or before.utility_fired)
    weight, _ = WeightTracker(problem).edge(snapshot, after)
    return weight, weight.utility is not None
