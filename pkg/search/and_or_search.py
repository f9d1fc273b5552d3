"""AndOrSearch: depth-first And-Or search over the total variable order.

1. Propagate the initial state; the root gets a virtual incoming edge carrying whatever fired there
2. At each node, branch on the first unassigned variable of the order (Or node for decisions, And node for random)
3. And nodes sum w * value over their children and fail as soon as one child fails
4. Or nodes keep the best w * value (strict comparison, so ties go to the smallest value) and fail only when every child fails
5. With a cache, the context of a node is looked up before expanding it and stored after

Tree search and diagram compilation are this same class with a different builder and with or without a cache
"""

import time

import attr

import constants
from constraints import DomainState, PropagationEngine
from model import Objective, Problem
from utils.logging_utils import Logger
from utils.stats import SearchStats

from .builders import TreeBuilder
from .exceptions import SearchTimeoutException, UnfixedAuxiliaryException
from .weights import ONE, ZERO, EdgeWeight, WeightTracker

FAILED = (None, None)


@attr.s(auto_attribs=True)
class SearchOutcome:
    structure: object
    value: float
    root_weight: EdgeWeight
    stats: SearchStats

    @property
    def feasible(self) -> bool:
        return self.value is not None


class AndOrSearch:
    def __init__(self, problem: Problem, builder=None, cache=None, contexts=None, timeout: float = None, prune_zero_weight: bool = constants.PRUNE_ZERO_WEIGHT):
        """Sets up a search over problem

        Args:
            problem (Problem): A validated problem
            builder (optional): Receives the nodes. Defaults to a TreeBuilder
            cache (Cache, optional): Context cache. Defaults to None (plain tree search)
            contexts (ContextBuilder, optional): Computes the context keys, required with a cache
            timeout (float, optional): Seconds before the search gives up. Defaults to None
            prune_zero_weight (bool, optional): Skip And children whose edge weight is exactly 0
        """
        self.problem = problem
        self.builder = builder if builder is not None else TreeBuilder()
        self.cache = cache
        self.contexts = contexts
        self.timeout = timeout
        self.prune_zero_weight = prune_zero_weight

        self.order = problem.order
        self.engine = PropagationEngine(problem)
        self.weights = WeightTracker(problem)
        self.maximize = problem.objective is Objective.MAXIMIZE
        self.is_random = [variable.is_random for variable in problem.variables]
        self.auxiliaries = [variable.id for variable in problem.variables if variable.is_auxiliary]
        self.stats = SearchStats(mode="tree" if cache is None else "dd")
        self.logger = Logger().get_solver_logger().getChild(__name__)

        self.state = None
        self.deadline = None

    def run(self) -> SearchOutcome:
        """Runs the search from the root

        Raises:
            SearchTimeoutException: The timeout elapsed
            UnfixedAuxiliaryException: An auxiliary variable is not fixed on a complete path

        Returns:
            SearchOutcome: The builder's result, the root value (None when infeasible) and the stats
        """
        self.logger.info(f"Starting {self.stats.mode} search on {self.problem.name} ({len(self.order)} branching variables)")
        start = time.monotonic()
        self.deadline = start + self.timeout if self.timeout is not None else None
        self.state = DomainState(self.problem)

        structure = None
        value = None
        root_weight = ONE
        try:
            result = self.engine.propagate(self.state)
            if not result.ok:
                self.logger.info(f"Initial propagation failed: {result}")
                self.stats.failure_count += 1
            else:
                root_weight = self.weights.root(self.state)
                root, root_value = self._solve(0)
                if root_value is not None:
                    value = root_weight.weight * root_value
                    structure = self.builder.finish(root, root_weight, root_value)
        finally:
            self.stats.elapsed = time.monotonic() - start
            if self.cache is not None:
                self.stats.cache_entries = len(self.cache)
                self.stats.cache_hits = self.cache.hits
                self.stats.cache_misses = self.cache.misses
                self.stats.hits_by_variable = {self.problem.variables[variable_id].name: hits for variable_id, hits in sorted(self.cache.hits_by_variable.items())}

        self.logger.info(f"Finished {self.stats.mode} search: value={value}, expanded={self.stats.nodes_expanded}, leaves={self.stats.leaf_count}, failures={self.stats.failure_count}")
        if self.cache is not None:
            self.logger.info(f"Cache: entries={self.stats.cache_entries}, hits={self.stats.cache_hits}, misses={self.stats.cache_misses}")
        return SearchOutcome(structure, value, root_weight, self.stats)

    def _solve(self, position: int) -> tuple:
        """Solves the subproblem below the current state

        Args:
            position (int): Index in the order of the first variable that may still be unassigned

        Returns:
            tuple: (node reference, value). The value is None for a failure; the reference is None when the
                   failure came from an And node that exited early, since no node is kept for it
        """
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise SearchTimeoutException(self.timeout, self.stats.nodes_expanded)

        state = self.state
        domains = state.domains
        order = self.order
        while position < len(order) and len(domains[order[position]]) == 1:
            position += 1
        if position == len(order):
            return self._leaf()

        variable_id = order[position]
        key = None
        if self.cache is not None:
            key = self.contexts.key(state, variable_id)
            entry = self.cache.lookup(key)
            if entry is not None:
                return entry

        self.stats.nodes_expanded += 1
        is_and = self.is_random[variable_id]
        edges = []
        total = 0.0
        best = None
        for value in domains[variable_id]:
            mark = state.checkpoint()
            weight = ZERO
            child = FAILED
            if self.engine.assign_and_propagate(state, variable_id, value).ok:
                weight = self.weights.step(state, mark[1])
                if is_and and self.prune_zero_weight and weight.weight == 0.0:
                    state.restore(mark)
                    continue
                child = self._solve(position + 1)
            state.restore(mark)

            child_ref, child_value = child
            if child_value is None:
                self.stats.failure_count += 1
                if is_and:
                    self.logger.debug(f"And node {self.problem.variables[variable_id].name} fails on value {value}")
                    return FAILED
                edges.append((value, ZERO, child_ref if child_ref is not None else self.builder.failure()))
                continue

            contribution = weight.weight * child_value
            edges.append((value, weight, child_ref))
            if is_and:
                total += contribution
            elif best is None or (contribution > best if self.maximize else contribution < best):
                best = contribution

        node_value = total if is_and else best
        if node_value is None:
            entry = (self.builder.failure(), None)
        else:
            entry = (self.builder.internal(is_and, variable_id, edges, node_value), node_value)
        if self.cache is not None:
            self.cache.store(key, entry)
        return entry

    def _leaf(self) -> tuple:
        domains = self.state.domains
        for variable_id in self.auxiliaries:
            if len(domains[variable_id]) != 1:
                raise UnfixedAuxiliaryException(self.problem.variables[variable_id].name, domains[variable_id])
        self.stats.leaf_count += 1
        return (self.builder.leaf(), 1.0)


def solve_tree(problem: Problem, timeout: float = None, prune_zero_weight: bool = constants.PRUNE_ZERO_WEIGHT) -> tuple:
    """Plain And-Or tree search, no caching

    Args:
        problem (Problem): A validated problem
        timeout (float, optional): Seconds before giving up. Defaults to None
        prune_zero_weight (bool, optional): Skip And children with weight exactly 0

    Returns:
        tuple: (root value or None when infeasible, SearchStats). stats.size holds the tree node counts
    """
    outcome = AndOrSearch(problem, TreeBuilder(), timeout=timeout, prune_zero_weight=prune_zero_weight).run()
    if outcome.structure is not None:
        outcome.stats.size = outcome.structure.to_dict()
    return outcome.value, outcome.stats
