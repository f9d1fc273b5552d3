"""Compiler: And-Or search with context caching. Same search as the tree mode, but the nodes are kept in a
DiagramBuilder and every expanded subproblem is cached under its context, so equal subproblems share one node
"""

import constants
from diagram import AODD, DiagramBuilder, stats
from model import Problem
from search import AndOrSearch, SearchOutcome
from utils.logging_utils import Logger

from .cache import Cache
from .context import ContextBuilder


class Compiler:
    def __init__(self, problem: Problem, timeout: float = None, prune_zero_weight: bool = constants.PRUNE_ZERO_WEIGHT):
        """Initializes the compiler with a fresh cache. The cache lives for one run

        Args:
            problem (Problem): A validated problem
            timeout (float, optional): Seconds before giving up. Defaults to None
            prune_zero_weight (bool, optional): Skip And children with weight exactly 0
        """
        self.problem = problem
        self.cache = Cache()
        self.search = AndOrSearch(
            problem,
            DiagramBuilder(problem),
            cache=self.cache,
            contexts=ContextBuilder(),
            timeout=timeout,
            prune_zero_weight=prune_zero_weight,
        )
        self.logger = Logger().get_solver_logger().getChild(__name__)

    def run(self) -> SearchOutcome:
        outcome = self.search.run()
        if outcome.structure is not None:
            outcome.stats.size = stats(outcome.structure)
            self.logger.info(f"Diagram: {outcome.stats.size}")
        return outcome


def compile_aodd(problem: Problem, timeout: float = None, prune_zero_weight: bool = constants.PRUNE_ZERO_WEIGHT) -> tuple[AODD, object]:
    """Compiles the problem into an AODD

    Args:
        problem (Problem): A validated problem
        timeout (float, optional): Seconds before giving up. Defaults to None
        prune_zero_weight (bool, optional): Skip And children with weight exactly 0

    Returns:
        tuple[AODD, SearchStats]: The diagram (None when infeasible) and the stats with the cache counters
    """
    outcome = Compiler(problem, timeout, prune_zero_weight).run()
    return outcome.structure, outcome.stats
