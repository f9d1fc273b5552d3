from .weights import EdgeWeight, WeightSnapshot, WeightTracker, edge_weight
from .builders import TreeBuilder, TreeSummary
from .and_or_search import AndOrSearch, SearchOutcome, solve_tree
from .exceptions import SearchTimeoutException, UnfixedAuxiliaryException
