from .domain_state import DomainState
from .engine import PropagationEngine, PropagationResult, PropagationStatus, assign_and_propagate, build_propagators, propagate
from .exceptions import DomainWipeoutException, PropagationFailureException, RandomReductionException, StaleCheckpointException
