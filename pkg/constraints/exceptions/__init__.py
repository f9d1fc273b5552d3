from .propagation_failure_exception import PropagationFailureException, DomainWipeoutException, RandomReductionException
from .stale_checkpoint_exception import StaleCheckpointException
