from .oracle_bound_exceeded_exception import OracleBoundExceededException
from .policy_shape_exception import PolicyShapeException
from .undetermined_auxiliary_exception import UndeterminedAuxiliaryException
