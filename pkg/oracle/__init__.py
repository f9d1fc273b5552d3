from .enumerator import Enumerator, Scenario, enumerate, scenario_table
from .policy_evaluator import PolicyEvaluator, evaluate_policy
from .exceptions import OracleBoundExceededException, PolicyShapeException, UndeterminedAuxiliaryException
