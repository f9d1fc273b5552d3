# Configuration

"""For the model files"""
MODEL_OBJECTIVES = {"max": "maximize", "min": "minimize"}
PROBABILITY_TOLERANCE = 1e-9  # Every CPT row must sum to 1 within this tolerance
MAX_NAME_SUGGESTION_DISTANCE = 3  # Levenshtein distance for "did you mean" hints on unknown variable names

"""For the search"""
VALUE_TOLERANCE = 1e-9  # Used by tests and the oracle comparisons, never by the search itself
PRUNE_ZERO_WEIGHT = False  # Skip And children whose edge weight is exactly 0. Changes failure semantics, so off

"""For the oracle"""
ORACLE_MAX_ASSIGNMENTS = 10**7  # Upper bound on complete assignments of decision and random variables

"""For the generators"""
KNAPSACK_CAPACITY_SCALE = 0.6
KNAPSACK_WEIGHTS = [1, 2, 3, 4, 5]
KNAPSACK_VALUES = [1, 2, 3]
INVESTMENT_UNITS = 2  # Units invested each season, split between the two options
INVESTMENT_TAX_RELIEF = 1  # Utility bonus per unit placed in the second option
INVESTMENT_RETURNS_OPTION_1 = [1, 2, 3, 4]
INVESTMENT_RETURNS_OPTION_2 = [0, 1, 2, 3]
PRODUCTION_LEVELS = [1, 2]
HIDDEN_STATES = [0, 1]
CPT_PROBABILITY_FLOOR = 0.05
CPT_DECIMALS = 6

"""For the diagram export"""
DOT_SIGNIFICANT_DIGITS = 6

"""For loggers"""
GENERATOR_LOG_FILE_PATH = "logs/generator.log"
SOLVER_LOG_FILE_PATH = "logs/solver.log"

"""For the CLI exit codes"""
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID_MODEL = 2
EXIT_INFEASIBLE = 3
EXIT_INCONSISTENT = 4
EXIT_TIMEOUT = 5
