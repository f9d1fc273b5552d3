"""Multi-season investment. Each season a fixed number of units is split between two options, then both returns
are observed. Option 2 earns tax relief per unit, but over the horizon it may not out-earn option 1
"""

import numpy

import constants
from model import Objective, Problem, Relation, VariableKind
from utils.logging_utils import Logger

from .gen_spec import GenSpec, Variant
from .utils import ModelBuilder


def gen_investment(spec: GenSpec) -> Problem:
    """Generates an investment model. invest_t is the number of units placed in option 2

    Args:
        spec (GenSpec): An investment spec

    Returns:
        Problem: The model
    """
    spec.validate()
    logger = Logger().get_generator_logger().getChild(__name__)
    rng = numpy.random.default_rng(spec.seed)
    stages = spec.stages
    units = constants.INVESTMENT_UNITS
    relief = constants.INVESTMENT_TAX_RELIEF
    builder = ModelBuilder(f"investment-{spec.variant.value}-{stages}-{spec.seed}", rng)

    for t in range(1, stages + 1):
        builder.variable(f"invest_{t}", VariableKind.DECISION, range(units + 1), t)
        builder.variable(f"return1_{t}", VariableKind.RANDOM, constants.INVESTMENT_RETURNS_OPTION_1, t)
        builder.variable(f"return2_{t}", VariableKind.RANDOM, constants.INVESTMENT_RETURNS_OPTION_2, t)

    earned1 = sorted({(units - invest) * value for invest in range(units + 1) for value in constants.INVESTMENT_RETURNS_OPTION_1})
    earned2 = sorted({invest * value for invest in range(units + 1) for value in constants.INVESTMENT_RETURNS_OPTION_2})
    season_scores = [
        (units - invest) * first + invest * second + relief * invest
        for invest in range(units + 1)
        for first in constants.INVESTMENT_RETURNS_OPTION_1
        for second in constants.INVESTMENT_RETURNS_OPTION_2
    ]
    for t in range(1, stages + 1):
        builder.variable(f"earned1_{t}", VariableKind.AUXILIARY, earned1)
        builder.variable(f"earned2_{t}", VariableKind.AUXILIARY, earned2)
        builder.variable(f"balance_{t}", VariableKind.AUXILIARY, range(-max(earned2) * t, max(earned1) * t + 1))
        builder.variable(score_name(t, stages), VariableKind.AUXILIARY, range(min(season_scores) * t, max(season_scores) * t + 1))

    for t in range(1, stages + 1):
        parents = spec.variant is Variant.CHAIN and t > 1
        builder.cpt(f"return1_{t}", [f"return1_{t - 1}"] if parents else [])
        builder.cpt(f"return2_{t}", [f"return2_{t - 1}"] if parents else [])

    for t in range(1, stages + 1):
        builder.product_table(f"invest_{t}", f"return1_{t}", f"earned1_{t}", scale=lambda invest: units - invest)
        builder.product_table(f"invest_{t}", f"return2_{t}", f"earned2_{t}")
        balance_terms = [(1, f"balance_{t}"), (-1, f"earned1_{t}"), (1, f"earned2_{t}")]
        score_terms = [(1, score_name(t, stages)), (-1, f"earned1_{t}"), (-1, f"earned2_{t}"), (-relief, f"invest_{t}")]
        if t > 1:
            balance_terms.append((-1, f"balance_{t - 1}"))
            score_terms.append((-1, score_name(t - 1, stages)))
        builder.linear(balance_terms, Relation.EQ, 0)
        builder.linear(score_terms, Relation.EQ, 0)
    builder.linear([(1, f"balance_{stages}")], Relation.GE, 0)

    problem = builder.build("U", Objective.MAXIMIZE)
    logger.info(f"Generated {problem.name}: {len(problem.variables)} variables, {len(problem.all_factors)} factors")
    return problem


def score_name(stage: int, stages: int) -> str:
    return "U" if stage == stages else f"score_{stage}"
