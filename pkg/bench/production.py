"""Production planning. Each quarter decides a production level V_t and then observes the demand S_t.
The demand depends on a hidden market state H_t that follows a chain and is only branched on at the end.
Unsold stock carries over through W_t; running short is not allowed; the expected final stock U is minimized
"""

import numpy

import constants
from model import Objective, Problem, Relation, VariableKind
from utils.logging_utils import Logger

from .gen_spec import Family, GenSpec
from .utils import ModelBuilder


def surplus_name(stage: int, stages: int) -> str:
    if stage == stages:
        return "U"
    if stages == 2:
        return "W"
    return f"W{stage}"


def gen_production(stages: int, seed: int) -> Problem:
    """Generates the production-planning model

    Args:
        stages (int): Number of quarters
        seed (int): Seed for the CPTs

    Returns:
        Problem: The model. Variables are declared V1, S1, ..., VT, ST, H1, ..., HT, then the surplus chain
    """
    GenSpec(Family.PRODUCTION, None, stages, seed).validate()
    logger = Logger().get_generator_logger().getChild(__name__)
    builder = ModelBuilder(f"production-{stages}-{seed}", numpy.random.default_rng(seed))
    levels = constants.PRODUCTION_LEVELS
    swing = max(levels)

    for t in range(1, stages + 1):
        builder.variable(f"V{t}", VariableKind.DECISION, levels, t)
        builder.variable(f"S{t}", VariableKind.RANDOM, levels, t)
    for t in range(1, stages + 1):
        builder.variable(f"H{t}", VariableKind.RANDOM, constants.HIDDEN_STATES, stages + 1)
    for t in range(1, stages + 1):
        builder.variable(surplus_name(t, stages), VariableKind.AUXILIARY, range(swing * t + 1))

    for t in range(1, stages + 1):
        builder.cpt(f"H{t}", [f"H{t - 1}"] if t > 1 else [])
        builder.cpt(f"S{t}", [f"H{t}"])

    for t in range(1, stages + 1):
        terms = [(1, surplus_name(t, stages)), (-1, f"V{t}"), (1, f"S{t}")]
        if t > 1:
            terms.append((-1, surplus_name(t - 1, stages)))
        builder.linear(terms, Relation.EQ, 0)

    problem = builder.build("U", Objective.MINIMIZE)
    logger.info(f"Generated {problem.name}: {len(problem.variables)} variables, {len(problem.all_factors)} factors")
    return problem
