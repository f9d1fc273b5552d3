"""Stochastic knapsack. Each stage decides whether to take the next item, then observes its weight and value.
The load never exceeds the capacity, in every scenario, and the expected total value is maximized

Variants:
    independent: weight and value CPTs have no parents
    chain: weight_t and value_t depend on weight_{t-1} and value_{t-1}
    hidden: a hidden variable per item, branched after everything else, parents that item's weight and value
"""

import numpy

import constants
from model import Objective, Problem, Relation, VariableKind
from utils.logging_utils import Logger

from .gen_spec import GenSpec, Variant
from .utils import ModelBuilder


def capacity(spec: GenSpec) -> int:
    return int(round(spec.capacity_scale * spec.stages * float(numpy.mean(constants.KNAPSACK_WEIGHTS))))


def gen_knapsack(spec: GenSpec) -> Problem:
    """Generates a knapsack model

    Args:
        spec (GenSpec): A knapsack spec

    Returns:
        Problem: The model
    """
    spec.validate()
    logger = Logger().get_generator_logger().getChild(__name__)
    rng = numpy.random.default_rng(spec.seed)
    stages = spec.stages
    limit = capacity(spec)
    builder = ModelBuilder(f"knapsack-{spec.variant.value}-{stages}-{spec.seed}", rng)
    max_weight = max(constants.KNAPSACK_WEIGHTS)
    max_value = max(constants.KNAPSACK_VALUES)

    for t in range(1, stages + 1):
        builder.variable(f"take_{t}", VariableKind.DECISION, [0, 1], t)
        builder.variable(f"weight_{t}", VariableKind.RANDOM, constants.KNAPSACK_WEIGHTS, t)
        builder.variable(f"value_{t}", VariableKind.RANDOM, constants.KNAPSACK_VALUES, t)
    if spec.variant is Variant.HIDDEN:
        for t in range(1, stages + 1):
            builder.variable(f"hidden_{t}", VariableKind.RANDOM, constants.HIDDEN_STATES, stages + 1)

    for t in range(1, stages + 1):
        builder.variable(f"taken_weight_{t}", VariableKind.AUXILIARY, [0] + constants.KNAPSACK_WEIGHTS)
        builder.variable(f"taken_value_{t}", VariableKind.AUXILIARY, [0] + constants.KNAPSACK_VALUES)
        builder.variable(f"load_{t}", VariableKind.AUXILIARY, range(min(max_weight * t, limit) + 1))
        builder.variable(gain_name(t, stages), VariableKind.AUXILIARY, range(max_value * t + 1))

    for t in range(1, stages + 1):
        if spec.variant is Variant.HIDDEN:
            builder.cpt(f"hidden_{t}", [f"hidden_{t - 1}"] if t > 1 else [])
            builder.cpt(f"weight_{t}", [f"hidden_{t}"])
            builder.cpt(f"value_{t}", [f"hidden_{t}"])
        elif spec.variant is Variant.CHAIN and t > 1:
            builder.cpt(f"weight_{t}", [f"weight_{t - 1}"])
            builder.cpt(f"value_{t}", [f"value_{t - 1}"])
        else:
            builder.cpt(f"weight_{t}")
            builder.cpt(f"value_{t}")

    for t in range(1, stages + 1):
        builder.product_table(f"take_{t}", f"weight_{t}", f"taken_weight_{t}")
        builder.product_table(f"take_{t}", f"value_{t}", f"taken_value_{t}")
        load_terms = [(1, f"load_{t}"), (-1, f"taken_weight_{t}")]
        gain_terms = [(1, gain_name(t, stages)), (-1, f"taken_value_{t}")]
        if t > 1:
            load_terms.append((-1, f"load_{t - 1}"))
            gain_terms.append((-1, gain_name(t - 1, stages)))
        builder.linear(load_terms, Relation.EQ, 0)
        builder.linear(gain_terms, Relation.EQ, 0)
    builder.linear([(1, f"load_{stages}")], Relation.LE, limit)

    problem = builder.build("U", Objective.MAXIMIZE)
    logger.info(f"Generated {problem.name}: capacity {limit}, {len(problem.variables)} variables, {len(problem.all_factors)} factors")
    return problem


def gain_name(stage: int, stages: int) -> str:
    return "U" if stage == stages else f"gain_{stage}"
