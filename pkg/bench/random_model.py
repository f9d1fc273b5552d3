"""Small random models mixing linear and table constraints, for exhaustive cross-checks against the oracle.
At most 8 branching variables with domains of at most 3 values; every auxiliary is a function of branching
variables, so it is fixed once they are
"""

import numpy

from model import Objective, Problem, Relation, VariableKind
from utils.logging_utils import Logger

from .utils import ModelBuilder

SIDE_RELATIONS = [Relation.LE, Relation.GE, Relation.EQ, Relation.NE]


def gen_random(seed: int, max_branching: int = 7, max_stages: int = 3) -> Problem:
    """Generates a random model

    Args:
        seed (int): The seed
        max_branching (int, optional): Upper bound on decision plus random variables. Defaults to 7
        max_stages (int, optional): Upper bound on stages. Defaults to 3

    Returns:
        Problem: The model, which may be infeasible
    """
    logger = Logger().get_generator_logger().getChild(__name__)
    rng = numpy.random.default_rng(seed)
    builder = ModelBuilder(f"random-{seed}", rng)

    stages = int(rng.integers(1, max_stages + 1))
    branching = []
    for stage in range(1, stages + 1):
        for kind, count in ((VariableKind.DECISION, int(rng.integers(0, 3))), (VariableKind.RANDOM, int(rng.integers(0, 3)))):
            for _ in range(count):
                if len(branching) >= max_branching:
                    break
                low = int(rng.integers(0, 2))
                name = f"{'d' if kind is VariableKind.DECISION else 'r'}{len(branching)}"
                builder.variable(name, kind, range(low, low + int(rng.integers(2, 4))), stage)
                branching.append(name)
    if not branching:
        builder.variable("d0", VariableKind.DECISION, [0, 1, 2], 1)
        branching.append("d0")

    decisions = [name for name in branching if name.startswith("d")]
    randoms = [name for name in branching if name.startswith("r")]

    previous = None
    for name in randoms:
        builder.cpt(name, [previous] if previous is not None and rng.random() < 0.5 else [])
        previous = name

    utility_inputs = []
    if len(branching) >= 2 and rng.random() < 0.6:
        first, second = (branching[int(index)] for index in rng.choice(len(branching), size=2, replace=False))
        outputs = {}
        for a in builder.domain(first):
            for b in builder.domain(second):
                outputs[(a, b)] = int(rng.integers(0, 3))
        builder.variable("mix", VariableKind.AUXILIARY, sorted(set(outputs.values())))
        builder.table([first, second, "mix"], [(a, b, value) for (a, b), value in outputs.items()])
        utility_inputs.append((int(rng.integers(1, 3)), "mix"))

    for name in branching:
        if rng.random() < 0.7:
            utility_inputs.append((int(rng.integers(1, 4)), name))
    if not utility_inputs:
        utility_inputs.append((1, branching[0]))

    low = sum(coefficient * min(builder.domain(name)) for coefficient, name in utility_inputs)
    high = sum(coefficient * max(builder.domain(name)) for coefficient, name in utility_inputs)
    builder.variable("U", VariableKind.AUXILIARY, range(low, high + 1))
    builder.linear([(1, "U")] + [(-coefficient, name) for coefficient, name in utility_inputs], Relation.EQ, 0)

    if decisions:
        for _ in range(int(rng.integers(0, 3))):
            add_side_constraint(builder, rng, decisions, branching)

    objective = Objective.MAXIMIZE if rng.random() < 0.5 else Objective.MINIMIZE
    problem = builder.build("U", objective)
    logger.info(f"Generated {problem.name}: {len(branching)} branching variables, {len(problem.constraints)} constraints")
    return problem


def add_side_constraint(builder: ModelBuilder, rng: numpy.random.Generator, decisions: list[str], branching: list[str]):
    """A linear or table constraint over one decision and up to two other branching variables"""
    scope = [decisions[int(rng.integers(len(decisions)))]]
    for name in rng.permutation(branching):
        if len(scope) >= int(rng.integers(2, 4)):
            break
        if name not in scope:
            scope.append(str(name))

    if rng.random() < 0.5:
        terms = [(int(rng.choice([-2, -1, 1, 2])), name) for name in scope]
        low = sum(min(coefficient * value for value in builder.domain(name)) for coefficient, name in terms)
        high = sum(max(coefficient * value for value in builder.domain(name)) for coefficient, name in terms)
        builder.linear(terms, SIDE_RELATIONS[int(rng.integers(len(SIDE_RELATIONS)))], int(rng.integers(low, high + 1)))
        return

    tuples = [()]
    for name in scope:
        tuples = [prefix + (value,) for prefix in tuples for value in builder.domain(name)]
    keep = rng.random(len(tuples)) < 0.75
    builder.table(scope, [allowed for allowed, kept in zip(tuples, keep) if kept])
