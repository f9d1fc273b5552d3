import attr

from model import Problem

from .gen_spec import Family, GenSpec
from .investment import gen_investment
from .knapsack import gen_knapsack
from .production import gen_production


def generate(spec: GenSpec) -> Problem:
    """Dispatches a spec to its family's generator

    Args:
        spec (GenSpec): A spec, validated here

    Returns:
        Problem: The generated model, carrying the spec in its generator field
    """
    spec.validate()
    if spec.family is Family.KNAPSACK:
        problem = gen_knapsack(spec)
    elif spec.family is Family.INVESTMENT:
        problem = gen_investment(spec)
    else:
        problem = gen_production(spec.stages, spec.seed)
    return attr.evolve(problem, generator=spec.to_dict())
