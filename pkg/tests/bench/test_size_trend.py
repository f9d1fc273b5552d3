import pytest

from bench import Family, GenSpec, Variant, generate
from compiler import compile_aodd

SEED = 0


def reduction_ratio(family: Family, variant: Variant, stages: int) -> float:
    dd, stats = compile_aodd(generate(GenSpec(family, variant, stages, SEED)))
    assert dd is not None
    return stats.size["tree_node_count"] / stats.size["node_count"]


def test_knapsack_chain_reduction_grows_with_stages():
    ratios = [reduction_ratio(Family.KNAPSACK, Variant.CHAIN, stages) for stages in range(2, 7)]
    assert all(earlier < later for earlier, later in zip(ratios, ratios[1:]))


def test_investment_chain_reduction_grows_with_stages():
    ratios = [reduction_ratio(Family.INVESTMENT, Variant.CHAIN, stages) for stages in range(2, 6)]
    assert all(earlier < later for earlier, later in zip(ratios, ratios[1:]))


def test_hidden_variables_reduce_sharing():
    assert reduction_ratio(Family.KNAPSACK, Variant.HIDDEN, 4) < reduction_ratio(Family.KNAPSACK, Variant.CHAIN, 4)


@pytest.mark.slow
def test_knapsack_chain_fifteen_stages():
    dd, stats = compile_aodd(generate(GenSpec(Family.KNAPSACK, Variant.CHAIN, 15, SEED)), timeout=120.0)
    assert dd.value > 0.0
    assert stats.size["tree_node_count"] > stats.size["node_count"]
