import itertools

import numpy

import constants
from model import Cpt, CptRow, LinearConstraint, Objective, Problem, Relation, TableConstraint, Variable, VariableKind


def draw_distribution(rng: numpy.random.Generator, size: int) -> list[float]:
    """Draws a probability vector: a flat Dirichlet draw floored at CPT_PROBABILITY_FLOOR, rounded to
       CPT_DECIMALS, the last entry taking the rounding remainder

    Args:
        rng (numpy.random.Generator): The seeded generator
        size (int): Number of values

    Returns:
        list[float]: Strictly positive probabilities summing to 1
    """
    draw = rng.dirichlet(numpy.ones(size))
    floored = constants.CPT_PROBABILITY_FLOOR + (1.0 - constants.CPT_PROBABILITY_FLOOR * size) * draw
    rounded = [round(float(probability), constants.CPT_DECIMALS) for probability in floored[:-1]]
    rounded.append(round(1.0 - sum(rounded), constants.CPT_DECIMALS))
    return rounded


class ModelBuilder:
    """Collects variables, CPTs and constraints by name and assembles the Problem"""

    def __init__(self, name: str, rng: numpy.random.Generator):
        self.name = name
        self.rng = rng
        self.variables: list[Variable] = []
        self.ids: dict[str, int] = {}
        self.cpts: list[Cpt] = []
        self.constraints: list = []

    def variable(self, name: str, kind: VariableKind, domain, stage: int = 0) -> int:
        variable_id = len(self.variables)
        self.variables.append(Variable(variable_id, name, kind, sorted(set(domain)), stage if kind is not VariableKind.AUXILIARY else 0))
        self.ids[name] = variable_id
        return variable_id

    def domain(self, name: str) -> tuple:
        return self.variables[self.ids[name]].domain

    def cpt(self, child: str, parents: list[str] = ()):
        """Adds a CPT for child with one freshly drawn row per parent assignment"""
        parent_ids = [self.ids[parent] for parent in parents]
        child_domain = self.domain(child)
        rows = []
        for parent_values in itertools.product(*[self.variables[parent].domain for parent in parent_ids]):
            rows.append(CptRow(parent_values, zip(child_domain, draw_distribution(self.rng, len(child_domain)))))
        self.cpts.append(Cpt(self.ids[child], parent_ids, rows))

    def linear(self, terms: list[tuple[int, str]], relation: Relation, rhs: int):
        self.constraints.append(LinearConstraint([(coefficient, self.ids[name]) for coefficient, name in terms], relation, rhs))

    def table(self, scope: list[str], tuples):
        self.constraints.append(TableConstraint([self.ids[name] for name in scope], tuples))

    def product_table(self, factor: str, operand: str, result: str, scale=lambda value: value):
        """Table constraint result = scale(factor) * operand, allowed tuples enumerated from the domains"""
        tuples = [(a, b, scale(a) * b) for a in self.domain(factor) for b in self.domain(operand)]
        self.table([factor, operand, result], tuples)

    def build(self, utility: str, objective: Objective) -> Problem:
        return Problem(self.variables, self.cpts, self.constraints, self.ids[utility], objective, self.name)
