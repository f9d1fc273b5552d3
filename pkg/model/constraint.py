"""Hard constraints. Linear constraints are propagated with bounds consistency, table constraints with
generalized arc consistency
"""

from enum import Enum
from collections.abc import Mapping
from typing import Union

import attr


class Relation(Enum):
    EQ = "=="
    LE = "<="
    GE = ">="
    LT = "<"
    GT = ">"
    NE = "!="


def _to_terms(terms) -> tuple:
    return tuple((int(coefficient), int(variable)) for coefficient, variable in terms)


@attr.s(frozen=True, auto_attribs=True)
class LinearConstraint:
    """sum(coefficient * variable) <relation> rhs"""

    terms: tuple = attr.ib(converter=_to_terms)
    relation: Relation
    rhs: int

    @property
    def scope(self) -> tuple:
        seen = []
        for _, variable in self.terms:
            if variable not in seen:
                seen.append(variable)
        return tuple(seen)

    def merged_terms(self) -> tuple:
        """Merges repeated variables and drops zero coefficients

        Returns:
            tuple: ((coefficient, variable), ...) in first-appearance order
        """
        coefficients = {}
        for coefficient, variable in self.terms:
            coefficients[variable] = coefficients.get(variable, 0) + coefficient
        return tuple((coefficient, variable) for variable, coefficient in coefficients.items() if coefficient != 0)

    def less_equal_forms(self) -> list[tuple[tuple, int]]:
        """Rewrites the constraint as a list of sum(terms) <= rhs inequalities. Not defined for !=

        Returns:
            list[tuple[tuple, int]]: List of (terms, rhs)
        """
        terms = self.merged_terms()
        negated = tuple((-coefficient, variable) for coefficient, variable in terms)
        if self.relation is Relation.LE:
            return [(terms, self.rhs)]
        if self.relation is Relation.LT:
            return [(terms, self.rhs - 1)]
        if self.relation is Relation.GE:
            return [(negated, -self.rhs)]
        if self.relation is Relation.GT:
            return [(negated, -self.rhs - 1)]
        if self.relation is Relation.EQ:
            return [(terms, self.rhs), (negated, -self.rhs)]
        raise ValueError(f"No <= form for relation {self.relation.value}")

    def is_satisfied(self, assignment: Mapping) -> bool:
        total = sum(coefficient * assignment[variable] for coefficient, variable in self.terms)
        return {
            Relation.EQ: total == self.rhs,
            Relation.LE: total <= self.rhs,
            Relation.GE: total >= self.rhs,
            Relation.LT: total < self.rhs,
            Relation.GT: total > self.rhs,
            Relation.NE: total != self.rhs,
        }[self.relation]


@attr.s(frozen=True, auto_attribs=True)
class TableConstraint:
    """The scope must take one of the allowed tuples"""

    scope: tuple = attr.ib(converter=tuple)
    allowed: frozenset = attr.ib(converter=lambda tuples: frozenset(tuple(t) for t in tuples))

    def is_satisfied(self, assignment: Mapping) -> bool:
        return tuple(assignment[variable] for variable in self.scope) in self.allowed


Constraint = Union[LinearConstraint, TableConstraint]
