"""Problem: the immutable FSCP representation
    - variables with stages (decision variables of a stage come before its random variables)
    - conditional probability tables over the random variables
    - hard constraints (theta is always 1, so it is not stored)
    - a single auxiliary utility variable and an objective sense
"""

from enum import Enum
from functools import cached_property

import attr

from .variable import Variable, VariableKind


class Objective(Enum):
    MAXIMIZE = "maximize"
    MINIMIZE = "minimize"


@attr.s(frozen=True, auto_attribs=True)
class Problem:
    variables: tuple = attr.ib(converter=tuple)
    factors: tuple = attr.ib(converter=tuple)
    constraints: tuple = attr.ib(converter=tuple)
    utility_variable: int
    objective: Objective
    name: str = "model"
    # GenSpec fields of a generated model, empty otherwise
    generator: dict = attr.ib(factory=dict, eq=False)

    def variable(self, variable_id: int) -> Variable:
        return self.variables[variable_id]

    def variable_id(self, name: str) -> int:
        """Gets the id of a variable by name

        Args:
            name (str): The variable name

        Raises:
            KeyError: If no variable has that name

        Returns:
            int: The variable id
        """
        return self.ids_by_name[name]

    @cached_property
    def ids_by_name(self) -> dict[str, int]:
        return {variable.name: variable.id for variable in self.variables}

    @cached_property
    def order(self) -> tuple:
        return total_order(self)

    @property
    def all_factors(self) -> tuple:
        """CPTs first, then constraints. The index in this tuple is the factor id used by the factor graph and contexts"""
        return tuple(self.factors) + tuple(self.constraints)

    def names(self, variable_ids) -> list[str]:
        return [self.variables[variable_id].name for variable_id in variable_ids]


_KIND_RANK = {VariableKind.DECISION: 0, VariableKind.RANDOM: 1}


def total_order(problem: Problem) -> tuple:
    """Total order over decision and random variables refining V1 < S1 < ... < VT < ST.
       Within a stage set the declaration order is kept; auxiliary variables are left out

    Args:
        problem (Problem): The problem

    Returns:
        tuple: Variable ids in branching order
    """
    branchable = [variable for variable in problem.variables if not variable.is_auxiliary]
    branchable.sort(key=lambda variable: (variable.stage, _KIND_RANK[variable.kind], variable.id))
    return tuple(variable.id for variable in branchable)

