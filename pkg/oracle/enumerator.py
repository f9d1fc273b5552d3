"""Enumerator: evaluates the alternating max/sum (min/sum) expected-utility expression by brute force.
No propagation and no edge weights: P(s) is the product of the CPTs at the complete assignment and the utility
comes from solving the auxiliary variables against the constraints
"""

import math

import attr

import constants
from model import Objective, Problem, total_order
from utils.logging_utils import Logger

from .exceptions import OracleBoundExceededException, UndeterminedAuxiliaryException


@attr.s(frozen=True, auto_attribs=True)
class Scenario:
    probability: float
    utility: float
    feasible: bool
    auxiliaries: dict = attr.ib(factory=dict, eq=False)


class Enumerator:
    def __init__(self, problem: Problem, max_assignments: int = constants.ORACLE_MAX_ASSIGNMENTS):
        """Prepares the enumeration and refuses problems that are too large

        Args:
            problem (Problem): A validated problem
            max_assignments (int, optional): Bound on complete assignments of the branching variables

        Raises:
            OracleBoundExceededException: The problem has more complete assignments than the bound
        """
        self.problem = problem
        self.order = total_order(problem)
        assignments = math.prod(len(problem.variables[variable_id].domain) for variable_id in self.order)
        if assignments > max_assignments:
            raise OracleBoundExceededException(assignments, max_assignments)

        self.cpts = [(cpt.scope, cpt.table()) for cpt in problem.factors]
        self.auxiliaries = [variable.id for variable in problem.variables if variable.is_auxiliary]
        self.maximize = problem.objective is Objective.MAXIMIZE

        # Each constraint is checked as soon as the last auxiliary of its scope is assigned
        position = dict(zip(self.auxiliaries, range(len(self.auxiliaries))))
        self.ground_checks = []
        self.checks = [[] for _ in self.auxiliaries]
        for constraint in problem.constraints:
            last = max((position[variable_id] for variable_id in constraint.scope if variable_id in position), default=None)
            if last is None:
                self.ground_checks.append(constraint)
            else:
                self.checks[last].append(constraint)
        self.logger = Logger().get_solver_logger().getChild(__name__)

    def probability(self, assignment: dict) -> float:
        probability = 1.0
        for scope, table in self.cpts:
            probability *= table[tuple(assignment[variable_id] for variable_id in scope)]
        return probability

    def solve_auxiliaries(self, assignment: dict, unique: bool = True) -> dict:
        """Finds the auxiliary values the constraints allow for a complete branching assignment

        Args:
            assignment (dict): Values of every branching variable
            unique (bool, optional): Raise when several solutions exist. Defaults to True

        Raises:
            UndeterminedAuxiliaryException: unique is set and the solution is not unique

        Returns:
            dict: The full assignment including the auxiliaries, None if the constraints cannot be satisfied
        """
        if not all(constraint.is_satisfied(assignment) for constraint in self.ground_checks):
            return None
        solutions = []
        self._extend(0, dict(assignment), solutions, 2 if unique else 1)
        if not solutions:
            return None
        if len(solutions) > 1:
            raise UndeterminedAuxiliaryException({self.problem.variables[variable_id].name: value for variable_id, value in assignment.items()})
        return solutions[0]

    def _extend(self, index: int, assignment: dict, solutions: list, wanted: int):
        if len(solutions) >= wanted:
            return
        if index == len(self.auxiliaries):
            solutions.append(dict(assignment))
            return
        variable_id = self.auxiliaries[index]
        for value in self.problem.variables[variable_id].domain:
            assignment[variable_id] = value
            if all(constraint.is_satisfied(assignment) for constraint in self.checks[index]):
                self._extend(index + 1, assignment, solutions, wanted)
        del assignment[variable_id]

    def scenario(self, assignment: dict) -> Scenario:
        probability = self.probability(assignment)
        solution = self.solve_auxiliaries(assignment)
        if solution is None:
            return Scenario(probability, None, False)
        auxiliaries = {self.problem.variables[variable_id].name: solution[variable_id] for variable_id in self.auxiliaries}
        return Scenario(probability, float(solution[self.problem.utility_variable]), True, auxiliaries)

    def leaf_value(self, assignment: dict) -> float:
        """P(s) * U for a complete assignment. A violated scenario makes its prefix infeasible unless P(s) = 0

        Args:
            assignment (dict): Values of every branching variable

        Returns:
            float: The contribution, None if infeasible
        """
        scenario = self.scenario(assignment)
        if not scenario.feasible:
            return 0.0 if scenario.probability == 0.0 else None
        return scenario.probability * scenario.utility

    def value(self) -> float:
        result = self._value(0, {})
        self.logger.info(f"Oracle value of {self.problem.name}: {result}")
        return result

    def _value(self, position: int, assignment: dict) -> float:
        if position == len(self.order):
            return self.leaf_value(assignment)
        variable_id = self.order[position]
        variable = self.problem.variables[variable_id]
        best = None
        total = 0.0
        for value in variable.domain:
            assignment[variable_id] = value
            child = self._value(position + 1, assignment)
            if variable.is_random:
                if child is None:
                    del assignment[variable_id]
                    return None
                total += child
            elif child is not None and (best is None or (child > best if self.maximize else child < best)):
                best = child
        del assignment[variable_id]
        return total if variable.is_random else best

    def has_feasible_completion(self, position: int, assignment: dict) -> bool:
        """Whether some values for the branching variables from position on, and for the auxiliaries, satisfy every constraint"""
        if position == len(self.order):
            return self.solve_auxiliaries(assignment, unique=False) is not None
        variable_id = self.order[position]
        for value in self.problem.variables[variable_id].domain:
            assignment[variable_id] = value
            if self.has_feasible_completion(position + 1, assignment):
                del assignment[variable_id]
                return True
        del assignment[variable_id]
        return False

    def scenarios(self) -> dict:
        table = {}
        self._collect(0, {}, table)
        return table

    def _collect(self, position: int, assignment: dict, table: dict):
        if position == len(self.order):
            table[tuple(assignment[variable_id] for variable_id in self.order)] = self.scenario(assignment)
            return
        variable_id = self.order[position]
        for value in self.problem.variables[variable_id].domain:
            assignment[variable_id] = value
            self._collect(position + 1, assignment, table)
        del assignment[variable_id]


def enumerate(problem: Problem, max_assignments: int = constants.ORACLE_MAX_ASSIGNMENTS) -> float:
    """Brute-force expected utility of an optimal policy

    Args:
        problem (Problem): A validated problem
        max_assignments (int, optional): Bound on complete assignments of the branching variables

    Returns:
        float: The value, None if the problem is infeasible
    """
    return Enumerator(problem, max_assignments).value()


def scenario_table(problem: Problem, max_assignments: int = constants.ORACLE_MAX_ASSIGNMENTS) -> dict:
    """Every complete assignment of the branching variables, keyed by its values in branching order

    Args:
        problem (Problem): A validated problem
        max_assignments (int, optional): Bound on complete assignments

    Returns:
        dict: values tuple -> Scenario(probability, utility, feasible, auxiliaries)
    """
    return Enumerator(problem, max_assignments).scenarios()
