"""Validator: checks every invariant of the problem definition and reports violations as data.
Nothing here raises on a bad model; callers decide what to do with the report
"""

import itertools

import attr

import constants

from .constraint import LinearConstraint, Relation, TableConstraint
from .cpt import Cpt
from .problem import Objective, Problem
from .variable import VariableKind


@attr.s(frozen=True, auto_attribs=True)
class Violation:
    code: str
    entity: str
    message: str

    def __str__(self):
        return f"[{self.code}] {self.entity}: {self.message}"


@attr.s(frozen=True, auto_attribs=True)
class ValidationReport:
    violations: tuple = attr.ib(converter=tuple, factory=tuple)

    @property
    def ok(self) -> bool:
        return len(self.violations) == 0

    def __str__(self):
        if self.ok:
            return "ok"
        return "\n".join(str(violation) for violation in self.violations)


def validate(problem: Problem) -> ValidationReport:
    """Checks the Variable, Cpt, Constraint and Problem invariants

    Args:
        problem (Problem): The problem to check

    Returns:
        ValidationReport: ok iff no violation was found
    """
    violations = []
    violations.extend(_check_variables(problem))
    known_ids = set(range(len(problem.variables)))
    for index, cpt in enumerate(problem.factors):
        violations.extend(_check_cpt(problem, index, cpt, known_ids))
    for index, constraint in enumerate(problem.constraints):
        violations.extend(_check_constraint(problem, index, constraint, known_ids))
    violations.extend(_check_random_coverage(problem, known_ids))
    violations.extend(_check_utility(problem, known_ids))
    if not isinstance(problem.objective, Objective):
        violations.append(Violation("objective", "problem", f"unknown objective {problem.objective!r}"))
    return ValidationReport(violations)


def _check_variables(problem: Problem) -> list[Violation]:
    violations = []
    seen_names = set()
    for index, variable in enumerate(problem.variables):
        entity = f"variable {variable.name}"
        if variable.id != index:
            violations.append(Violation("variable-id", entity, f"id {variable.id} is not its position {index}"))
        if variable.name in seen_names:
            violations.append(Violation("variable-name", entity, "name declared more than once"))
        seen_names.add(variable.name)
        if len(variable.domain) == 0:
            violations.append(Violation("domain-empty", entity, "domain is empty"))
        elif list(variable.domain) != sorted(set(variable.domain)):
            violations.append(Violation("domain-order", entity, "domain must be sorted and duplicate-free"))
        if not variable.is_auxiliary and variable.stage < 0:
            violations.append(Violation("stage", entity, f"stage {variable.stage} is negative"))
    return violations


def _check_cpt(problem: Problem, index: int, cpt: Cpt, known_ids: set) -> list[Violation]:
    entity = f"cpt {index}"
    scope = cpt.scope
    unknown = [variable_id for variable_id in scope if variable_id not in known_ids]
    if unknown:
        return [Violation("cpt-scope", entity, f"unknown variable ids {unknown}")]

    violations = []
    entity = f"cpt {index} ({problem.variables[cpt.child].name})"
    for variable_id in scope:
        if problem.variables[variable_id].kind is not VariableKind.RANDOM:
            violations.append(Violation("cpt-kind", entity, f"{problem.variables[variable_id].name} is not a random variable"))

    child_domain = tuple(problem.variables[cpt.child].domain)
    parent_domains = [problem.variables[parent].domain for parent in cpt.parents]
    expected_rows = set(itertools.product(*parent_domains))
    seen_rows = set()
    for row in cpt.rows:
        row_entity = f"{entity} row {list(row.parent_values)}"
        if row.parent_values not in expected_rows:
            violations.append(Violation("cpt-row", row_entity, "parent values outside the parent domains"))
        if row.parent_values in seen_rows:
            violations.append(Violation("cpt-row", row_entity, "row given more than once"))
        seen_rows.add(row.parent_values)

        values = tuple(value for value, _ in row.distribution)
        if values != child_domain:
            violations.append(Violation("cpt-values", row_entity, f"row covers values {list(values)}, child domain is {list(child_domain)}"))
        for value, probability in row.distribution:
            if not 0.0 <= probability <= 1.0:
                violations.append(Violation("cpt-probability", row_entity, f"probability {probability:g} of value {value} is outside [0, 1]"))
        total = row.total
        if abs(total - 1.0) > constants.PROBABILITY_TOLERANCE:
            violations.append(Violation("cpt-normalization", row_entity, f"row sums to {total:g}"))

    missing = expected_rows - seen_rows
    if missing:
        violations.append(Violation("cpt-row", entity, f"{len(missing)} parent assignments have no row"))
    return violations


def _check_constraint(problem: Problem, index: int, constraint, known_ids: set) -> list[Violation]:
    entity = f"constraint {index}"
    scope = constraint.scope
    if len(scope) == 0:
        return [Violation("constraint-scope", entity, "scope is empty")]
    unknown = [variable_id for variable_id in scope if variable_id not in known_ids]
    if unknown:
        return [Violation("constraint-scope", entity, f"unknown variable ids {unknown}")]

    violations = []
    if all(problem.variables[variable_id].is_random for variable_id in scope):
        violations.append(Violation("constraint-scope", entity, "scope holds no decision or auxiliary variable"))
    if isinstance(constraint, TableConstraint):
        for allowed in sorted(constraint.allowed):
            if len(allowed) != len(scope):
                violations.append(Violation("table-arity", entity, f"tuple {list(allowed)} does not match scope size {len(scope)}"))
    elif isinstance(constraint, LinearConstraint):
        if not isinstance(constraint.relation, Relation):
            violations.append(Violation("linear-relation", entity, f"unknown relation {constraint.relation!r}"))
    else:
        violations.append(Violation("constraint-type", entity, f"unknown constraint type {type(constraint).__name__}"))
    return violations


def _check_random_coverage(problem: Problem, known_ids: set) -> list[Violation]:
    children = [cpt.child for cpt in problem.factors if cpt.child in known_ids]
    violations = []
    for variable in problem.variables:
        if not variable.is_random:
            continue
        count = children.count(variable.id)
        if count != 1:
            violations.append(Violation("random-cpt", f"variable {variable.name}", f"child of {count} CPTs, expected exactly 1"))
    return violations


def _check_utility(problem: Problem, known_ids: set) -> list[Violation]:
    utility = problem.utility_variable
    if utility not in known_ids:
        return [Violation("utility", "problem", f"utility variable id {utility} does not exist")]
    violations = []
    variable = problem.variables[utility]
    if not variable.is_auxiliary:
        violations.append(Violation("utility", f"variable {variable.name}", "utility variable must be auxiliary"))
    if not any(utility in constraint.scope for constraint in problem.constraints):
        violations.append(Violation("utility", f"variable {variable.name}", "utility variable appears in no constraint"))
    return violations
