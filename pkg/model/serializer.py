"""Writes a Problem back to the model-file format. Key order is fixed, so equal problems give byte-identical files"""

import json

from .constraint import LinearConstraint
from .problem import Objective, Problem
from .variable import VariableKind

_OBJECTIVE_KEYS = {Objective.MAXIMIZE: "max", Objective.MINIMIZE: "min"}


def problem_to_dict(problem: Problem) -> dict:
    """Converts the problem to the model-file document

    Args:
        problem (Problem): The problem

    Returns:
        dict: JSON-ready document
    """
    names = [variable.name for variable in problem.variables]
    variables = []
    for variable in problem.variables:
        entry = {"name": variable.name, "kind": variable.kind.value, "domain": list(variable.domain)}
        if variable.kind is not VariableKind.AUXILIARY:
            entry["stage"] = variable.stage
        variables.append(entry)

    cpts = []
    for cpt in problem.factors:
        rows = [{"parent_values": list(row.parent_values), "dist": {str(value): probability for value, probability in row.distribution}} for row in cpt.rows]
        cpts.append({"child": names[cpt.child], "parents": [names[parent] for parent in cpt.parents], "rows": rows})

    constraints = []
    for constraint in problem.constraints:
        if isinstance(constraint, LinearConstraint):
            terms = [[coefficient, names[variable]] for coefficient, variable in constraint.terms]
            constraints.append({"type": "linear", "terms": terms, "rel": constraint.relation.value, "rhs": constraint.rhs})
        else:
            tuples = [list(allowed) for allowed in sorted(constraint.allowed)]
            constraints.append({"type": "table", "scope": [names[variable] for variable in constraint.scope], "tuples": tuples})

    document = {
        "name": problem.name,
        "objective": _OBJECTIVE_KEYS[problem.objective],
        "utility_variable": names[problem.utility_variable],
        "variables": variables,
        "cpts": cpts,
        "constraints": constraints,
    }
    if problem.generator:
        document["generator"] = dict(problem.generator)
    return document


def problem_to_json(problem: Problem) -> str:
    return json.dumps(problem_to_dict(problem), indent=4) + "\n"
