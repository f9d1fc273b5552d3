"""Policy trees: one chosen value per decision node, one branch per possible value of a random node.
Shared diagram nodes are unfolded, so the policy is always a tree
"""

from typing import Union

import attr

import constants
from model import Objective, Problem

from .aodd import AODD
from .exceptions import MalformedDiagramException
from .node import NodeKind


@attr.s(frozen=True, auto_attribs=True)
class PolicyLeaf:
    utility: float
    probability: float


@attr.s(frozen=True, auto_attribs=True)
class DecisionPolicyNode:
    variable: str
    value: int
    child: "PolicyNode"


@attr.s(frozen=True, auto_attribs=True)
class RandomPolicyNode:
    variable: str
    branches: tuple = attr.ib(converter=tuple)

    def branch(self, value: int) -> "PolicyNode":
        for label, child in self.branches:
            if label == value:
                return child
        return None


PolicyNode = Union[DecisionPolicyNode, RandomPolicyNode, PolicyLeaf]


def extract_policy(dd: AODD, objective: Objective) -> PolicyNode:
    """Follows the best edge of every Or node and every nonzero-probability edge of every And node

    Args:
        dd (AODD): A feasible diagram
        objective (Objective): max or min, the same as the compile

    Raises:
        MalformedDiagramException: The diagram is infeasible

    Returns:
        PolicyNode: The root of the policy tree
    """
    if dd.value is None:
        raise MalformedDiagramException("an infeasible diagram has no policy")
    maximize = objective is Objective.MAXIMIZE
    return _extract(dd, dd.root, dd.root_weight.probability, dd.root_weight.utility, maximize)


def _extract(dd: AODD, index: int, probability: float, utility: float, maximize: bool) -> PolicyNode:
    node = dd.nodes[index]
    if node.kind is NodeKind.LEAF:
        return PolicyLeaf(utility, probability)
    if node.kind is NodeKind.FAILURE:
        raise MalformedDiagramException(f"policy reached failure node {index}")

    if node.kind is NodeKind.OR:
        chosen = None
        best = None
        for edge in node.edges:
            child_value = dd.nodes[edge.child].value
            if child_value is None:
                continue
            contribution = edge.weight * child_value
            if best is None or (contribution > best if maximize else contribution < best):
                best = contribution
                chosen = edge
        child = _extract(dd, chosen.child, probability * chosen.probability, _fired(utility, chosen.utility), maximize)
        return DecisionPolicyNode(dd.variable_name(index), chosen.label, child)

    branches = []
    for edge in node.edges:
        if edge.probability == 0.0:
            continue
        branches.append((edge.label, _extract(dd, edge.child, probability * edge.probability, _fired(utility, edge.utility), maximize)))
    return RandomPolicyNode(dd.variable_name(index), branches)


def _fired(utility: float, edge_utility: float) -> float:
    return edge_utility if edge_utility is not None else utility


def check_policy_shape(policy: PolicyNode, problem: Problem) -> list[str]:
    """Lists everything wrong with the shape of a policy. Variables must follow the branching order along a path,
    decisions carry one value of their domain, random nodes branch on distinct values of their domain

    Args:
        policy (PolicyNode): The policy
        problem (Problem): The problem it was built for

    Returns:
        list[str]: The violations, empty when the policy is well formed
    """
    positions = {problem.variables[variable_id].name: position for position, variable_id in enumerate(problem.order)}
    violations = []
    _check(policy, problem, positions, -1, violations)
    return violations


def _check(node: PolicyNode, problem: Problem, positions: dict, last_position: int, violations: list):
    if isinstance(node, PolicyLeaf):
        if node.probability is None or not -constants.PROBABILITY_TOLERANCE <= node.probability <= 1.0 + constants.PROBABILITY_TOLERANCE:
            violations.append(f"leaf probability {node.probability} is outside [0, 1]")
        if node.utility is None:
            violations.append("leaf has no utility")
        return
    if not isinstance(node, (DecisionPolicyNode, RandomPolicyNode)):
        violations.append(f"unknown policy node {node!r}")
        return
    if node.variable not in positions:
        violations.append(f"{node.variable} is not a branching variable")
        return

    position = positions[node.variable]
    variable = problem.variables[problem.variable_id(node.variable)]
    if position <= last_position:
        violations.append(f"{node.variable} is out of order")

    if isinstance(node, DecisionPolicyNode):
        if not variable.is_decision:
            violations.append(f"decision node on non-decision variable {node.variable}")
        if node.value not in variable.domain:
            violations.append(f"{node.variable}={node.value} is outside its domain")
        _check(node.child, problem, positions, position, violations)
        return

    if not variable.is_random:
        violations.append(f"random node on non-random variable {node.variable}")
    labels = [label for label, _ in node.branches]
    if not labels:
        violations.append(f"random node {node.variable} has no branches")
    if len(labels) != len(set(labels)):
        violations.append(f"random node {node.variable} repeats branch values {labels}")
    for label, child in node.branches:
        if label not in variable.domain:
            violations.append(f"{node.variable}={label} is outside its domain")
        _check(child, problem, positions, position, violations)


def to_dict(policy: PolicyNode) -> dict:
    """Nested JSON form: decision {var, value, child}, random {var, branches}, leaf {utility, probability}"""
    if isinstance(policy, PolicyLeaf):
        return {"utility": policy.utility, "probability": policy.probability}
    if isinstance(policy, DecisionPolicyNode):
        return {"var": policy.variable, "value": policy.value, "child": to_dict(policy.child)}
    return {"var": policy.variable, "branches": {str(label): to_dict(child) for label, child in policy.branches}}
