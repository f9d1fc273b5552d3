"""Expected utility of following a given policy, computed by enumeration.
A variable the policy does not branch on is handled as the search handles it: an omitted decision takes its only
value that still has a feasible completion, an omitted random variable is summed over its domain
"""

from diagram import DecisionPolicyNode, PolicyLeaf, RandomPolicyNode, check_policy_shape
from model import Problem

from .enumerator import Enumerator
from .exceptions import PolicyShapeException


class PolicyEvaluator:
    def __init__(self, problem: Problem):
        self.problem = problem
        self.enumerator = Enumerator(problem)
        self.order = self.enumerator.order

    def evaluate(self, policy) -> float:
        violations = check_policy_shape(policy, self.problem)
        if violations:
            raise PolicyShapeException("; ".join(violations))
        return self._walk(0, {}, policy)

    def _walk(self, position: int, assignment: dict, node) -> float:
        if position == len(self.order):
            if not isinstance(node, PolicyLeaf):
                raise PolicyShapeException(f"{node.variable} is branched on after every variable was assigned")
            value = self.enumerator.leaf_value(assignment)
            if value is None:
                raise PolicyShapeException(f"the path {self._names(assignment)} violates a constraint")
            return value

        variable_id = self.order[position]
        variable = self.problem.variables[variable_id]
        if isinstance(node, DecisionPolicyNode) and node.variable == variable.name:
            assignment[variable_id] = node.value
            value = self._walk(position + 1, assignment, node.child)
            del assignment[variable_id]
            return value

        if isinstance(node, RandomPolicyNode) and node.variable == variable.name:
            total = 0.0
            for value in variable.domain:
                child = node.branch(value)
                # A missing branch is a scenario the policy never reaches
                if child is None:
                    continue
                assignment[variable_id] = value
                total += self._walk(position + 1, assignment, child)
            assignment.pop(variable_id, None)
            return total

        if variable.is_decision:
            candidates = []
            for value in variable.domain:
                assignment[variable_id] = value
                if self.enumerator.has_feasible_completion(position + 1, assignment):
                    candidates.append(value)
            del assignment[variable_id]
            if len(candidates) != 1:
                raise PolicyShapeException(f"{variable.name} is not in the policy and has {len(candidates)} feasible values after {self._names(assignment)}")
            assignment[variable_id] = candidates[0]
            value = self._walk(position + 1, assignment, node)
            del assignment[variable_id]
            return value

        total = 0.0
        for value in variable.domain:
            assignment[variable_id] = value
            total += self._walk(position + 1, assignment, node)
        del assignment[variable_id]
        return total

    def _names(self, assignment: dict) -> dict:
        return {self.problem.variables[variable_id].name: value for variable_id, value in assignment.items()}


def evaluate_policy(problem: Problem, policy) -> float:
    """Expected utility of following policy

    Args:
        problem (Problem): The problem
        policy (PolicyNode): A policy tree for the problem

    Raises:
        PolicyShapeException: The policy does not fit the problem

    Returns:
        float: Sum over the policy's scenarios of P * U
    """
    return PolicyEvaluator(problem).evaluate(policy)
