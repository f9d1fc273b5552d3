class PropagationFailureException(Exception):
    reason = "failure"

    def __init__(self, variable_name: str):
        self.variable_name = variable_name

    def __str__(self):
        return f"Propagation failed ({self.reason}) on {self.variable_name}"


class DomainWipeoutException(PropagationFailureException):
    reason = "empty-domain"


class RandomReductionException(PropagationFailureException):
    """Propagation removed a value of an unassigned random variable: some possible scenario violates a constraint"""

    reason = "random-reduction"
