class UnfixedAuxiliaryException(Exception):
    """A complete path left an auxiliary variable with several values: the model does not determine it"""

    def __init__(self, variable_name: str, domain: tuple):
        self.variable_name = variable_name
        self.domain = domain

    def __str__(self):
        return f"Auxiliary variable {self.variable_name} is still {list(self.domain)} after every branching variable was assigned"
