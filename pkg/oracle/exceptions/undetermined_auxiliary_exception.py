class UndeterminedAuxiliaryException(Exception):
    """The constraints allow several auxiliary assignments for one complete scenario, so its utility is not defined"""

    def __init__(self, scenario: dict):
        self.scenario = scenario

    def __str__(self):
        return f"Auxiliary variables are not determined by the scenario {self.scenario}"
