"""Simple propagator abstract class"""


class Propagator:
    def __init__(self, variables: tuple, label: str):
        """Base propagator

        Args:
            variables (tuple): Distinct variable ids this propagator reads and filters
            label (str): Readable name used when a failure has no single culprit variable
        """
        self.variables = tuple(variables)
        self.label = label

    def propagate(self, state) -> list[int]:
        """Abtract propagate method, should be overriden by children classes

        Args:
            state (DomainState): The domains to filter

        Raises:
            Exception: Throws exception if this method isn't overriden by child class

        Returns:
            list[int]: The variables whose domain changed
        """
        raise Exception("Should not call propagate on base Propagator class")
