"""A variable of a factored stochastic constraint program
Kind: One of [decision, random, auxiliary]
"""

from enum import Enum

import attr


class VariableKind(Enum):
    DECISION = "decision"
    RANDOM = "random"
    AUXILIARY = "auxiliary"


@attr.s(frozen=True, auto_attribs=True)
class Variable:
    """A variable with an integer domain. Auxiliary variables (accumulators, the utility) are never branched on;
    their stage is ignored
    """

    id: int
    name: str
    kind: VariableKind
    domain: tuple = attr.ib(converter=tuple)
    stage: int = 0

    @property
    def is_decision(self) -> bool:
        return self.kind is VariableKind.DECISION

    @property
    def is_random(self) -> bool:
        return self.kind is VariableKind.RANDOM

    @property
    def is_auxiliary(self) -> bool:
        return self.kind is VariableKind.AUXILIARY

    def __str__(self):
        return f"Variable({self.kind.value} | {self.name})"
