"""Diagram nodes and edges. Nodes live in the AODD arena and refer to each other by index
Kind: One of [and, or, leaf, failure]
"""

from enum import Enum

import attr


class NodeKind(Enum):
    AND = "and"
    OR = "or"
    LEAF = "leaf"
    FAILURE = "failure"


@attr.s(frozen=True, auto_attribs=True)
class Edge:
    """label is the value given to the node's variable; weight = probability * utility (utility None if it did not fire)"""

    label: int
    weight: float
    child: int
    probability: float = 1.0
    utility: float = None


@attr.s(frozen=True, auto_attribs=True)
class DiagramNode:
    kind: NodeKind
    variable: int = None
    value: float = None
    edges: tuple = attr.ib(converter=tuple, factory=tuple)

    @property
    def is_internal(self) -> bool:
        return self.kind in (NodeKind.AND, NodeKind.OR)

    def __str__(self):
        return f"DiagramNode({self.kind.value} | {self.variable})"
