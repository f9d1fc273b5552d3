"""Builders receive the nodes the search creates, children before parents.
TreeBuilder only counts them; the diagram package has the builder that keeps them
"""

import attr


@attr.s(frozen=True, auto_attribs=True)
class TreeSummary:
    node_count: int = 0
    and_nodes: int = 0
    or_nodes: int = 0
    leaves: int = 0
    failures: int = 0

    def __add__(self, other: "TreeSummary") -> "TreeSummary":
        return TreeSummary(
            self.node_count + other.node_count,
            self.and_nodes + other.and_nodes,
            self.or_nodes + other.or_nodes,
            self.leaves + other.leaves,
            self.failures + other.failures,
        )

    @property
    def edge_count(self) -> int:
        return self.node_count - 1 if self.node_count else 0

    def to_dict(self) -> dict:
        return {
            "node_count": self.node_count,
            "edge_count": self.edge_count,
            "and_nodes": self.and_nodes,
            "or_nodes": self.or_nodes,
            "leaves": self.leaves,
            "failures": self.failures,
        }


LEAF = TreeSummary(1, 0, 0, 1, 0)
FAILURE = TreeSummary(1, 0, 0, 0, 1)
AND_NODE = TreeSummary(1, 1, 0, 0, 0)
OR_NODE = TreeSummary(1, 0, 1, 0, 0)


class TreeBuilder:
    """A node reference is the summary of the subtree below it"""

    def leaf(self) -> TreeSummary:
        return LEAF

    def failure(self) -> TreeSummary:
        return FAILURE

    def internal(self, is_and: bool, variable_id: int, edges: list, value: float) -> TreeSummary:
        summary = AND_NODE if is_and else OR_NODE
        for _, _, child in edges:
            summary = summary + child
        return summary

    def finish(self, root: TreeSummary, root_weight, value: float) -> TreeSummary:
        return root
