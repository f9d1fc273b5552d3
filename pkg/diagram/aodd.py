"""AODD: the And-Or decision diagram produced by compilation.
The arena is ordered children first, so the root is always the last node
"""

import attr
import networkx

from model import Problem
from search import EdgeWeight

from .exceptions import MalformedDiagramException
from .node import DiagramNode, Edge, NodeKind

LEAF_NODE = DiagramNode(NodeKind.LEAF, None, 1.0)
FAILURE_NODE = DiagramNode(NodeKind.FAILURE)


@attr.s(frozen=True, auto_attribs=True)
class AODD:
    nodes: tuple = attr.ib(converter=tuple)
    root: int
    root_weight: EdgeWeight
    problem: Problem = attr.ib(eq=False, repr=False)

    @property
    def value(self) -> float:
        """Root value including the weight of the root's virtual incoming edge, None if infeasible"""
        root_value = self.nodes[self.root].value
        if root_value is None:
            return None
        return self.root_weight.weight * root_value

    def variable_name(self, node_index: int) -> str:
        return self.problem.variables[self.nodes[node_index].variable].name

    def to_networkx(self) -> networkx.DiGraph:
        """One graph node per arena node, one edge per diagram edge. Raises on dangling edges

        Returns:
            networkx.DiGraph: The structure, node attribute "kind", edge attributes "label" and "weight"
        """
        graph = networkx.DiGraph()
        for index, node in enumerate(self.nodes):
            graph.add_node(index, kind=node.kind.value)
        for index, node in enumerate(self.nodes):
            for edge in node.edges:
                if not 0 <= edge.child < len(self.nodes):
                    raise MalformedDiagramException(f"edge {edge.label} of node {index} points to missing node {edge.child}")
                graph.add_edge(index, edge.child, label=edge.label, weight=edge.weight)
        return graph


class DiagramBuilder:
    def __init__(self, problem: Problem):
        self.problem = problem
        self.nodes: list[DiagramNode] = []

    def _add(self, node: DiagramNode) -> int:
        self.nodes.append(node)
        return len(self.nodes) - 1

    def leaf(self) -> int:
        return self._add(LEAF_NODE)

    def failure(self) -> int:
        return self._add(FAILURE_NODE)

    def internal(self, is_and: bool, variable_id: int, edges: list, value: float) -> int:
        diagram_edges = tuple(Edge(label, weight.weight, child, weight.probability, weight.utility) for label, weight, child in edges)
        return self._add(DiagramNode(NodeKind.AND if is_and else NodeKind.OR, variable_id, value, diagram_edges))

    def finish(self, root: int, root_weight: EdgeWeight, value: float) -> AODD:
        """Drops the nodes the root cannot reach (left behind by failed And nodes) and renumbers the rest

        Args:
            root (int): The root reference
            root_weight (EdgeWeight): Weight of the root's virtual incoming edge
            value (float): The root node's value

        Returns:
            AODD: The compacted diagram
        """
        reachable = {root}
        stack = [root]
        while stack:
            for edge in self.nodes[stack.pop()].edges:
                if edge.child not in reachable:
                    reachable.add(edge.child)
                    stack.append(edge.child)

        if len(reachable) == len(self.nodes):
            return AODD(self.nodes, root, root_weight, self.problem)

        kept = sorted(reachable)
        new_index = {old: new for new, old in enumerate(kept)}
        nodes = []
        for old in kept:
            node = self.nodes[old]
            if node.edges:
                edges = tuple(Edge(edge.label, edge.weight, new_index[edge.child], edge.probability, edge.utility) for edge in node.edges)
                node = DiagramNode(node.kind, node.variable, node.value, edges)
            nodes.append(node)
        return AODD(nodes, new_index[root], root_weight, self.problem)


def stats(dd: AODD) -> dict:
    """Exact counts over the arena, plus the size of the tree obtained by unfolding shared nodes

    Args:
        dd (AODD): The diagram

    Returns:
        dict: node_count, edge_count, and_nodes, or_nodes, leaves, failures, tree_node_count
    """
    counts = {kind: 0 for kind in NodeKind}
    edge_count = 0
    children_first = True
    for index, node in enumerate(dd.nodes):
        counts[node.kind] += 1
        edge_count += len(node.edges)
        children_first = children_first and all(0 <= edge.child < index for edge in node.edges)

    if children_first:
        order = range(len(dd.nodes))
    else:
        order = reversed(list(networkx.topological_sort(dd.to_networkx())))
    unfolded = {}
    for index in order:
        unfolded[index] = 1 + sum(unfolded[edge.child] for edge in dd.nodes[index].edges)
    return {
        "node_count": len(dd.nodes),
        "edge_count": edge_count,
        "and_nodes": counts[NodeKind.AND],
        "or_nodes": counts[NodeKind.OR],
        "leaves": counts[NodeKind.LEAF],
        "failures": counts[NodeKind.FAILURE],
        "tree_node_count": unfolded.get(dd.root, 0),
    }
