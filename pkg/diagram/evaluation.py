"""Recomputes the node values of a diagram bottom-up, independently of the values stored at compile time"""

import networkx

from model import Objective

from .aodd import AODD
from .exceptions import MalformedDiagramException
from .node import NodeKind


def check_structure(dd: AODD) -> networkx.DiGraph:
    """Checks the arena is a rooted DAG whose nodes are all reachable and whose And nodes have no failure child

    Args:
        dd (AODD): The diagram

    Raises:
        MalformedDiagramException: On the first structural problem found

    Returns:
        networkx.DiGraph: The diagram as a graph
    """
    if not 0 <= dd.root < len(dd.nodes):
        raise MalformedDiagramException(f"root {dd.root} is not in the arena")
    graph = dd.to_networkx()
    if not networkx.is_directed_acyclic_graph(graph):
        raise MalformedDiagramException(f"cycle through nodes {networkx.find_cycle(graph)}")
    unreachable = set(graph.nodes) - networkx.descendants(graph, dd.root) - {dd.root}
    if unreachable:
        raise MalformedDiagramException(f"nodes {sorted(unreachable)} are unreachable from the root")
    for index, node in enumerate(dd.nodes):
        labels = [edge.label for edge in node.edges]
        if len(labels) != len(set(labels)):
            raise MalformedDiagramException(f"node {index} has repeated edge labels {labels}")
        if node.kind is NodeKind.AND and any(dd.nodes[edge.child].kind is NodeKind.FAILURE for edge in node.edges):
            raise MalformedDiagramException(f"and node {index} has a failure child")
        if not node.is_internal and node.edges:
            raise MalformedDiagramException(f"{node.kind.value} node {index} has outgoing edges")
    return graph


def evaluate(dd: AODD, objective: Objective) -> float:
    """Recomputes every node value (memoized over the DAG) and returns the root value

    Args:
        dd (AODD): The diagram
        objective (Objective): max or min aggregation at Or nodes

    Raises:
        MalformedDiagramException: The diagram is not a well-formed rooted DAG

    Returns:
        float: Root value times the root edge weight, None if the root fails
    """
    graph = check_structure(dd)
    maximize = objective is Objective.MAXIMIZE
    values = {}
    for index in reversed(list(networkx.topological_sort(graph))):
        node = dd.nodes[index]
        if node.kind is NodeKind.LEAF:
            values[index] = 1.0
        elif node.kind is NodeKind.FAILURE:
            values[index] = None
        elif node.kind is NodeKind.AND:
            total = 0.0
            for edge in node.edges:
                total += edge.weight * values[edge.child]
            values[index] = total
        else:
            best = None
            for edge in node.edges:
                child_value = values[edge.child]
                if child_value is None:
                    continue
                contribution = edge.weight * child_value
                if best is None or (contribution > best if maximize else contribution < best):
                    best = contribution
            values[index] = best

    if values[dd.root] is None:
        return None
    return dd.root_weight.weight * values[dd.root]
