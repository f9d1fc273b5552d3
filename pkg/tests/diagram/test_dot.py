from diagram import AODD, DiagramNode, Edge, NodeKind, to_dot
from model import LinearConstraint, Objective, Problem, Relation, Variable, VariableKind
from search import EdgeWeight

from tests.problems import argmax_problem

problem = argmax_problem()
LEAF = DiagramNode(NodeKind.LEAF, None, 1.0)


def test_single_leaf():
    assert to_dot(AODD([LEAF], 0, EdgeWeight(), problem)) == 'digraph aodd {\n    n0 [shape=box, label="1"];\n}\n'


def test_failure_and_weighted_edges():
    root = DiagramNode(NodeKind.OR, 0, 0.5, [Edge(1, 0.0, 0), Edge(2, 0.25, 1)])
    dot = to_dot(AODD([DiagramNode(NodeKind.FAILURE), LEAF, root], 2, EdgeWeight(), problem))
    assert 'n0 [shape=diamond, color=red, label=""];' in dot
    assert 'n2 [shape=circle, label="d\\n0.5"];' in dot
    assert 'n2 -> n0 [label="1 / 0", style=dashed];' in dot
    assert 'n2 -> n1 [label="2 / 0.25"];' in dot


def test_and_nodes_and_root_weight():
    root = DiagramNode(NodeKind.AND, 0, 1.0, [Edge(1, 0.5, 0), Edge(2, 0.5, 0)])
    dot = to_dot(AODD([LEAF, root], 1, EdgeWeight(1.0, 3.0), problem))
    assert dot.startswith('digraph aodd {\n    graph [label="root weight 3"];')
    assert "shape=doublecircle" in dot


def test_equal_diagrams_render_equal_text():
    first = AODD([LEAF], 0, EdgeWeight(), problem)
    second = AODD([LEAF], 0, EdgeWeight(), problem)
    assert to_dot(first) == to_dot(second)


def test_quotes_and_backslashes_in_names_are_escaped():
    variables = [Variable(0, 'q"d\\', VariableKind.DECISION, [1, 2], 1), Variable(1, "U", VariableKind.AUXILIARY, [1, 2])]
    quoted = Problem(variables, [], [LinearConstraint([(1, 1), (-1, 0)], Relation.EQ, 0)], 1, Objective.MAXIMIZE)
    root = DiagramNode(NodeKind.OR, 0, 2.0, [Edge(2, 2.0, 0)])
    dot = to_dot(AODD([LEAF, root], 1, EdgeWeight(), quoted))
    assert r'n1 [shape=circle, label="q\"d\\\n2"];' in dot
