"""DOT export. Or nodes are circles, And nodes double circles, leaves boxes and failures red diamonds"""

import constants

from .aodd import AODD
from .node import NodeKind


def _number(value: float) -> str:
    return format(value, f".{constants.DOT_SIGNIFICANT_DIGITS}g")


def _escape(text: str) -> str:
    """Makes text safe inside a double-quoted DOT string"""
    return text.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(dd: AODD) -> str:
    """Renders the diagram as a DOT digraph. Output only depends on the diagram, so equal diagrams give equal text

    Args:
        dd (AODD): The diagram

    Returns:
        str: The DOT text
    """
    lines = ["digraph aodd {"]
    if dd.root_weight.weight != 1.0:
        lines.append(f'    graph [label="root weight {_number(dd.root_weight.weight)}"];')
    for index, node in enumerate(dd.nodes):
        if node.kind is NodeKind.LEAF:
            attributes = f'shape=box, label="{_number(node.value)}"'
        elif node.kind is NodeKind.FAILURE:
            attributes = 'shape=diamond, color=red, label=""'
        else:
            shape = "doublecircle" if node.kind is NodeKind.AND else "circle"
            value = _number(node.value) if node.value is not None else "-"
            attributes = f'shape={shape}, label="{_escape(dd.variable_name(index))}\\n{value}"'
        lines.append(f"    n{index} [{attributes}];")
    for index, node in enumerate(dd.nodes):
        for edge in node.edges:
            style = ", style=dashed" if edge.weight == 0.0 else ""
            lines.append(f'    n{index} -> n{edge.child} [label="{edge.label} / {_number(edge.weight)}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
