from .node import DiagramNode, Edge, NodeKind
from .aodd import AODD, DiagramBuilder, stats
from .evaluation import check_structure, evaluate
from .policy import DecisionPolicyNode, PolicyLeaf, PolicyNode, RandomPolicyNode, check_policy_shape, extract_policy, to_dict
from .dot import to_dot
from .exceptions import MalformedDiagramException
