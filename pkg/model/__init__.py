from .variable import Variable, VariableKind
from .cpt import Cpt, CptRow
from .constraint import Constraint, LinearConstraint, Relation, TableConstraint
from .problem import Objective, Problem, total_order
from .validator import ValidationReport, Violation, validate
from .factor_graph import FactorGraph, factor_graph
from .serializer import problem_to_dict, problem_to_json
from .parsers import ModelParser, load_model
