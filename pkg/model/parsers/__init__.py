"""Parsers:
Parsers turn one section of a model file into model objects. They only check structure (keys, types, names);
semantic checks are left to the validator
"""
from .variable_list_parser import VariableListParser
from .cpt_list_parser import CptListParser
from .constraint_list_parser import ConstraintListParser
from .model_parser import ModelParser, load_model
from .parser import Parser
