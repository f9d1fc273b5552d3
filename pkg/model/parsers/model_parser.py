"""ModelParser: reads a whole model file into a Problem. Unknown keys are rejected at every level"""

from pathlib import Path

from utils.file_utils import read_json_to_dict

from .constraint_list_parser import ConstraintListParser
from .cpt_list_parser import CptListParser
from .parser import Parser
from .variable_list_parser import VariableListParser
from ..exceptions import ModelFormatException
from ..problem import Objective, Problem

import constants


class ModelParser(Parser):
    def __init__(self):
        self.variable_list_parser = VariableListParser()
        self.cpt_list_parser = CptListParser()
        self.constraint_list_parser = ConstraintListParser()

    def parse(self, model_data: dict, ids_by_name: dict[str, int] = None) -> Problem:
        """Parses the model file contents

        Args:
            model_data (dict): The decoded JSON document
            ids_by_name (dict[str, int]): Unused, the names come from the variables section

        Returns:
            Problem: The problem, not yet validated
        """
        self.check_keys(model_data, "model", {"objective", "utility_variable", "variables"}, {"name", "cpts", "constraints", "generator"})
        if model_data["objective"] not in constants.MODEL_OBJECTIVES:
            raise ModelFormatException("objective", f"must be one of {sorted(constants.MODEL_OBJECTIVES)}")
        name = model_data.get("name", "model")
        if not isinstance(name, str):
            raise ModelFormatException("name", "must be a string")
        generator = model_data.get("generator", {})
        if not isinstance(generator, dict):
            raise ModelFormatException("generator", "must be an object")

        variables = self.variable_list_parser.parse(model_data)
        ids_by_name = {}
        for variable in variables:
            if variable.name in ids_by_name:
                raise ModelFormatException(f"variables[{variable.id}]", f"variable '{variable.name}' is declared twice")
            ids_by_name[variable.name] = variable.id

        cpts = self.cpt_list_parser.parse(model_data, ids_by_name)
        constraints = self.constraint_list_parser.parse(model_data, ids_by_name)
        utility = self.resolve_variable(model_data["utility_variable"], ids_by_name, "utility_variable")
        objective = Objective(constants.MODEL_OBJECTIVES[model_data["objective"]])
        return Problem(variables, cpts, constraints, utility, objective, name, generator)


def load_model(model_path: str) -> Problem:
    """Reads and parses a model file

    Args:
        model_path (str): Path to the JSON model file

    Returns:
        Problem: The parsed problem
    """
    try:
        model_data = read_json_to_dict(Path(model_path))
    except ValueError as error:
        raise ModelFormatException(str(model_path), f"not valid JSON ({error})")
    except OSError as error:
        raise ModelFormatException(str(model_path), f"cannot be read ({error.strerror})")
    return ModelParser().parse(model_data)
