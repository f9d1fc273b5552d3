from .parser import Parser
from ..exceptions import ModelFormatException
from ..variable import Variable, VariableKind


class VariableListParser(Parser):
    def __init__(self):
        self.kinds = {kind.value: kind for kind in VariableKind}

    def parse(self, model_data: dict, ids_by_name: dict[str, int] = None) -> list[Variable]:
        """Parses the variables section. Ids are given in declaration order

        Args:
            model_data (dict): The model file contents
            ids_by_name (dict[str, int]): Unused, variables define the names

        Returns:
            list[Variable]: The variables
        """
        variables = []
        for index, entry in enumerate(self.expect_list(model_data["variables"], "variables")):
            location = f"variables[{index}]"
            self.check_keys(entry, location, {"name", "kind", "domain"}, {"stage"})
            if not isinstance(entry["name"], str) or entry["name"] == "":
                raise ModelFormatException(location, "name must be a non-empty string")
            if entry["kind"] not in self.kinds:
                raise ModelFormatException(location, f"kind must be one of {sorted(self.kinds)}")
            kind = self.kinds[entry["kind"]]
            domain = [self.expect_int(value, f"{location}.domain") for value in self.expect_list(entry["domain"], f"{location}.domain")]
            if "stage" in entry:
                stage = self.expect_int(entry["stage"], f"{location}.stage")
            elif kind is VariableKind.AUXILIARY:
                stage = 0
            else:
                raise ModelFormatException(location, "decision and random variables need a stage")
            variables.append(Variable(index, entry["name"], kind, domain, stage))
        return variables
