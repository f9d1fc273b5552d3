from .parser import Parser
from ..cpt import Cpt, CptRow
from ..exceptions import ModelFormatException


class CptListParser(Parser):
    def parse(self, model_data: dict, ids_by_name: dict[str, int]) -> list[Cpt]:
        """Parses the cpts section. Distribution keys are JSON strings and are read back as integers

        Args:
            model_data (dict): The model file contents
            ids_by_name (dict[str, int]): Variable name -> id

        Returns:
            list[Cpt]: The conditional probability tables
        """
        cpts = []
        for index, entry in enumerate(self.expect_list(model_data.get("cpts", []), "cpts")):
            location = f"cpts[{index}]"
            self.check_keys(entry, location, {"child", "rows"}, {"parents"})
            child = self.resolve_variable(entry["child"], ids_by_name, f"{location}.child")
            parents = [self.resolve_variable(name, ids_by_name, f"{location}.parents") for name in self.expect_list(entry.get("parents", []), f"{location}.parents")]
            rows = [self.parse_row(row, f"{location}.rows[{row_index}]") for row_index, row in enumerate(self.expect_list(entry["rows"], f"{location}.rows"))]
            cpts.append(Cpt(child, parents, rows))
        return cpts

    def parse_row(self, row: dict, location: str) -> CptRow:
        self.check_keys(row, location, {"dist"}, {"parent_values"})
        parent_values = [self.expect_int(value, f"{location}.parent_values") for value in self.expect_list(row.get("parent_values", []), f"{location}.parent_values")]
        if not isinstance(row["dist"], dict):
            raise ModelFormatException(f"{location}.dist", "expected an object mapping value -> probability")
        distribution = []
        for value, probability in row["dist"].items():
            try:
                parsed_value = int(value)
            except ValueError:
                raise ModelFormatException(f"{location}.dist", f"key {value!r} is not an integer")
            if isinstance(probability, bool) or not isinstance(probability, (int, float)):
                raise ModelFormatException(f"{location}.dist", f"probability {probability!r} is not a number")
            distribution.append((parsed_value, probability))
        return CptRow(parent_values, distribution)
