"""
Constraints are either linear ({type: linear, terms, rel, rhs}) or tables ({type: table, scope, tuples}).
Strict inequalities are turned into <= / >= here, so the propagators only ever see ==, <=, >= and !=
"""
from .parser import Parser
from ..constraint import LinearConstraint, Relation, TableConstraint
from ..exceptions import ModelFormatException


class ConstraintListParser(Parser):
    def __init__(self):
        self.relations = {relation.value: relation for relation in Relation}

    def parse(self, model_data: dict, ids_by_name: dict[str, int]) -> list:
        """Parses the constraints section

        Args:
            model_data (dict): The model file contents
            ids_by_name (dict[str, int]): Variable name -> id

        Returns:
            list: LinearConstraint and TableConstraint objects in file order
        """
        constraints = []
        for index, entry in enumerate(self.expect_list(model_data.get("constraints", []), "constraints")):
            location = f"constraints[{index}]"
            if not isinstance(entry, dict) or entry.get("type") not in ("linear", "table"):
                raise ModelFormatException(location, "type must be 'linear' or 'table'")
            if entry["type"] == "linear":
                constraints.append(self.parse_linear(entry, ids_by_name, location))
            else:
                constraints.append(self.parse_table(entry, ids_by_name, location))
        return constraints

    def parse_linear(self, entry: dict, ids_by_name: dict[str, int], location: str) -> LinearConstraint:
        self.check_keys(entry, location, {"type", "terms", "rel", "rhs"})
        terms = []
        for term_index, term in enumerate(self.expect_list(entry["terms"], f"{location}.terms")):
            term_location = f"{location}.terms[{term_index}]"
            if not isinstance(term, list) or len(term) != 2:
                raise ModelFormatException(term_location, "a term is [coefficient, variable]")
            terms.append((self.expect_int(term[0], term_location), self.resolve_variable(term[1], ids_by_name, term_location)))
        if entry["rel"] not in self.relations:
            raise ModelFormatException(f"{location}.rel", f"relation must be one of {sorted(self.relations)}")

        relation = self.relations[entry["rel"]]
        rhs = self.expect_int(entry["rhs"], f"{location}.rhs")
        if relation is Relation.LT:
            relation, rhs = Relation.LE, rhs - 1
        elif relation is Relation.GT:
            relation, rhs = Relation.GE, rhs + 1
        return LinearConstraint(terms, relation, rhs)

    def parse_table(self, entry: dict, ids_by_name: dict[str, int], location: str) -> TableConstraint:
        self.check_keys(entry, location, {"type", "scope", "tuples"})
        scope = [self.resolve_variable(name, ids_by_name, f"{location}.scope") for name in self.expect_list(entry["scope"], f"{location}.scope")]
        tuples = []
        for tuple_index, allowed in enumerate(self.expect_list(entry["tuples"], f"{location}.tuples")):
            tuple_location = f"{location}.tuples[{tuple_index}]"
            tuples.append(tuple(self.expect_int(value, tuple_location) for value in self.expect_list(allowed, tuple_location)))
        return TableConstraint(scope, tuples)
