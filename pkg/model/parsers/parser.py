"""Simple parser abstract class"""

from ..exceptions import ModelFormatException
from ..utils import find_closest_string


class Parser:
    def __init__(self):
        pass

    def parse(self, model_data: dict, ids_by_name: dict[str, int]) -> list:
        """Abtract parse method, should be overriden by children classes

        Args:
            model_data (dict): The model file contents
            ids_by_name (dict[str, int]): Variable name -> id

        Raises:
            Exception: Throws exception if this method isn't overriden by child class

        Returns:
            list: The parse result
        """
        raise Exception("Should not call parse on base Parser class")

    def check_keys(self, entry: dict, location: str, required: set[str], optional: set[str] = frozenset()):
        """Rejects unknown keys and missing required keys

        Args:
            entry (dict): The JSON object
            location (str): Where the object is in the file, for the error message
            required (set[str]): Keys that must be present
            optional (set[str]): Keys that may be present
        """
        if not isinstance(entry, dict):
            raise ModelFormatException(location, f"expected an object, got {type(entry).__name__}")
        unknown = sorted(set(entry) - required - set(optional))
        if unknown:
            raise ModelFormatException(location, f"unknown keys {unknown}")
        missing = sorted(required - set(entry))
        if missing:
            raise ModelFormatException(location, f"missing keys {missing}")

    def expect_int(self, value, location: str) -> int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ModelFormatException(location, f"expected an integer, got {value!r}")
        return value

    def expect_list(self, value, location: str) -> list:
        if not isinstance(value, list):
            raise ModelFormatException(location, f"expected an array, got {type(value).__name__}")
        return value

    def resolve_variable(self, name: str, ids_by_name: dict[str, int], location: str) -> int:
        """Resolves a variable name to its id, suggesting the closest declared name when it is unknown

        Args:
            name (str): The variable name used in the file
            ids_by_name (dict[str, int]): Variable name -> id
            location (str): Where the name is used

        Returns:
            int: The variable id
        """
        if not isinstance(name, str):
            raise ModelFormatException(location, f"expected a variable name, got {name!r}")
        if name in ids_by_name:
            return ids_by_name[name]
        suggestion = find_closest_string(list(ids_by_name.keys()), name)
        hint = f", did you mean '{suggestion}'?" if suggestion else ""
        raise ModelFormatException(location, f"unknown variable '{name}'{hint}")
