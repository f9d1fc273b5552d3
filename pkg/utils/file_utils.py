from pathlib import Path
import json


def initialize_file(file_path: Path):
    """Initialize file_path with an empty file creating any folders along the way

    Args:
        file_path (Path): The path to the file
    """
    file_path.parent.mkdir(parents=True, exist_ok=True)
    open(file_path, "w").close()


def write_json_to_file(contents: dict, output_file: str):
    """Write JSON to a file, creating any folders along the way

    Args:
        contents (dict): Contents of the JSON
        output_file (str): Output file path
    """
    Path(output_file).parent.mkdir(parents=True, exist_ok=True)
    with open(output_file, "w", encoding="utf-8") as file_handle:
        json.dump(contents, file_handle, indent=4)
        file_handle.write("\n")


def read_json_to_dict(read_path: Path) -> dict:
    """Reads a UTF-8 JSON file to dict

    Args:
        read_path (Path): Path of the JSON file

    Returns:
        dict: Dictionary of the JSON file contents
    """
    return json.loads(Path(read_path).read_text(encoding="utf-8"))


def write_text_to_file(contents: str, output_file: str):
    """Writes text to a file, creating any folders along the way

    Args:
        contents (str): The text
        output_file (str): Output file path
    """
    Path(output_file).parent.mkdir(parents=True, exist_ok=True)
    Path(output_file).write_text(contents, encoding="utf-8")
