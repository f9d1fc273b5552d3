from Levenshtein import distance
from constants import MAX_NAME_SUGGESTION_DISTANCE


def find_closest_string(strings: list[str], target: str, threshold: int = MAX_NAME_SUGGESTION_DISTANCE) -> str:
    """Finds the closest string to the target string within a threshold. If none are found, returns ""

    Args:
        strings (list[str]): The list of strings to search in (in our case, variable names)
        target (str): The target string to search for
        threshold (int): The largest Levenshtein distance accepted

    Returns:
        str: Returns a string if it's within the threshold, otherwise returns ""
    """
    closest_distance = threshold + 1
    closest_string = ""
    for string in strings:
        dist = distance(string, target)
        if dist <= threshold and dist < closest_distance:
            closest_distance = dist
            closest_string = string
    return closest_string
