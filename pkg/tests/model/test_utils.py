from model.utils import find_closest_string


def test_find_closest_string():
    strings = ["take_1", "weight_1", "value_1", "load_1"]
    assert find_closest_string(strings, "wieght_1") == "weight_1"
    assert find_closest_string(strings, "take1") == "take_1"


def test_find_closest_string_nothing_close():
    strings = ["take_1", "weight_1", "value_1"]
    assert find_closest_string(strings, "hidden_state") == ""
