from fractions import Fraction

from bokit.report import jsonable, md_table, to_json


def test_numbers_as_strings():
    assert jsonable({"a": 1, "b": Fraction(1, 3), "c": [True, None]}) == {"a": "1", "b": "1/3", "c": [True, None]}


def test_canonical():
    a = to_json({"b": 1, "a": {"y": 2, "x": 3}})
    b = to_json({"a": {"x": 3, "y": 2}, "b": 1})
    assert a == b and a.endswith("\n")


def test_sets_sorted():
    assert jsonable({3, 1, 2}) == ["1", "2", "3"]


def test_md_table():
    t = md_table(["a", "b"], [[1, "x|y"]])
    assert t.splitlines()[2] == "| 1 | x\\|y |"
