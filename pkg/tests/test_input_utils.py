import json

import pytest

from building_sets import NodeSet, contraction
from common.errors import MissingSingleton, MTooSmall, ParseError
from graphs import complete_graph, cycle_graph, graphical_building_set, path_graph
from input_utils import format_building_set, parse_building_set, parse_graph_spec, \
    read_building_set, read_graph_file, write_building_set

PATH_TEXT = """# associahedron of the path 1-2-3
ground 3
1
2
3
{1,2}
2, 3
1,2,3
"""


def test_named_graph_specs():
    assert parse_graph_spec("path:3") == path_graph(3)
    assert parse_graph_spec("cycle:5") == cycle_graph(5)
    assert parse_graph_spec("complete:4") == complete_graph(4)
    with pytest.raises(MTooSmall):
        parse_graph_spec("cycle:2")


@pytest.mark.parametrize("spec", ["path:x", "wheel:4", "no_such_file.json"])
def test_bad_graph_specs(spec):
    with pytest.raises(ParseError):
        parse_graph_spec(spec)


def test_graph_file(tmp_path):
    graph_file = tmp_path / "square.json"
    graph_file.write_text(json.dumps({"n": 4, "edges": [[1, 2], [2, 3], [3, 4], [4, 1]]}))
    assert parse_graph_spec(str(graph_file)) == cycle_graph(4)


@pytest.mark.parametrize("content", [
    "{not json",
    json.dumps({"edges": []}),
    json.dumps({"n": 0, "edges": []}),
    json.dumps({"n": 3, "edges": [[1, 4]]}),
    json.dumps({"n": 3, "edges": [[1, 1]]}),
    json.dumps({"n": 3, "edges": [[1, 2, 3]]}),
])
def test_bad_graph_files(tmp_path, content):
    graph_file = tmp_path / "bad.json"
    graph_file.write_text(content)
    with pytest.raises(ParseError):
        read_graph_file(graph_file)


def test_parse_building_set():
    assert parse_building_set(PATH_TEXT) == graphical_building_set(path_graph(3))


@pytest.mark.parametrize("text", [
    "1\n2\n",
    "ground x\n1\n",
    "ground 2\n1\n2\n1;2\n",
    "ground 2\n0\n1\n2\n",
    "",
])
def test_bad_building_set_text(text):
    with pytest.raises(ParseError):
        parse_building_set(text)


def test_building_set_conditions_are_semantic():
    with pytest.raises(MissingSingleton):
        parse_building_set("ground 2\n1\n1,2\n")


def test_format_renumbers(tmp_path):
    contracted = contraction(graphical_building_set(cycle_graph(4)), NodeSet.of([2]))
    text = format_building_set(contracted)
    assert text.splitlines()[0] == "ground 3"
    path = tmp_path / "contracted.txt"
    write_building_set(contracted, path)
    assert read_building_set(path) == graphical_building_set(complete_graph(3))


def test_missing_building_set_file(tmp_path):
    with pytest.raises(ParseError):
        read_building_set(tmp_path / "missing.txt")


def test_non_utf8_files_are_parse_errors(tmp_path):
    binary = tmp_path / "binary.json"
    binary.write_bytes(b'{"n": 2, "edges": [[1, 2]]}\xff')
    with pytest.raises(ParseError, match="not UTF-8"):
        read_graph_file(binary)
    with pytest.raises(ParseError, match="not UTF-8"):
        read_building_set(binary)
