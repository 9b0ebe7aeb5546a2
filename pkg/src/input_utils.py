"""
    Input formats of the command line.

    Graph: a named spec path:M, cycle:M, complete:M, star:M, or a JSON file
        {"n": M, "edges": [[i, j], ...]} with 1-indexed labels.
    Building set: a text file
        # comment
        ground 3
        1
        2
        3
        1,2
        2,3
        1,2,3
    one element per line, labels comma separated (surrounding braces are ignored).
"""
import json
import pathlib

from building_sets import BuildingSet, canonicalize, validate
from common.errors import ParseError
from graphs import SimpleGraph, complete_graph, cycle_graph, path_graph, star_graph

NAMED_GRAPHS = {
    "path": path_graph,
    "cycle": cycle_graph,
    "complete": complete_graph,
    "star": star_graph,
}


def _parse_int(text: str, what: str) -> int:
    try:
        return int(text.strip())
    except ValueError as e:
        raise ParseError(f"{what} must be an integer, got '{text.strip()}'") from e


def graph_from_dict(data: dict) -> SimpleGraph:
    """Graph from its JSON form."""
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise ParseError('graph JSON needs the keys "n" and "edges"')
    node_count = data["n"]
    if not isinstance(node_count, int) or node_count < 1:
        raise ParseError(f'"n" must be a positive integer, got {node_count!r}')
    edges = []
    for edge in data["edges"]:
        if not isinstance(edge, (list, tuple)) or len(edge) != 2 \
                or not all(isinstance(label, int) for label in edge):
            raise ParseError(f"edge {edge!r} is not a pair of integer labels")
        edges.append(tuple(edge))
    try:
        return SimpleGraph.on_range(node_count, edges)
    except ValueError as e:
        raise ParseError(str(e)) from e


def read_graph_file(path) -> SimpleGraph:
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path} is not valid JSON: {e.msg}") from e
    except UnicodeDecodeError as e:
        raise ParseError(f"{path} is not UTF-8 text: {e.reason}") from e
    except OSError as e:
        raise ParseError(f"cannot read graph file {path}: {e.strerror}") from e
    return graph_from_dict(data)


def parse_graph_spec(spec: str) -> SimpleGraph:
    """Named spec like path:5, otherwise a path to a graph JSON file."""
    name, separator, size = spec.partition(":")
    if separator and name in NAMED_GRAPHS:
        return NAMED_GRAPHS[name](_parse_int(size, f"size of {name}"))
    if pathlib.Path(spec).is_file():
        return read_graph_file(spec)
    raise ParseError(f"'{spec}' is neither a graph spec ({', '.join(NAMED_GRAPHS)}:M) "
                     "nor a graph file")


def parse_building_set(text: str) -> BuildingSet:
    """Parse the building-set text format and validate the result."""
    ground_size = None
    elements = []
    for number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if ground_size is None:
            keyword, _, value = line.partition(" ")
            if keyword != "ground":
                raise ParseError(f"line {number}: expected 'ground <m>' before any element")
            ground_size = _parse_int(value, "ground size")
            continue
        labels = line.strip("{}").split(",")
        elements.append([_parse_int(label, f"label on line {number}") for label in labels])
    if ground_size is None:
        raise ParseError("building set file has no 'ground <m>' header")
    for element in elements:
        if any(label < 1 for label in element):
            raise ParseError(f"labels are 1-indexed, got {element}")
    return validate(elements, ground_size)


def read_building_set(path) -> BuildingSet:
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except UnicodeDecodeError as e:
        raise ParseError(f"{path} is not UTF-8 text: {e.reason}") from e
    except OSError as e:
        raise ParseError(f"cannot read building set file {path}: {e.strerror}") from e
    return parse_building_set(text)


def format_building_set(building_set: BuildingSet) -> str:
    """Text form of the building set, renumbered onto [m]."""
    canonical = canonicalize(building_set)
    lines = [f"ground {canonical.ground_size}"]
    lines += [",".join(str(label) for label in element) for element in canonical]
    return "\n".join(lines) + "\n"


def write_building_set(building_set: BuildingSet, path):
    with open(path, "w", encoding="utf-8") as f:
        f.write(format_building_set(building_set))
