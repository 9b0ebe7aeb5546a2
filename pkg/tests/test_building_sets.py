import functools
import itertools
import operator

import pytest

from building_sets import NodeSet, canonicalize, contraction, decompose, interval_building_set, \
    is_subset, restriction, simplex_building_set, singleton_building_set, submasks, \
    substitution, validate
from common.errors import ElementOutsideGround, EmptyElement, EmptyGround, MissingSingleton, \
    NotConnected, PartCountMismatch, SNotInB, UnionViolation
from graphs import complete_graph, enumerate_connected_graphs, graphical_building_set, path_graph


def node_sets(*groups):
    return tuple(NodeSet.of(group) for group in groups)


def test_node_set_basics():
    node_set = NodeSet.of([3, 1])
    assert node_set.members == (1, 3)
    assert repr(node_set) == "{1,3}"
    assert (node_set.min, node_set.max, len(node_set)) == (1, 3, 2)
    assert 3 in node_set and 2 not in node_set
    assert NodeSet.interval(2, 4) == NodeSet.of([2, 3, 4])
    assert (node_set | NodeSet.of([2])) == NodeSet.interval(1, 3)
    assert NodeSet.of([1, 2]).issubset(NodeSet.interval(1, 3))


def test_submasks_cover_all_nonempty_subsets():
    assert list(submasks(0b101)) == [0b001, 0b100, 0b101]


def test_interval_is_valid():
    interval = interval_building_set()
    assert interval.connected
    assert interval.elements == node_sets([1], [2], [1, 2])


def test_missing_singleton_names_the_node():
    with pytest.raises(MissingSingleton) as err:
        validate([{1}, {1, 2}], 2)
    assert err.value.node == 2


def test_union_violation_names_both_elements():
    with pytest.raises(UnionViolation) as err:
        validate([{1}, {2}, {3}, {1, 2}, {2, 3}], 3)
    assert (err.value.first, err.value.second) == node_sets([1, 2], [2, 3])


def test_empty_and_outside_elements():
    with pytest.raises(EmptyElement):
        validate([[], {1}], 1)
    with pytest.raises(ElementOutsideGround):
        validate([{1}, {2}, {3}], 2)


def test_duplicates_collapse():
    assert len(validate([{1}, {1}, {2}, {1, 2}], 2)) == 3


def test_restriction_and_contraction_of_the_path():
    path = graphical_building_set(path_graph(3))
    assert restriction(path, NodeSet.of([1, 2])).elements == node_sets([1], [2], [1, 2])

    contracted = contraction(path, NodeSet.of([2]))
    assert contracted.ground == NodeSet.of([1, 3])
    assert contracted.elements == node_sets([1], [3], [1, 3])
    assert canonicalize(contracted).elements == node_sets([1], [2], [1, 2])


def test_restriction_needs_an_element():
    with pytest.raises(SNotInB):
        restriction(graphical_building_set(path_graph(3)), NodeSet.of([1, 3]))


def test_contraction_by_the_ground_set_is_empty():
    path = graphical_building_set(path_graph(3))
    with pytest.raises(EmptyGround):
        contraction(path, path.ground)


def test_decomposition_takes_maximal_elements():
    path = graphical_building_set(path_graph(3))
    assert decompose(path, NodeSet.of([1, 3])).parts == node_sets([1], [3])
    assert decompose(path, NodeSet.interval(1, 3)).parts == node_sets([1, 2, 3])
    assert len(decompose(path, NodeSet.of([2, 3]))) == 1


def has_shorter_cover(building_set, node_set, size):
    inside = [element for element in building_set.elements if element.issubset(node_set)]
    for candidate in itertools.combinations(inside, size):
        if sum(len(part) for part in candidate) == len(node_set) \
                and functools.reduce(operator.or_, candidate) == node_set:
            return True
    return False


@pytest.mark.parametrize("graph", list(enumerate_connected_graphs(4)), ids=str)
def test_decomposition_is_minimal(graph):
    building_set = graphical_building_set(graph)
    for mask in submasks(building_set.ground.mask):
        node_set = NodeSet(mask)
        parts = decompose(building_set, node_set).parts
        assert all(part in building_set.elements for part in parts)
        assert all(a.isdisjoint(b) for a, b in itertools.combinations(parts, 2))
        assert functools.reduce(operator.or_, parts) == node_set
        assert not any(has_shorter_cover(building_set, node_set, size)
                       for size in range(1, len(parts)))


def test_substitution_of_intervals_into_interval():
    interval = interval_building_set()
    substituted = substitution(interval, [interval, interval])
    assert substituted.ground == NodeSet.interval(1, 4)
    assert set(substituted.elements) == set(node_sets([1], [2], [3], [4], [1, 2], [3, 4],
                                                      [1, 2, 3, 4]))


def test_substitution_of_points_is_identity():
    triangle = graphical_building_set(complete_graph(3))
    point = singleton_building_set()
    assert substitution(triangle, [point, point, point]) == triangle


def test_substitution_checks_its_inputs():
    interval = interval_building_set()
    with pytest.raises(PartCountMismatch):
        substitution(interval, [interval])
    with pytest.raises(NotConnected):
        substitution(interval, [interval, validate([{1}, {2}], 2)])


def test_simplex_and_subset():
    simplex = simplex_building_set(3)
    assert len(simplex) == 4 and simplex.connected
    path = graphical_building_set(path_graph(3))
    triangle = graphical_building_set(complete_graph(3))
    assert is_subset(simplex, path)
    assert is_subset(path, triangle)
    assert not is_subset(triangle, path)
