from math import comb, factorial

import pytest

from building_sets import NodeSet, mask_labels, submasks
from common.errors import MTooLarge, NotConnected, OrderTooLarge, OutOfRange, UnknownFamily, \
    UnknownIdentity, VNotClique
from face_complex import f_vector
from face_polynomials import GammaVector, HVector, h_from_f
from families import ALPHA, FAMILY_NAMES, IDENTITIES, T, catalan, check_identity, \
    closed_gamma, closed_h, construction_ind, eulerian, eulerian_by_descents, family_table, \
    family_vector, gamma_family, graph_vectors, h_family, narayana, series
from graphs import complete_graph, cycle_graph, enumerate_connected_graphs, \
    graphical_building_set, is_clique, make_graph, path_graph, star_graph

FAMILY_GRAPHS = {"as": path_graph, "cy": cycle_graph, "pe": complete_graph, "st": star_graph}


@pytest.mark.parametrize("name, n, expected", [
    ("as", 2, [1, 1]),
    ("as", 3, [1, 3]),
    ("as", 4, [1, 6, 2]),
    ("cy", 2, [1, 2]),
    ("cy", 3, [1, 6]),
    ("pe", 2, [1, 2]),
    ("pe", 3, [1, 8]),
    ("st", 3, [1, 4]),
    ("i", 4, [1, 0, 0]),
])
def test_gamma_values(name, n, expected):
    assert gamma_family(name, n).to_list() == expected


def test_permutohedron_table():
    rows = [vector.to_list() for vector in family_table("pe", 4, "h")]
    assert rows == [[1], [1, 1], [1, 4, 1], [1, 11, 11, 1], [1, 26, 66, 26, 1]]


def test_family_vector_kinds():
    assert family_vector("as", 3, "f").to_list() == [14, 21, 9, 1]
    assert family_vector("cy", 3, "g").to_list() == [1, 8]
    with pytest.raises(ValueError):
        family_vector("as", 3, "q")


def test_table_limits():
    with pytest.raises(MTooLarge):
        family_table("as", 13, "h")
    with pytest.raises(UnknownFamily):
        family_table("xx", 3, "h")
    with pytest.raises(OutOfRange):
        h_family("as", -1)


@pytest.mark.parametrize("name", FAMILY_NAMES)
def test_recurrence_matches_closed_forms(name):
    for n in range(11):
        assert h_family(name, n) == closed_h(name, n), n
        assert gamma_family(name, n) == closed_gamma(name, n), n


@pytest.mark.parametrize("name, first_m", [("as", 2), ("cy", 3), ("pe", 2), ("st", 2)])
def test_recurrence_matches_face_enumeration(name, first_m):
    for m in range(first_m, 6):
        building_set = graphical_building_set(FAMILY_GRAPHS[name](m))
        assert h_family(name, m - 1) == h_from_f(f_vector(building_set)), m


@pytest.mark.slow
@pytest.mark.parametrize("m", [6, 7])
def test_recurrence_matches_face_enumeration_large(m):
    for name, graph in FAMILY_GRAPHS.items():
        assert h_family(name, m - 1) == h_from_f(f_vector(graphical_building_set(graph(m)))), name


def test_vertex_counts():
    for n in range(9):
        assert sum(h_family("as", n)) == catalan(n + 1)
        assert sum(h_family("cy", n)) == comb(2 * n, n)
        assert sum(h_family("pe", n)) == factorial(n + 1)
        assert sum(h_family("i", n)) == 2 ** n


def test_eulerian_numbers():
    assert [eulerian(3, k) for k in range(3)] == [1, 4, 1]
    assert [eulerian(4, k) for k in range(4)] == [1, 11, 11, 1]
    assert eulerian(1, 0) == 1
    for n in range(1, 8):
        assert eulerian_by_descents(n) == tuple(eulerian(n, k) for k in range(n))
    with pytest.raises(OutOfRange):
        eulerian(3, 3)


def test_catalan_and_narayana():
    assert [catalan(n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]
    assert [narayana(4, k) for k in range(1, 5)] == [1, 6, 6, 1]
    with pytest.raises(OutOfRange):
        narayana(3, 0)


@pytest.mark.parametrize("graph, clique, expected_graph, expected_gamma", [
    (path_graph(2), [2], path_graph(3), [1, 1]),
    (complete_graph(3), [1, 2, 3], complete_graph(4), [1, 8]),
    (star_graph(3), [1], star_graph(4), [1, 4]),
    (path_graph(3), [3], path_graph(4), [1, 3]),
])
def test_construction_examples(graph, clique, expected_graph, expected_gamma):
    result = construction_ind(graph, NodeSet.of(clique))
    assert result.graph == expected_graph
    assert result.gamma.to_list() == expected_gamma
    assert result.h == h_from_f(f_vector(graphical_building_set(expected_graph)))


def check_construction(m):
    for graph in enumerate_connected_graphs(m):
        for mask in submasks(graph.node_set.mask):
            clique = NodeSet.of(mask_labels(mask))
            if not is_clique(graph, clique):
                continue
            new_graph, gamma, h = construction_ind(graph, clique)
            assert (h, gamma) == graph_vectors(new_graph), (graph, clique)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_construction_agrees_with_enumeration(m):
    check_construction(m)


@pytest.mark.slow
def test_construction_agrees_with_enumeration_five():
    check_construction(5)


def test_construction_rejects_bad_input():
    with pytest.raises(VNotClique):
        construction_ind(path_graph(3), NodeSet.of([1, 3]))
    with pytest.raises(VNotClique):
        construction_ind(path_graph(3), NodeSet.of([]))
    with pytest.raises(NotConnected):
        construction_ind(make_graph([1, 2, 3], [(1, 2)]), NodeSet.of([1]))


def test_series_coefficients():
    u = series("u", 3)
    assert u[0] == 0
    assert u[1] == 1
    assert u[2] == ALPHA + T
    assert u[3] == ALPHA ** 2 + 3 * ALPHA * T + T ** 2
    v = series("v", 2)
    assert v[2] == ALPHA + T
    pe = series("pe", 3)
    assert pe.kind == "exponential"
    assert pe[3] == ALPHA ** 2 + 4 * ALPHA * T + T ** 2


@pytest.mark.parametrize("name", ["as", "cy", "pe", "st", "u", "v"])
def test_h_series_are_homogeneous(name):
    assert series(name, 10).is_homogeneous()


@pytest.mark.parametrize("name", ["gamma_as", "gamma_cy", "gamma_pe", "gamma_st"])
def test_gamma_series_start_with_one(name):
    coefficients = series(name, 10).coefficients
    if name == "gamma_pe":
        assert coefficients[0] == 0
        coefficients = coefficients[1:]
    assert all(dict(c.terms()).get((0,), 0) == 1 for c in coefficients)


def test_series_limits():
    with pytest.raises(OrderTooLarge):
        series("u", 31)
    with pytest.raises(UnknownFamily):
        series("w", 3)


@pytest.mark.parametrize("identity", sorted(IDENTITIES))
def test_identities_hold(identity):
    report = check_identity(identity, 12)
    assert report.verified, report.message
    assert report.message == "verified to order 12"


def test_corrupted_associahedron_is_caught():
    overrides = {("as", 3): HVector.of([1, 6, 6, 2])}
    report = check_identity("as_functional", 12, overrides)
    assert report.first_failure == 4
    assert report.message == "fails at order 4"
    assert check_identity("as_closed_form", 12, overrides).first_failure == 3


@pytest.mark.parametrize("identity, family, n, corrupted", [
    ("cy_relation", "cy", 2, [1, 5, 1]),
    ("st_ode", "st", 2, [1, 4, 1]),
    ("pe_ode", "pe", 3, [1, 12, 12, 1]),
    ("pe_closed_form", "pe", 3, [1, 12, 12, 1]),
])
def test_single_corrupted_value_is_caught(identity, family, n, corrupted):
    assert check_identity(identity, 8).verified
    report = check_identity(identity, 8, {(family, n): HVector.of(corrupted)})
    assert not report.verified
    assert report.first_failure <= n + 1


def test_corrupted_gamma_is_caught():
    overrides = {("pe", 2): GammaVector.of([1, 3], 2)}
    assert not check_identity("gamma_pe_ode", 8, overrides).verified
    assert check_identity("pe_ode", 8, overrides).verified


def test_unknown_identity():
    with pytest.raises(UnknownIdentity):
        check_identity("nope", 5)
