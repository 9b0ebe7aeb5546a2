import pytest

from bounds_harness import ProductCase, cross_validated_bound, gamma_of, run_suite, \
    verify_connected_bounds, verify_gal_flag, verify_hamiltonian_bounds, verify_monotonicity, \
    verify_product_rule, verify_tree_bounds
from building_sets import interval_building_set, simplex_building_set, singleton_building_set
from common.errors import GroundTooLarge, MTooLarge, MTooSmall, UnknownSuite, UsageError
from face_polynomials import GammaVector
from graphs import cycle_graph, path_graph


def without_timing(report):
    report_dict = report.to_dict()
    report_dict.pop("elapsed_ms")
    return report_dict


def test_gamma_of():
    assert gamma_of(path_graph(3)) == GammaVector.of([1, 1], 2)
    assert gamma_of(cycle_graph(4), "facet_recursion") == GammaVector.of([1, 6], 3)


def test_cross_validated_bound():
    gamma, failures = cross_validated_bound("cy", 3)
    assert gamma.to_list() == [1, 6]
    assert failures == []
    gamma, failures = cross_validated_bound("i", 4)
    assert gamma.to_list() == [1, 0, 0]
    assert failures == []


def test_connected_small():
    report = verify_connected_bounds(3)
    assert report.passed
    assert report.checked == 4
    assert (report.lower.to_list(), report.upper.to_list()) == ([1, 1], [1, 2])


def test_connected_four():
    report = verify_connected_bounds(4)
    assert report.passed, report.failures
    assert report.checked == 38
    assert report.to_dict()["lower"] == [1, 3]
    assert report.to_dict()["upper"] == [1, 8]
    assert report.sharpness["upper"] == {"n": 4, "edges": [[1, 2], [1, 3], [1, 4], [2, 3],
                                                          [2, 4], [3, 4]]}
    assert len(report.sharpness["lower"]["edges"]) == 3


def test_worker_count_does_not_change_the_report():
    serial = verify_connected_bounds(4, jobs=1)
    parallel = verify_connected_bounds(4, jobs=2)
    assert without_timing(serial) == without_timing(parallel)


def test_hamiltonian():
    triangle = verify_hamiltonian_bounds(3)
    assert triangle.passed and triangle.checked == 1
    assert triangle.lower == triangle.upper == GammaVector.of([1, 2], 2)

    report = verify_hamiltonian_bounds(4)
    assert report.passed
    assert report.checked == 10
    assert report.to_dict()["lower"] == [1, 6]
    assert len(report.sharpness["lower"]["edges"]) == 4


def test_trees():
    report = verify_tree_bounds(4)
    assert report.passed
    assert report.checked == 16
    assert report.to_dict()["upper"] == [1, 4]
    star_edges = report.sharpness["upper"]["edges"]
    assert len(star_edges) == 3
    assert len(set.intersection(*(set(edge) for edge in star_edges))) == 1
    assert verify_tree_bounds(5).checked == 125


def test_gal_flag():
    report = verify_gal_flag(4)
    assert report.passed
    assert report.checked == 38
    assert report.to_dict()["lower"] == [1, 0]
    assert any("graphical" in note for note in report.notes)


def test_monotonicity():
    report = verify_monotonicity(4)
    assert report.passed
    assert report.checked == 84


def test_monotonicity_sampling_is_reproducible():
    first = verify_monotonicity(5, samples=6, seed=3)
    second = verify_monotonicity(5, samples=6, seed=3)
    assert first.passed
    assert without_timing(first) == without_timing(second)
    assert any("sampled 6 base graphs with seed 3" in note for note in first.notes)


@pytest.mark.parametrize("samples", [0, -1])
def test_monotonicity_rejects_empty_samples(samples):
    with pytest.raises(UsageError):
        verify_monotonicity(4, samples=samples)


def test_product_rule():
    report = verify_product_rule()
    assert report.passed
    assert report.checked == 3
    assert report.m == 4
    assert "J(J,J): h = [1, 3, 3, 1]" in report.notes


def test_product_rule_flags_a_mismatch_free_custom_case():
    case = ProductCase("K(pt,J)", simplex_building_set(2),
                       (singleton_building_set(), interval_building_set()))
    report = verify_product_rule([case], method="facet_recursion")
    assert report.passed
    assert report.notes == ["K(pt,J): h = [1, 2, 1]"]


def test_product_rule_size_limit():
    interval = interval_building_set()
    big = ProductCase("big", simplex_building_set(5), tuple([interval] * 5))
    with pytest.raises(GroundTooLarge):
        verify_product_rule([big])


def test_run_suite_arguments():
    with pytest.raises(UnknownSuite):
        run_suite("forest", 4)
    with pytest.raises(UsageError):
        run_suite("connected", None)
    with pytest.raises(MTooSmall):
        run_suite("hamiltonian", 2)
    with pytest.raises(MTooLarge):
        run_suite("connected", 8)
    with pytest.raises(MTooLarge):
        run_suite("monotonicity", 7)
    assert run_suite("tree", 3).checked == 3


@pytest.mark.slow
@pytest.mark.parametrize("suite, m, checked", [
    ("connected", 5, 728),
    ("connected", 6, 26704),
    ("tree", 6, 1296),
    ("tree", 7, 16807),
    ("gal-flag", 5, 728),
    ("gal-flag", 6, 26704),
])
def test_exhaustive_runs(suite, m, checked):
    report = run_suite(suite, m, jobs=2)
    assert report.passed, report.failures[:3]
    assert report.checked == checked


@pytest.mark.slow
@pytest.mark.parametrize("m", [5, 6])
def test_exhaustive_hamiltonian(m):
    assert verify_hamiltonian_bounds(m, jobs=2).passed


@pytest.mark.slow
def test_exhaustive_monotonicity_five():
    report = verify_monotonicity(5, jobs=2)
    assert report.passed, report.failures[:3]
    assert report.checked > 728
