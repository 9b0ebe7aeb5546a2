"""
    Exhaustive verification of the gamma-vector bounds over enumerated graph classes.

    Every suite walks a deterministic enumeration, splits it into contiguous index
    ranges, checks the ranges (optionally in worker processes) and merges the results
    by range index, so a report does not depend on the number of workers.
"""
import concurrent.futures
import random
import sys
import time
from dataclasses import dataclass, field
from itertools import islice

from building_sets import interval_building_set, singleton_building_set, substitution
from common.errors import GroundTooLarge, MTooLarge, MTooSmall, UnknownSuite, UsageError
from face_complex import face_vector, is_flag
from face_polynomials import GammaVector, convolve, f_from_gamma, g_from_gamma, gamma_from_h, \
    h_from_f, h_from_gamma, leq_componentwise
from families import closed_gamma, closed_h, gamma_family, h_family
from graphs import complete_graph, cycle_graph, edge_additions, enumerate_connected_graphs, \
    enumerate_trees, graphical_building_set, is_hamiltonian, path_graph, star_graph

SUITES = ("connected", "hamiltonian", "tree", "monotonicity", "product", "gal-flag")
SUITE_BOUNDS = {
    "connected": ("as", "pe"),
    "hamiltonian": ("cy", "pe"),
    "tree": ("as", "st"),
    "gal-flag": ("i", "pe"),
}
SUITE_LIMITS = {"connected": 7, "hamiltonian": 7, "tree": 7, "monotonicity": 6, "gal-flag": 6}
SUITE_MINIMUM = {"hamiltonian": 3}
SHARP_SUITES = ("connected", "hamiltonian", "tree")
EXTREMAL_GRAPHS = {"as": path_graph, "cy": cycle_graph, "pe": complete_graph, "st": star_graph}
MAX_PRODUCT_GROUND = 8
CHUNKS_PER_JOB = 4


def _failure(graph, gamma, bound_violated: str) -> dict:
    return {"graph": graph, "gamma": None if gamma is None else list(gamma),
            "bound_violated": bound_violated}


@dataclass
class BoundReport:
    """Certificate of one suite run; it passes iff it lists no failure."""
    suite: str
    m: int
    checked: int = 0
    failures: list = field(default_factory=list)
    elapsed_ms: int = 0
    lower: GammaVector = None
    upper: GammaVector = None
    sharpness: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "m": self.m,
            "checked": self.checked,
            "failures": self.failures,
            "elapsed_ms": self.elapsed_ms,
            "pass": self.passed,
            "lower": None if self.lower is None else list(self.lower),
            "upper": None if self.upper is None else list(self.upper),
            "sharpness": self.sharpness,
            "notes": self.notes,
        }


def gamma_of(graph, method: str = "enumeration") -> GammaVector:
    """gamma(P_Gamma) by the selected face method."""
    return gamma_from_h(h_from_f(face_vector(graphical_building_set(graph), method)))


def cross_validated_bound(name: str, n: int, method: str = "enumeration"):
    """
    gamma(X^n) once the recurrence, the closed form and, where a graph realises the
    family, face enumeration agree on both h and gamma.
    Returns:
    (GammaVector, list of failure dicts)
    """
    failures = []
    gamma = gamma_family(name, n)
    h = h_family(name, n)
    routes = {"closed form": (closed_h(name, n), closed_gamma(name, n))}
    make_graph = EXTREMAL_GRAPHS.get(name)
    if make_graph is not None and not (name == "cy" and n + 1 < 3):
        graph = make_graph(n + 1)
        enumerated_h = h_from_f(face_vector(graphical_building_set(graph), method))
        routes["enumeration"] = (enumerated_h, gamma_from_h(enumerated_h))
    for route, (other_h, other_gamma) in routes.items():
        if other_h != h or other_gamma != gamma:
            failures.append(_failure(None, other_gamma,
                                     f"bound cross-check: {name}^{n} recurrence != {route}"))
    return gamma, failures


@dataclass(frozen=True)
class ChunkTask:
    index: int
    suite: str
    m: int
    positions: object
    method: str
    lower: GammaVector = None
    upper: GammaVector = None


@dataclass
class ChunkResult:
    index: int
    checked: int = 0
    failures: list = field(default_factory=list)
    lower_witness: dict = None
    upper_witness: dict = None


def _base_stream(suite: str, m: int):
    if suite == "tree":
        return enumerate_trees(m)
    return enumerate_connected_graphs(m)


def _chain_failures(graph_dict, gamma, lower, upper) -> list:
    """g, h and f follow the gamma bounds; each link is checked separately."""
    failures = []
    for kind, convert in (("g", g_from_gamma), ("h", h_from_gamma), ("f", f_from_gamma)):
        value = convert(gamma)
        if lower is not None and not leq_componentwise(convert(lower), value):
            failures.append(_failure(graph_dict, gamma, f"lower ({kind})"))
        if upper is not None and not leq_componentwise(value, convert(upper)):
            failures.append(_failure(graph_dict, gamma, f"upper ({kind})"))
    return failures


def _bound_failures(graph_dict, gamma, lower, upper) -> list:
    failures = []
    if not leq_componentwise(lower, gamma):
        failures.append(_failure(graph_dict, gamma, "lower"))
    if not leq_componentwise(gamma, upper):
        failures.append(_failure(graph_dict, gamma, "upper"))
    if not failures:
        failures = _chain_failures(graph_dict, gamma, lower, upper)
    return failures


def _check_monotone_covers(graph, method, result: ChunkResult):
    gamma = gamma_of(graph, method)
    for edge, supergraph in edge_additions(graph):
        result.checked += 1
        larger = gamma_of(supergraph, method)
        if not leq_componentwise(gamma, larger):
            graph_dict = supergraph.to_dict() | {"added_edge": list(edge)}
            result.failures.append(_failure(graph_dict, larger,
                                            f"monotonicity: gamma without the edge is {list(gamma)}"))


def check_chunk(task: ChunkTask) -> ChunkResult:
    """Check the graphs at the given positions of the suite enumeration."""
    result = ChunkResult(task.index)
    positions = task.positions
    if not positions:
        return result
    first, last = positions[0], positions[-1]
    wanted = positions if isinstance(positions, range) else set(positions)
    # every worker re-enumerates and skips to its own range
    stream = islice(_base_stream(task.suite, task.m), first, last + 1)
    for position, graph in enumerate(stream, start=first):
        if position not in wanted:
            continue
        if task.suite == "monotonicity":
            _check_monotone_covers(graph, task.method, result)
            continue
        if task.suite == "hamiltonian" and not is_hamiltonian(graph):
            continue

        result.checked += 1
        graph_dict = graph.to_dict()
        if task.suite == "gal-flag":
            building_set = graphical_building_set(graph)
            gamma = gamma_from_h(h_from_f(face_vector(building_set, task.method)))
            if not is_flag(building_set):
                result.failures.append(_failure(graph_dict, gamma, "flag"))
            if any(value < 0 for value in gamma):
                result.failures.append(_failure(graph_dict, gamma, "nonnegativity"))
        else:
            gamma = gamma_of(graph, task.method)
        result.failures.extend(_bound_failures(graph_dict, gamma, task.lower, task.upper))
        if result.lower_witness is None and gamma == task.lower:
            result.lower_witness = graph_dict
        if result.upper_witness is None and gamma == task.upper:
            result.upper_witness = graph_dict
    return result


def _split(positions, chunks: int) -> list:
    size, extra = divmod(len(positions), chunks)
    pieces = []
    start = 0
    for idx in range(chunks):
        stop = start + size + (1 if idx < extra else 0)
        pieces.append(positions[start:stop])
        start = stop
    return pieces


def _run_chunks(tasks: list, jobs: int, verbose: bool) -> list:
    """Run chunk tasks inline or in a process pool; results ordered by chunk index."""
    if jobs <= 1:
        results = []
        for task in tasks:
            results.append(check_chunk(task))
            if verbose:
                print(f"Finished chunk {task.index + 1}/{len(tasks)}", file=sys.stderr)
        return results

    results = []
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as executor:
        futures = [executor.submit(check_chunk, task) for task in tasks]
        for future in concurrent.futures.as_completed(futures):
            result = future.result()
            results.append(result)
            if verbose:
                print(f"Finished chunk {result.index + 1}/{len(tasks)}", file=sys.stderr)
    results.sort(key=lambda chunk: chunk.index)
    return results


def _check_m(suite: str, m: int):
    if m is None:
        raise UsageError(f"suite {suite} needs a node count m")
    minimum = SUITE_MINIMUM.get(suite, 1)
    if m < minimum:
        raise MTooSmall(suite, m, minimum)
    if m > SUITE_LIMITS[suite]:
        raise MTooLarge(suite, m, SUITE_LIMITS[suite])


def _enumeration_size(suite: str, m: int) -> int:
    if suite == "tree":
        return 1 if m <= 2 else m ** (m - 2)
    return sum(1 for _ in enumerate_connected_graphs(m))


def _run_graph_suite(suite: str, m: int, jobs: int = 1, method: str = "enumeration",
                     samples: int = None, seed: int = 0, verbose: bool = False) -> BoundReport:
    _check_m(suite, m)
    if samples is not None and samples < 1:
        raise UsageError(f"--samples must be a positive number of base graphs, got {samples}")
    started = time.perf_counter()
    report = BoundReport(suite, m)

    if suite in SUITE_BOUNDS:
        lower_name, upper_name = SUITE_BOUNDS[suite]
        report.lower, lower_failures = cross_validated_bound(lower_name, m - 1, method)
        report.upper, upper_failures = cross_validated_bound(upper_name, m - 1, method)
        report.failures.extend(lower_failures + upper_failures)
        report.notes.append(f"bounds gamma({lower_name}^{m - 1}) and gamma({upper_name}^{m - 1}) "
                            "agree across recurrence, closed form and enumeration")
    if suite == "gal-flag":
        report.notes.append("flagness and gamma >= 0 are checked on graphical building sets only")

    positions = range(_enumeration_size(suite, m))
    if suite == "monotonicity":
        report.notes.append("edge-addition covers (G, G+e) of connected graphs")
        if samples is not None and samples < len(positions):
            positions = tuple(sorted(random.Random(seed).sample(positions, samples)))
            report.notes.append(f"sampled {samples} base graphs with seed {seed}")

    chunks = jobs * CHUNKS_PER_JOB if jobs > 1 else 1
    tasks = [ChunkTask(idx, suite, m, piece, method, report.lower, report.upper)
             for idx, piece in enumerate(_split(positions, chunks))]
    if verbose:
        print(f"Checking suite {suite} m={m} in {len(tasks)} chunks ...", file=sys.stderr)

    # first witness in enumeration order, independent of jobs
    lower_witness = upper_witness = None
    for result in _run_chunks(tasks, jobs, verbose):
        report.checked += result.checked
        report.failures.extend(result.failures)
        lower_witness = lower_witness or result.lower_witness
        upper_witness = upper_witness or result.upper_witness

    if suite in SUITE_BOUNDS:
        report.sharpness = {"lower": lower_witness, "upper": upper_witness}
        if suite in SHARP_SUITES:
            if lower_witness is None:
                report.failures.append(_failure(None, report.lower, "sharpness (lower)"))
            if upper_witness is None:
                report.failures.append(_failure(None, report.upper, "sharpness (upper)"))

    report.elapsed_ms = int((time.perf_counter() - started) * 1000)
    return report


def verify_connected_bounds(m: int, **options) -> BoundReport:
    """gamma(As^(m-1)) <= gamma(P_Gamma) <= gamma(Pe^(m-1)) over connected graphs on [m]."""
    return _run_graph_suite("connected", m, **options)


def verify_hamiltonian_bounds(m: int, **options) -> BoundReport:
    """gamma(Cy^(m-1)) <= gamma(P_Gamma) <= gamma(Pe^(m-1)) over Hamiltonian graphs on [m]."""
    return _run_graph_suite("hamiltonian", m, **options)


def verify_tree_bounds(m: int, **options) -> BoundReport:
    """gamma(As^(m-1)) <= gamma(P_T) <= gamma(St^(m-1)) over labeled trees on [m]."""
    return _run_graph_suite("tree", m, **options)


def verify_gal_flag(m: int, **options) -> BoundReport:
    """Flagness, gamma >= 0 and gamma(I^(m-1)) <= gamma <= gamma(Pe^(m-1))."""
    return _run_graph_suite("gal-flag", m, **options)


def verify_monotonicity(m: int, samples: int = None, **options) -> BoundReport:
    """gamma(P_Gamma) <= gamma(P_{Gamma+e}) for every cover, or for sampled base graphs."""
    return _run_graph_suite("monotonicity", m, samples=samples, **options)


@dataclass(frozen=True)
class ProductCase:
    name: str
    outer: object
    parts: tuple

    @property
    def ground_size(self) -> int:
        return sum(part.ground_size for part in self.parts)


def default_product_cases() -> list:
    interval = interval_building_set()
    point = singleton_building_set()
    return [
        ProductCase("J(J,J)", interval, (interval, interval)),
        ProductCase("B(K3)(pt,pt,pt)", graphical_building_set(complete_graph(3)),
                    (point, point, point)),
        ProductCase("J(B(P3),pt)", interval,
                    (graphical_building_set(path_graph(3)), point)),
    ]


def verify_product_rule(cases=None, method: str = "enumeration",
                        verbose: bool = False) -> BoundReport:
    """h of a substituted building set equals the product of the component h-vectors."""
    cases = default_product_cases() if cases is None else list(cases)
    started = time.perf_counter()
    report = BoundReport("product", max((case.ground_size for case in cases), default=0))
    for case in cases:
        if case.ground_size > MAX_PRODUCT_GROUND:
            raise GroundTooLarge(case.ground_size, MAX_PRODUCT_GROUND)
        if verbose:
            print(f"Checking product case {case.name} ...", file=sys.stderr)
        substituted = substitution(case.outer, case.parts)
        h = h_from_f(face_vector(substituted, method))
        expected = h_from_f(face_vector(case.outer, method))
        for part in case.parts:
            expected = convolve(expected, h_from_f(face_vector(part, method)))
        report.checked += 1
        if h != expected:
            report.failures.append(_failure({"case": case.name}, h,
                                            f"product: expected h = {list(expected)}"))
        report.notes.append(f"{case.name}: h = {list(h)}")
    report.elapsed_ms = int((time.perf_counter() - started) * 1000)
    return report


def run_suite(suite: str, m: int = None, jobs: int = 1, method: str = "enumeration",
              samples: int = None, seed: int = 0, cases=None,
              verbose: bool = False) -> BoundReport:
    """Dispatch a suite by name."""
    match suite:
        case "product":
            return verify_product_rule(cases, method=method, verbose=verbose)
        case "monotonicity":
            return verify_monotonicity(m, samples=samples, seed=seed, jobs=jobs,
                                       method=method, verbose=verbose)
        case "connected" | "hamiltonian" | "tree" | "gal-flag":
            return _run_graph_suite(suite, m, jobs=jobs, method=method, verbose=verbose)
    raise UnknownSuite(suite, SUITES)
