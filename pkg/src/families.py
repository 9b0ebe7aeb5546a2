"""
    Named series of graph-associahedra and their generating functions.

    as: associahedra As^n (path on n+1 nodes)
    cy: cyclohedra Cy^n (cycle on n+1 nodes)
    pe: permutohedra Pe^n (complete graph on n+1 nodes)
    st: stellohedra St^n (star on n+1 nodes)
    i:  cubes I^n (product of n intervals)

    Values come from the shaving recurrences and are memoised per process; closed
    forms, the node-addition construction for an arbitrary graph and the generating-function
    identities are independent routes used to cross-check them.
"""
import functools
import itertools
from dataclasses import dataclass
from math import comb, factorial

from sympy.polys.domains import ZZ
from sympy.polys.rings import ring

from building_sets import NodeSet
from common.errors import GammaUndefined, MTooLarge, NotConnected, NotSymmetric, \
    OrderTooLarge, OutOfRange, UnknownFamily, UnknownIdentity, VNotClique
from face_complex import cached_face_vector
from face_polynomials import FaceVector, GammaVector, HVector, convolve_lists, f_from_h, \
    g_from_h, gamma_from_h, h_from_f
from graphs import SimpleGraph, add_node, graphical_building_set, induced_subgraph, \
    is_clique, is_connected, quotient

FAMILY_NAMES = ("as", "cy", "pe", "st", "i")
MAX_SERIES_ORDER = 30
MAX_FAMILY_TABLE_N = 12

H_RING, ALPHA, T = ring("alpha,t", ZZ)
GAMMA_RING, TAU = ring("tau", ZZ)


def _check_family(name: str):
    if name not in FAMILY_NAMES:
        raise UnknownFamily(name, FAMILY_NAMES)


def _add_shifted(total: list, values, weight: int, shift: int):
    for idx, value in enumerate(values):
        if value:
            while len(total) <= idx + shift:
                total.append(0)
            total[idx + shift] += weight * value


def _shaving_terms(name: str, n: int):
    """(multiplicity, family of the first factor, its dim, family of the second, its dim)."""
    match name:
        case "as":
            return [(1, "as", i - 1, "as", n - i - 1) for i in range(1, n)]
        case "cy":
            return [(2, "as", i - 1, "cy", n - i - 1) for i in range(1, n)]
        case "pe":
            return [(comb(n, i), "pe", i - 1, "pe", n - i - 1) for i in range(1, n)]
        case "st":
            return [(comb(n - 1, i - 1), "st", i - 1, "pe", n - i - 1) for i in range(1, n)]
        case "i":
            return []
    raise UnknownFamily(name, FAMILY_NAMES)


@functools.cache
def _gamma_recurrence(name: str, n: int) -> tuple:
    """gamma(X^n) = gamma(X^(n-1)) + tau * sum of shaved products, as a tau-list."""
    if n == 0:
        return (1,)
    total = list(_gamma_recurrence(name, n - 1))
    for weight, first, first_n, second, second_n in _shaving_terms(name, n):
        product = convolve_lists(_gamma_recurrence(first, first_n),
                                 _gamma_recurrence(second, second_n))
        _add_shifted(total, product, weight, 1)
    return tuple(total)


@functools.cache
def _h_recurrence(name: str, n: int) -> tuple:
    """H(X^n) = (alpha + t) H(X^(n-1)) + alpha t * sum of shaved products, by power of t."""
    if n == 0:
        return (1,)
    previous = _h_recurrence(name, n - 1)
    total = [0] * (n + 1)
    _add_shifted(total, previous, 1, 0)
    _add_shifted(total, previous, 1, 1)
    for weight, first, first_n, second, second_n in _shaving_terms(name, n):
        product = convolve_lists(_h_recurrence(first, first_n),
                                 _h_recurrence(second, second_n))
        _add_shifted(total, product, weight, 1)
    return tuple(total)


def _require_dimension(n: int):
    if n < 0:
        raise OutOfRange(f"polytope dimension must be >= 0, got {n}")


def gamma_family(name: str, n: int) -> GammaVector:
    """gamma-vector of X^n by the shaving recurrence."""
    _check_family(name)
    _require_dimension(n)
    return GammaVector.of(_gamma_recurrence(name, n), n)


def h_family(name: str, n: int) -> HVector:
    """h-vector of X^n by the shaving recurrence."""
    _check_family(name)
    _require_dimension(n)
    return HVector.of(_h_recurrence(name, n))


def family_vector(name: str, n: int, kind: str) -> FaceVector:
    """One of f, h, g, gamma for X^n."""
    match kind:
        case "f":
            return f_from_h(h_family(name, n))
        case "h":
            return h_family(name, n)
        case "g":
            return g_from_h(h_family(name, n))
        case "gamma":
            return gamma_family(name, n)
    raise ValueError(f"Unsupported vector kind: {kind}")


def family_table(name: str, max_n: int, kind: str) -> list:
    """Rows n = 0..max_n of the selected vector."""
    _check_family(name)
    if max_n > MAX_FAMILY_TABLE_N:
        raise MTooLarge("family table", max_n, MAX_FAMILY_TABLE_N)
    _require_dimension(max_n)
    return [family_vector(name, n, kind) for n in range(max_n + 1)]


@functools.cache
def _eulerian_row(n: int) -> tuple:
    if n == 1:
        return (1,)
    previous = _eulerian_row(n - 1)

    def entry(k):
        return previous[k] if 0 <= k < n - 1 else 0

    return tuple((k + 1) * entry(k) + (n - k) * entry(k - 1) for k in range(n))


def eulerian(n: int, k: int) -> int:
    """A(n, k): permutations of [n] with exactly k descents, 0 <= k < n."""
    if not 0 <= k < n:
        raise OutOfRange(f"Eulerian number A({n}, {k}) needs 0 <= k < n")
    return _eulerian_row(n)[k]


def eulerian_by_descents(n: int) -> tuple:
    """Row A(n, .) by counting descents over all of Sym(n)."""
    if n < 1:
        raise OutOfRange(f"Eulerian row needs n >= 1, got {n}")
    row = [0] * n
    for permutation in itertools.permutations(range(n)):
        row[sum(1 for a, b in zip(permutation, permutation[1:]) if a > b)] += 1
    return tuple(row)


def catalan(n: int) -> int:
    if n < 0:
        raise OutOfRange(f"Catalan number needs n >= 0, got {n}")
    return comb(2 * n, n) // (n + 1)


def narayana(n: int, k: int) -> int:
    """N(n, k) = C(n, k) C(n, k-1) / n for 1 <= k <= n."""
    if not 1 <= k <= n:
        raise OutOfRange(f"Narayana number N({n}, {k}) needs 1 <= k <= n")
    return comb(n, k) * comb(n, k - 1) // n


def closed_h(name: str, n: int) -> HVector:
    """h-vector of X^n by explicit formula."""
    _check_family(name)
    _require_dimension(n)
    match name:
        case "as":
            return HVector.of(narayana(n + 1, i + 1) for i in range(n + 1))
        case "cy":
            return HVector.of(comb(n, i) ** 2 for i in range(n + 1))
        case "pe":
            return HVector.of(eulerian(n + 1, i) for i in range(n + 1))
        case "st":
            # the sum formula holds for i > 0 only
            return HVector.of([1] + [sum(comb(n, k) * eulerian(k, i - 1) for k in range(i, n + 1))
                                     for i in range(1, n + 1)])
        case "i":
            return HVector.of(comb(n, i) for i in range(n + 1))


def closed_gamma(name: str, n: int) -> GammaVector:
    """gamma-vector of X^n by explicit formula (pe and st through their closed h)."""
    _check_family(name)
    _require_dimension(n)
    match name:
        case "as":
            return GammaVector.of([catalan(i) * comb(n, 2 * i) for i in range(n // 2 + 1)], n)
        case "cy":
            return GammaVector.of([factorial(n) // (factorial(i) ** 2 * factorial(n - 2 * i))
                                   for i in range(n // 2 + 1)], n)
        case "i":
            return GammaVector.of([1], n)
        case _:
            return gamma_from_h(closed_h(name, n))


def graph_vectors(graph: SimpleGraph, method: str = "enumeration") -> tuple:
    """(h, gamma) of the graph-associahedron P_Gamma."""
    h = h_from_f(cached_face_vector(graphical_building_set(graph), method))
    try:
        return h, gamma_from_h(h)
    except NotSymmetric as err:
        raise GammaUndefined(str(err)) from err


@dataclass(frozen=True)
class ConstructionResult:
    graph: SimpleGraph
    gamma: GammaVector
    h: HVector

    def __iter__(self):
        return iter((self.graph, self.gamma, self.h))


def construction_ind(graph: SimpleGraph, clique: NodeSet,
                     method: str = "enumeration") -> ConstructionResult:
    """
    Add a node adjacent exactly to the clique V and update gamma and H by shaving.
    Parameters:
    graph: SimpleGraph
        Connected graph on [m]
    clique: NodeSet
        Nonempty node set inducing a complete subgraph
    method: str
        Face method used for the factors P_{Gamma|S} and P_{Gamma/S}
    Returns:
    ConstructionResult
        (Gamma', gamma', h') with
        gamma' = gamma(Gamma) + tau * sum_S gamma(Gamma|S) gamma(Gamma/S)
        H'     = (alpha + t) H(Gamma) + alpha t * sum_S H(Gamma|S) H(Gamma/S)
        over S in B(Gamma) other than [m] meeting V
    """
    if not is_connected(graph):
        raise NotConnected("node addition needs a connected graph")
    if not clique or not clique.issubset(graph.node_set) or not is_clique(graph, clique):
        raise VNotClique(clique)

    building_set = graphical_building_set(graph)
    h, gamma = graph_vectors(graph, method)
    gamma_total = list(gamma.entries)
    h_total = [0] * (h.degree + 2)
    _add_shifted(h_total, h.entries, 1, 0)
    _add_shifted(h_total, h.entries, 1, 1)

    for node_set in building_set.proper_elements():
        if node_set.isdisjoint(clique):
            continue
        h_restricted, gamma_restricted = graph_vectors(induced_subgraph(graph, node_set), method)
        h_quotient, gamma_quotient = graph_vectors(quotient(graph, node_set), method)
        _add_shifted(gamma_total, convolve_lists(gamma_restricted.entries, gamma_quotient.entries),
                     1, 1)
        _add_shifted(h_total, convolve_lists(h_restricted.entries, h_quotient.entries), 1, 1)

    degree = h.degree + 1
    return ConstructionResult(add_node(graph, clique), GammaVector.of(gamma_total, degree),
                              HVector.of(h_total))


SERIES_NAMES = ("as", "cy", "pe", "st", "u", "v",
                "gamma_as", "gamma_cy", "gamma_pe", "gamma_st")
SERIES_KINDS = ("ordinary", "exponential")


@dataclass(frozen=True)
class GradedSeries:
    """
    Truncated series sum_n c_n x^n (ordinary) or sum_n c_n x^n / n! (exponential),
    n = 0..order. Coefficients live in a sympy polynomial ring over ZZ: (alpha, t) with
    c_n homogeneous of degree n + offset, or tau for gamma-series.
    """
    coefficients: tuple
    ring: object
    kind: str = "ordinary"
    offset: int = 0

    def __post_init__(self):
        if self.kind not in SERIES_KINDS:
            raise ValueError(f"Unsupported series kind: {self.kind}")

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, idx):
        return self.coefficients[idx]

    def _like(self, coefficients, offset=None) -> "GradedSeries":
        return GradedSeries(tuple(coefficients), self.ring, self.kind,
                            self.offset if offset is None else offset)

    def _check_compatible(self, other: "GradedSeries"):
        if other.kind != self.kind or other.ring != self.ring:
            raise ValueError(f"cannot combine {self.kind} and {other.kind} series")

    def __add__(self, other: "GradedSeries") -> "GradedSeries":
        self._check_compatible(other)
        return self._like(a + b for a, b in zip(self.coefficients, other.coefficients))

    def __sub__(self, other: "GradedSeries") -> "GradedSeries":
        self._check_compatible(other)
        return self._like(a - b for a, b in zip(self.coefficients, other.coefficients))

    def __mul__(self, other: "GradedSeries") -> "GradedSeries":
        """Plain convolution for ordinary, binomial convolution for exponential series."""
        self._check_compatible(other)
        order = min(self.order, other.order)
        binomial = self.kind == "exponential"
        product = []
        for n in range(order + 1):
            total = self.ring.zero
            for k in range(n + 1):
                term = self.coefficients[k] * other.coefficients[n - k]
                total += comb(n, k) * term if binomial else term
            product.append(total)
        return self._like(product, self.offset + other.offset)

    def scale(self, factor, degree: int = 0) -> "GradedSeries":
        """Multiply every coefficient by a ring element of the given degree."""
        return self._like((factor * c for c in self.coefficients), self.offset + degree)

    def times_x(self) -> "GradedSeries":
        """Multiply by x, keeping the order."""
        if self.kind == "ordinary":
            shifted = [self.ring.zero] + list(self.coefficients[:-1])
        else:
            shifted = [self.ring.zero] + [k * c for k, c in
                                          enumerate(self.coefficients[:-1], start=1)]
        return self._like(shifted, self.offset - 1)

    def derivative(self) -> "GradedSeries":
        """d/dx; the order drops by one."""
        if self.kind == "ordinary":
            shifted = [k * c for k, c in enumerate(self.coefficients) if k][:self.order]
        else:
            shifted = list(self.coefficients[1:])
        return self._like(shifted, self.offset + 1)

    def first_mismatch(self, other: "GradedSeries"):
        """Smallest n with differing coefficients, None when equal up to the common order."""
        for n, (a, b) in enumerate(zip(self.coefficients, other.coefficients)):
            if a != b:
                return n
        return None

    def is_homogeneous(self) -> bool:
        """Every monomial of c_n has total degree n + offset; meaningless for tau-series."""
        for n, coefficient in enumerate(self.coefficients):
            if any(sum(monom) != n + self.offset for monom, _ in coefficient.terms()):
                return False
        return True

    @classmethod
    def constant(cls, value, order: int, ring=H_RING, kind: str = "ordinary") -> "GradedSeries":
        return cls(tuple([ring(value)] + [ring.zero] * order), ring, kind, 0)

    @classmethod
    def exponential_of(cls, generator, order: int) -> "GradedSeries":
        """e^{generator x} as an exponential series: c_n = generator^n."""
        return cls(tuple(generator ** n for n in range(order + 1)), generator.ring,
                   "exponential", 0)


def h_polynomial(h: HVector):
    """sum_i h_i alpha^(n-i) t^i in the (alpha, t) ring."""
    return sum((value * ALPHA ** (h.degree - i) * T ** i for i, value in enumerate(h)),
               H_RING.zero)


def gamma_polynomial(gamma: GammaVector):
    """sum_i gamma_i tau^i in the tau ring."""
    return sum((value * TAU ** i for i, value in enumerate(gamma)), GAMMA_RING.zero)


def _value(family: str, n: int, kind: str, overrides: dict):
    override = overrides.get((family, n))
    if isinstance(override, FaceVector) and override.kind == kind:
        return override
    if override is not None and not isinstance(override, FaceVector) and kind == "h":
        return HVector.of(override)
    return h_family(family, n) if kind == "h" else gamma_family(family, n)


def series(name: str, order: int, overrides: dict = None) -> GradedSeries:
    """
    Truncated generating function to x^order.
    as, cy: H(X^n) x^n; u, v: x times those; pe: H(Pe^n) x^(n+1)/(n+1)!;
    st: H(St^n) x^n/n!; gamma_* likewise with gamma(X^n) in the tau ring.
    Parameters:
    overrides: dict
        {(family, n): vector} replacing single family values, HVector for H-series and
        GammaVector for gamma-series
    """
    if name not in SERIES_NAMES:
        raise UnknownFamily(name, SERIES_NAMES)
    if order > MAX_SERIES_ORDER:
        raise OrderTooLarge(order, MAX_SERIES_ORDER)
    if order < 0:
        raise OutOfRange(f"series order must be >= 0, got {order}")
    overrides = overrides or {}

    if name.startswith("gamma_"):
        family = name.removeprefix("gamma_")
        ring_, to_poly, kind = GAMMA_RING, gamma_polynomial, "gamma"
    else:
        family = {"u": "as", "v": "cy"}.get(name, name)
        ring_, to_poly, kind = H_RING, h_polynomial, "h"

    def coefficient(n):
        return to_poly(_value(family, n, kind, overrides))

    match name:
        case "as" | "cy" | "gamma_as" | "gamma_cy":
            return GradedSeries(tuple(coefficient(n) for n in range(order + 1)), ring_)
        case "u" | "v":
            return GradedSeries(tuple([ring_.zero] + [coefficient(n - 1)
                                                      for n in range(1, order + 1)]),
                                ring_, offset=-1)
        case "pe" | "gamma_pe":
            return GradedSeries(tuple([ring_.zero] + [coefficient(n - 1)
                                                      for n in range(1, order + 1)]),
                                ring_, "exponential", -1)
        case "st" | "gamma_st":
            return GradedSeries(tuple(coefficient(n) for n in range(order + 1)), ring_,
                                "exponential")


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    order: int
    first_failure: int = None

    @property
    def verified(self) -> bool:
        return self.first_failure is None

    @property
    def message(self) -> str:
        if self.verified:
            return f"verified to order {self.order}"
        return f"fails at order {self.first_failure}"

    def to_dict(self) -> dict:
        return {"identity": self.identity, "order": self.order, "verified": self.verified,
                "first_failing_order": self.first_failure, "message": self.message}


def _as_functional(order, overrides):
    u = series("u", order, overrides)
    one = GradedSeries.constant(1, order)
    return u, ((one + u.scale(ALPHA, 1)) * (one + u.scale(T, 1))).times_x()


def _cy_relation(order, overrides):
    u = series("u", order, overrides)
    v = series("v", order, overrides)
    one = GradedSeries.constant(1, order)
    return v * (one - (u * u).scale(ALPHA * T, 2)), u


def _pe_ode(order, overrides):
    pe = series("pe", order, overrides)
    one = GradedSeries.constant(1, order, kind="exponential")
    return pe.derivative(), (one + pe.scale(ALPHA, 1)) * (one + pe.scale(T, 1))


def _pe_closed_form(order, overrides):
    pe = series("pe", order, overrides)
    exp_alpha = GradedSeries.exponential_of(ALPHA, order)
    exp_t = GradedSeries.exponential_of(T, order)
    return pe * (exp_t.scale(ALPHA, 1) - exp_alpha.scale(T, 1)), exp_alpha - exp_t


def _st_ode(order, overrides):
    # H_Pe carries x^(n+1)/(n+1)!, no extra factor x
    st = series("st", order, overrides)
    pe = series("pe", order, overrides)
    linear = GradedSeries.constant(ALPHA + T, order, kind="exponential")
    return st.derivative(), st * (linear + pe.scale(ALPHA * T, 2))


def _as_closed_form(order, overrides):
    associahedra = series("as", order, overrides)
    cleared = associahedra._like((n + 1) * c for n, c in enumerate(associahedra.coefficients))
    closed = associahedra._like(
        sum((comb(n + 1, i) * comb(n + 1, i + 1) * ALPHA ** (n - i) * T ** i
             for i in range(n + 1)), H_RING.zero)
        for n in range(order + 1))
    return cleared, closed


def _gamma_as_functional(order, overrides):
    gamma_as = series("gamma_as", order, overrides)
    one = GradedSeries.constant(1, order, GAMMA_RING)
    return gamma_as, one + gamma_as.times_x() + (gamma_as * gamma_as).times_x().times_x().scale(TAU)


def _gamma_cy_functional(order, overrides):
    gamma_as = series("gamma_as", order, overrides)
    gamma_cy = series("gamma_cy", order, overrides)
    one = GradedSeries.constant(1, order, GAMMA_RING)
    shaved = (gamma_as * gamma_cy).times_x().times_x().scale(2 * TAU)
    return gamma_cy, one + gamma_cy.times_x() + shaved


def _gamma_pe_ode(order, overrides):
    gamma_pe = series("gamma_pe", order, overrides)
    one = GradedSeries.constant(1, order, GAMMA_RING, "exponential")
    return gamma_pe.derivative(), one + gamma_pe + (gamma_pe * gamma_pe).scale(TAU)


def _gamma_st_ode(order, overrides):
    gamma_st = series("gamma_st", order, overrides)
    gamma_pe = series("gamma_pe", order, overrides)
    one = GradedSeries.constant(1, order, GAMMA_RING, "exponential")
    return gamma_st.derivative(), gamma_st * (one + gamma_pe.scale(TAU))


IDENTITIES = {
    "as_functional": _as_functional,
    "cy_relation": _cy_relation,
    "pe_ode": _pe_ode,
    "st_ode": _st_ode,
    "as_closed_form": _as_closed_form,
    "pe_closed_form": _pe_closed_form,
    "gamma_as_functional": _gamma_as_functional,
    "gamma_cy_functional": _gamma_cy_functional,
    "gamma_pe_ode": _gamma_pe_ode,
    "gamma_st_ode": _gamma_st_ode,
}


def check_identity(identity: str, order: int, overrides: dict = None) -> IdentityReport:
    """
    Compare both sides of a cleared identity coefficientwise mod x^(order+1); ODE sides
    are compared up to the order their derivative is known.
    """
    if identity not in IDENTITIES:
        raise UnknownIdentity(identity, tuple(IDENTITIES))
    lhs, rhs = IDENTITIES[identity](order, overrides or {})
    return IdentityReport(identity, order, lhs.first_mismatch(rhs))
