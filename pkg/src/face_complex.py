"""
    Faces of the nestohedron P_B through the facet-intersection criterion.

    Facets of P_B are the elements S of B other than the ground set. A collection of
    facets is a face (a nested collection) iff
        1) every pair is nested or disjoint, and
        2) no subfamily of at least two pairwise disjoint members has its union in B.
    The empty collection is the polytope itself.
"""
import functools

import numpy as np

from building_sets import BuildingSet, NodeSet, canonical_key, contraction, from_masks, \
    restriction
from common.errors import ElementNotFacet, GroundTooLarge, NotConnected, NonIntegerResult
from face_polynomials import FVector, convolve_lists

MAX_FACE_ENUMERATION_GROUND = 10
FACE_METHODS = ("enumeration", "facet_recursion")


def _require_enumerable(building_set: BuildingSet):
    if not building_set.connected:
        raise NotConnected("face enumeration needs a connected building set")
    if building_set.ground_size > MAX_FACE_ENUMERATION_GROUND:
        raise GroundTooLarge(building_set.ground_size, MAX_FACE_ENUMERATION_GROUND)


class _Facets:
    """
    Facet masks in enumeration order (cardinality descending) with a pairwise
    compatibility bitset per facet: nested, or disjoint with union outside B.
    """
    def __init__(self, building_set: BuildingSet):
        self.building_set = building_set
        self.element_masks = building_set.masks
        facets = sorted(building_set.proper_elements(), key=lambda s: (-len(s), s.members))
        self.masks = [facet.mask for facet in facets]
        self.count = len(self.masks)
        self.compat = [0] * self.count
        if not self.count:
            return

        # pairwise relations of all facets at once
        masks = np.array(self.masks, dtype=np.int64)
        inter = masks[:, None] & masks[None, :]
        union = masks[:, None] | masks[None, :]
        disjoint = inter == 0
        nested = (inter == masks[:, None]) | (inter == masks[None, :])
        union_in_b = np.isin(union, np.array(sorted(self.element_masks), dtype=np.int64))
        compatible = (nested | disjoint) & ~(disjoint & union_in_b)
        np.fill_diagonal(compatible, False)
        for idx in range(self.count):
            bits = 0
            for other in np.flatnonzero(compatible[idx]):
                bits |= 1 << int(other)
            self.compat[idx] = bits

    def disjoint_unions_avoid_b(self, mask: int, chosen) -> bool:
        """
        Condition 2 for every subfamily that contains mask and at least two other
        pairwise disjoint chosen members (pairs are covered by compat).
        """
        others = [other for other in chosen if not other & mask]
        if len(others) < 2:
            return True

        def walk(start, union, size):
            for idx in range(start, len(others)):
                other = others[idx]
                if other & union:
                    continue
                grown = union | other
                if size >= 2 and grown in self.element_masks:
                    return False
                if not walk(idx + 1, grown, size + 1):
                    return False
            return True

        return walk(0, mask, 1)


def _iter_bits(bits: int):
    while bits:
        low = bits & -bits
        bits ^= low
        yield low.bit_length() - 1


def _count_collections(facets: _Facets, counts: list, chosen: list, allowed: int):
    counts[len(chosen)] += 1
    # later facets only, each collection is reached once
    for idx in _iter_bits(allowed):
        mask = facets.masks[idx]
        if not facets.disjoint_unions_avoid_b(mask, chosen):
            continue
        chosen.append(mask)
        _count_collections(facets, counts, chosen,
                           allowed & facets.compat[idx] & ~((2 << idx) - 1))
        chosen.pop()


def _walk_collections(facets: _Facets, chosen_idx: list, chosen: list, allowed: int):
    yield chosen_idx
    for idx in _iter_bits(allowed):
        mask = facets.masks[idx]
        if not facets.disjoint_unions_avoid_b(mask, chosen):
            continue
        chosen_idx.append(idx)
        chosen.append(mask)
        yield from _walk_collections(facets, chosen_idx, chosen,
                                     allowed & facets.compat[idx] & ~((2 << idx) - 1))
        chosen.pop()
        chosen_idx.pop()


def is_face(building_set: BuildingSet, candidates) -> bool:
    """
    Check both facet-intersection conditions for a collection of facets.
    Parameters:
    building_set: BuildingSet
        Connected building set
    candidates: iterable of NodeSet
        Elements of B other than the ground set
    Returns:
    bool
    """
    if not building_set.connected:
        raise NotConnected("faces are defined for connected building sets")
    masks = []
    for candidate in candidates:
        if candidate == building_set.ground or candidate not in building_set:
            raise ElementNotFacet(candidate)
        if candidate.mask not in masks:
            masks.append(candidate.mask)

    for idx, first in enumerate(masks):
        for second in masks[idx + 1:]:
            inter = first & second
            if inter and inter != first and inter != second:
                return False

    def walk(start, union, size):
        for idx in range(start, len(masks)):
            if masks[idx] & union:
                continue
            grown = union | masks[idx]
            if size >= 1 and grown in building_set:
                return False
            if not walk(idx + 1, grown, size + 1):
                return False
        return True

    return walk(0, 0, 0)


def facet_count(building_set: BuildingSet) -> int:
    return len(building_set) - 1


def f_vector(building_set: BuildingSet) -> FVector:
    """
    Count nested collections by cardinality k; they are the faces of dimension n-k.
    Backtracking extends a collection only by later facets compatible with every chosen
    one, and rechecks condition 2 only for subfamilies containing the new facet.
    """
    _require_enumerable(building_set)
    facets = _Facets(building_set)
    n = building_set.ground_size - 1
    counts = [0] * (facets.count + 1)
    _count_collections(facets, counts, [], (1 << facets.count) - 1)
    counts = (counts + [0] * (n + 1))[:n + 1]
    return FVector.of(reversed(counts))


def nested_collections(building_set: BuildingSet):
    """Stream every nested collection as a tuple of NodeSets."""
    _require_enumerable(building_set)
    facets = _Facets(building_set)
    for chosen_idx in _walk_collections(facets, [], [], (1 << facets.count) - 1):
        yield tuple(NodeSet(facets.masks[idx]) for idx in chosen_idx)


def vertex_collections(building_set: BuildingSet):
    """
    Stream the maximal nested collections (the vertices of P_B). Maximality is
    checked against every facet, not only the later ones.
    """
    _require_enumerable(building_set)
    facets = _Facets(building_set)
    everything = (1 << facets.count) - 1
    for chosen_idx in _walk_collections(facets, [], [], everything):
        chosen = [facets.masks[idx] for idx in chosen_idx]
        open_bits = everything
        # a facet compatible with all chosen ones would extend the collection
        for idx in chosen_idx:
            open_bits &= facets.compat[idx]
        if any(facets.disjoint_unions_avoid_b(facets.masks[idx], chosen)
               for idx in _iter_bits(open_bits)):
            continue
        yield tuple(sorted((NodeSet(mask) for mask in chosen), key=NodeSet.sort_key))


def flag_violations(building_set: BuildingSet):
    """
    Stream minimal non-faces of size >= 3. Pairs already satisfy condition 1, so such
    a non-face is a family of pairwise disjoint facets whose pairs are faces, whose
    union lies in B, and whose proper subfamilies are faces.
    """
    _require_enumerable(building_set)
    facets = _Facets(building_set)
    elements = facets.element_masks

    def proper_subfamilies_are_faces(family):
        for size in range(2, len(family)):
            for subset in _subfamilies(family, size):
                union = 0
                for mask in subset:
                    union |= mask
                if union in elements:
                    return False
        return True

    def extend(family_idx, union, allowed):
        for idx in _iter_bits(allowed):
            mask = facets.masks[idx]
            if mask & union:
                continue
            family = [facets.masks[i] for i in family_idx] + [mask]
            grown = union | mask
            if len(family) >= 3 and grown in elements:
                if proper_subfamilies_are_faces(family):
                    yield tuple(sorted((NodeSet(m) for m in family), key=NodeSet.sort_key))
                continue
            if len(family) >= 3 and not facets.disjoint_unions_avoid_b(mask, family[:-1]):
                continue
            yield from extend(family_idx + [idx], grown,
                              allowed & facets.compat[idx] & ~((2 << idx) - 1))

    yield from extend([], 0, (1 << facets.count) - 1)


def _subfamilies(family, size):
    if size == 0:
        yield []
        return
    for idx in range(len(family) - size + 1):
        for rest in _subfamilies(family[idx + 1:], size - 1):
            yield [family[idx]] + rest


def is_flag(building_set: BuildingSet) -> bool:
    """Flag iff there is no minimal non-face of size >= 3."""
    return next(flag_violations(building_set), None) is None


@functools.lru_cache(maxsize=None)
def _f_polynomial(key: tuple) -> tuple:
    ground_size, masks = key
    n = ground_size - 1
    if n == 0:
        return (1,)
    building_set = from_masks((1 << ground_size) - 1, masks, check=False)
    derivative = [0] * n
    for facet in building_set.proper_elements():
        product = convolve_lists(
            _f_polynomial(canonical_key(restriction(building_set, facet))),
            _f_polynomial(canonical_key(contraction(building_set, facet))))
        for idx, value in enumerate(product):
            derivative[idx] += value
    # integrate term by term, the constant term counts the polytope itself
    polynomial = [1]
    for k in range(1, n + 1):
        quotient, remainder = divmod(derivative[k - 1], k)
        if remainder:
            raise NonIntegerResult(f"face count {derivative[k - 1]}/{k} is not an integer")
        polynomial.append(quotient)
    return tuple(polynomial)


def f_vector_by_facets(building_set: BuildingSet) -> FVector:
    """
    f-vector from dF/dt = sum over facets S of F(P_{B|S}) F(P_{B/S}): every face of
    codimension k lies in exactly k facets of a simple polytope, and each facet is the
    product of the nestohedra of the restriction and the contraction. Memoised on the
    canonical form, so isomorphic-by-relabelling pieces are computed once.
    """
    _require_enumerable(building_set)
    return FVector.from_polynomial(_f_polynomial(canonical_key(building_set)))


def face_vector(building_set: BuildingSet, method: str = "enumeration") -> FVector:
    """f-vector by the selected face method."""
    match method:
        case "enumeration":
            return f_vector(building_set)
        case "facet_recursion":
            return f_vector_by_facets(building_set)
        case _:
            raise ValueError(f"Unsupported face method: {method}")


@functools.lru_cache(maxsize=8192)
def _cached_face_vector(key: tuple, method: str) -> FVector:
    ground_size, masks = key
    return face_vector(from_masks((1 << ground_size) - 1, masks, check=False), method)


def cached_face_vector(building_set: BuildingSet, method: str = "enumeration") -> FVector:
    """face_vector() memoised per process on the canonical form of the building set."""
    return _cached_face_vector(canonical_key(building_set), method)
