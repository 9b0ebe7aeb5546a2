"""
    Node sets and building sets.

    A node set is stored as an integer bitmask, label i <-> bit i-1, so that
    membership, union, intersection and difference are single integer operations.
    Building sets keep an explicit ground set; restriction and contraction preserve
    the original labels, canonicalize() renumbers to [k] when needed.
"""
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from common.errors import EmptyElement, ElementOutsideGround, EmptyGround, GroundTooLarge, \
    MissingSingleton, NotConnected, PartCountMismatch, SNotInB, UnionViolation

MAX_GROUND_SIZE = 20


def label_bit(label: int) -> int:
    """Bitmask of a single 1-indexed label."""
    return 1 << (label - 1)


def mask_labels(mask: int) -> tuple:
    """Sorted labels of a bitmask."""
    labels = []
    label = 1
    while mask:
        if mask & 1:
            labels.append(label)
        mask >>= 1
        label += 1
    return tuple(labels)


def submasks(mask: int):
    """All nonempty submasks of mask, in increasing integer order."""
    sub = 0
    while True:
        sub = (sub - mask) & mask
        if sub == 0:
            return
        yield sub


@dataclass(frozen=True, order=False)
class NodeSet:
    """Subset of a ground set of 1-indexed node labels."""
    mask: int

    @classmethod
    def of(cls, labels: Iterable[int]) -> "NodeSet":
        mask = 0
        for label in labels:
            if label < 1:
                raise ValueError(f"node labels are 1-indexed, got {label}")
            mask |= label_bit(label)
        return cls(mask)

    @classmethod
    def interval(cls, first: int, last: int) -> "NodeSet":
        """The node set {first, ..., last}."""
        return cls.of(range(first, last + 1))

    @property
    def members(self) -> tuple:
        return mask_labels(self.mask)

    @property
    def min(self) -> int:
        return (self.mask & -self.mask).bit_length()

    @property
    def max(self) -> int:
        return self.mask.bit_length()

    def sort_key(self):
        return (len(self), self.members)

    def issubset(self, other: "NodeSet") -> bool:
        return self.mask & ~other.mask == 0

    def isdisjoint(self, other: "NodeSet") -> bool:
        return self.mask & other.mask == 0

    def __len__(self):
        return self.mask.bit_count()

    def __bool__(self):
        return self.mask != 0

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, label):
        return label >= 1 and bool(self.mask & label_bit(label))

    def __or__(self, other):
        return NodeSet(self.mask | other.mask)

    def __and__(self, other):
        return NodeSet(self.mask & other.mask)

    def __sub__(self, other):
        return NodeSet(self.mask & ~other.mask)

    def __repr__(self):
        return "{" + ",".join(str(label) for label in self.members) + "}"


@dataclass(frozen=True)
class BuildingSet:
    """
    Validated building set.

    elements are sorted by (cardinality, members) and never contain duplicates;
    ground is the explicit ground set (not necessarily [m] after restriction or
    contraction).
    """
    ground: NodeSet
    elements: tuple
    _mask_set: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_mask_set",
                           frozenset(element.mask for element in self.elements))

    @property
    def ground_size(self) -> int:
        return len(self.ground)

    @property
    def masks(self) -> frozenset:
        return self._mask_set

    @property
    def connected(self) -> bool:
        return self.ground in self

    def __contains__(self, node_set):
        if isinstance(node_set, NodeSet):
            node_set = node_set.mask
        return node_set in self._mask_set

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return f"BuildingSet(ground={self.ground!r}, elements={list(self.elements)!r})"

    def proper_elements(self) -> tuple:
        """Elements other than the ground set, i.e. the facets of P_B."""
        return tuple(element for element in self.elements if element != self.ground)


def _sorted_elements(masks) -> tuple:
    return tuple(sorted((NodeSet(mask) for mask in set(masks)), key=NodeSet.sort_key))


def from_masks(ground_mask: int, masks, check: bool = True) -> BuildingSet:
    """
    Build a BuildingSet from raw bitmasks.
    Parameters:
    ground_mask: int
        Ground set as a bitmask
    masks: iterable of int
        Element bitmasks, duplicates allowed
    check: bool
        Verify the two closure conditions; constructors that are correct by
        construction pass False
    Returns:
    BuildingSet
    """
    ground = NodeSet(ground_mask)
    if len(ground) > MAX_GROUND_SIZE:
        raise GroundTooLarge(len(ground), MAX_GROUND_SIZE)
    elements = _sorted_elements(masks)
    if check:
        _check_building_set(ground, elements)
    return BuildingSet(ground, elements)


def _check_building_set(ground: NodeSet, elements: Sequence[NodeSet]):
    """Raise the first violated building-set condition, in a deterministic order."""
    for element in elements:
        if not element:
            raise EmptyElement()
        if not element.issubset(ground):
            raise ElementOutsideGround(element, ground)
    present = {element.mask for element in elements}
    for label in ground.members:
        if label_bit(label) not in present:
            raise MissingSingleton(label)
    for idx, first in enumerate(elements):
        for second in elements[idx + 1:]:
            if first.mask & second.mask and (first.mask | second.mask) not in present:
                raise UnionViolation(first, second)


def validate(collection: Iterable, ground_size: int) -> BuildingSet:
    """
    Validate a collection of node sets as a building set on [ground_size].
    Elements may be NodeSets or iterables of labels.
    """
    if ground_size < 1:
        raise EmptyGround(NodeSet(0))
    if ground_size > MAX_GROUND_SIZE:
        raise GroundTooLarge(ground_size, MAX_GROUND_SIZE)
    masks = []
    for element in collection:
        node_set = element if isinstance(element, NodeSet) else NodeSet.of(element)
        masks.append(node_set.mask)
    return from_masks((1 << ground_size) - 1, masks, check=True)


def _require_element(building_set: BuildingSet, node_set: NodeSet):
    if node_set not in building_set:
        raise SNotInB(node_set)


def restriction(building_set: BuildingSet, node_set: NodeSet) -> BuildingSet:
    """B|_S = {S' in B : S' subset of S}, on ground S."""
    _require_element(building_set, node_set)
    masks = [element.mask for element in building_set if element.issubset(node_set)]
    return from_masks(node_set.mask, masks, check=False)


def contraction(building_set: BuildingSet, node_set: NodeSet) -> BuildingSet:
    """B/S = {S' \\ S : S' in B} without the empty set, on ground [m] \\ S."""
    _require_element(building_set, node_set)
    if node_set == building_set.ground:
        raise EmptyGround(node_set)
    masks = {element.mask & ~node_set.mask for element in building_set}
    masks.discard(0)
    return from_masks(building_set.ground.mask & ~node_set.mask, masks, check=False)


def substitution(building_set: BuildingSet, parts: Sequence[BuildingSet]) -> BuildingSet:
    """
    Substitute connected building sets into the nodes of a connected building set.
    Parameters:
    building_set: BuildingSet
        Connected building set B; its ground labels are taken in increasing order
    parts: sequence of BuildingSet
        One connected building set per ground node of B
    Returns:
    BuildingSet
        On [k_1 + ... + k_r]: part j relabelled onto the j-th consecutive block,
        plus for each S in B the union of the blocks indexed by S
    """
    if not building_set.connected:
        raise NotConnected("outer building set of a substitution must be connected")
    labels = building_set.ground.members
    if len(parts) != len(labels):
        raise PartCountMismatch(len(labels), len(parts))
    total = sum(part.ground_size for part in parts)
    if total > MAX_GROUND_SIZE:
        raise GroundTooLarge(total, MAX_GROUND_SIZE)

    blocks = {}
    masks = []
    offset = 0
    for label, part in zip(labels, parts):
        if not part.connected:
            raise NotConnected(f"part substituted for node {label} is not connected")
        relabel = {old: offset + idx + 1 for idx, old in enumerate(part.ground.members)}
        for element in part:
            masks.append(NodeSet.of(relabel[old] for old in element).mask)
        blocks[label] = ((1 << part.ground_size) - 1) << offset
        offset += part.ground_size

    for element in building_set:
        block_union = 0
        for label in element:
            block_union |= blocks[label]
        masks.append(block_union)
    return from_masks((1 << total) - 1, masks, check=False)


@dataclass(frozen=True)
class Decomposition:
    """Disjoint representation of a node set by building-set elements."""
    target: NodeSet
    parts: tuple

    def __len__(self):
        return len(self.parts)


def decompose(building_set: BuildingSet, node_set: NodeSet) -> Decomposition:
    """
    Decomposition of S by elements of B0.
    The maximal elements of B0 inside S are pairwise disjoint (two intersecting ones
    would have their union in B0) and cover S (singletons), so they are the unique
    minimal decomposition. Taking elements by decreasing size and keeping those
    disjoint from the ones already taken yields exactly the maximal ones.
    """
    if not node_set.issubset(building_set.ground):
        raise ElementOutsideGround(node_set, building_set.ground)
    taken = []
    covered = 0
    for element in reversed(building_set.elements):
        if element.issubset(node_set) and not element.mask & covered:
            taken.append(element)
            covered |= element.mask
            if covered == node_set.mask:
                break
    return Decomposition(node_set, tuple(sorted(taken, key=lambda part: part.min)))


def interval_building_set() -> BuildingSet:
    """J = {{1},{2},{1,2}}; P_J is the interval."""
    return validate([{1}, {2}, {1, 2}], 2)


def simplex_building_set(ground_size: int) -> BuildingSet:
    """Singletons plus the full ground set; P_B is the simplex of dimension m-1."""
    return validate([{i} for i in range(1, ground_size + 1)]
                    + [range(1, ground_size + 1)], ground_size)


def singleton_building_set() -> BuildingSet:
    """Building set {{1}} on [1]; P_B is a point."""
    return validate([{1}], 1)


def canonicalize(building_set: BuildingSet) -> BuildingSet:
    """Renumber the ground set to [k], keeping the relative order of labels."""
    relabel = {old: idx + 1 for idx, old in enumerate(building_set.ground.members)}
    masks = [NodeSet.of(relabel[old] for old in element).mask for element in building_set]
    return from_masks((1 << building_set.ground_size) - 1, masks, check=False)


def canonical_key(building_set: BuildingSet) -> tuple:
    """Hashable key of the canonical form, for memoisation."""
    canonical = canonicalize(building_set)
    return (canonical.ground_size, tuple(element.mask for element in canonical))


def is_subset(first: BuildingSet, second: BuildingSet) -> bool:
    """B1 subset of B2 on the same ground set."""
    return first.ground == second.ground and first.masks <= second.masks
