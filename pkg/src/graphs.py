"""
    Simple graphs on labeled nodes, graphical building sets, graph quotients and the
    enumerators of the graph classes used by the verification suites.
"""
import itertools
from dataclasses import dataclass, field

import networkx as nx
import numpy as np

from building_sets import BuildingSet, NodeSet, MAX_GROUND_SIZE, from_masks, label_bit, \
    submasks
from common.errors import ElementOutsideGround, EmptyGround, GroundTooLarge, MTooLarge, \
    MTooSmall, SNotConnected, TooLargeForHamiltonicity

MAX_HAMILTONIAN_NODES = 12
MAX_ENUMERATION_NODES = 7
MAX_TREE_NODES = 10


@dataclass(frozen=True)
class SimpleGraph:
    """
    Loopless graph without multiple edges.
    nodes: sorted tuple of 1-indexed labels
    edges: frozenset of (i, j) pairs with i < j
    """
    nodes: tuple
    edges: frozenset
    _adjacency: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        adjacency = {node: 0 for node in self.nodes}
        for i, j in self.edges:
            adjacency[i] |= label_bit(j)
            adjacency[j] |= label_bit(i)
        object.__setattr__(self, "_adjacency", adjacency)

    @classmethod
    def on_range(cls, node_count: int, edges) -> "SimpleGraph":
        """Graph on [node_count]."""
        return make_graph(range(1, node_count + 1), edges)

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def node_set(self) -> NodeSet:
        return NodeSet.of(self.nodes)

    def neighbours(self, node: int) -> NodeSet:
        return NodeSet(self._adjacency[node])

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self._adjacency.get(i, 0) & label_bit(j))

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def to_dict(self) -> dict:
        """Graph JSON form; node labels must be exactly [n]."""
        return {"n": self.node_count, "edges": [list(edge) for edge in self.sorted_edges()]}

    def __repr__(self):
        edges = ",".join(f"{i}-{j}" for i, j in self.sorted_edges())
        return f"SimpleGraph(nodes={list(self.nodes)}, edges=[{edges}])"


def make_graph(nodes, edges) -> SimpleGraph:
    """Normalize node labels and edges into a SimpleGraph; loops are rejected."""
    nodes = tuple(sorted(set(nodes)))
    node_lookup = set(nodes)
    normalized = set()
    for i, j in edges:
        if i == j:
            raise ValueError(f"loop at node {i} is not allowed")
        if i not in node_lookup or j not in node_lookup:
            raise ValueError(f"edge ({i}, {j}) uses a node outside {list(nodes)}")
        normalized.add((min(i, j), max(i, j)))
    return SimpleGraph(nodes, frozenset(normalized))


def to_networkx(graph: SimpleGraph) -> nx.Graph:
    """networkx copy of the graph, same labels."""
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(graph.nodes)
    nx_graph.add_edges_from(graph.sorted_edges())
    return nx_graph


def _reach(graph: SimpleGraph, mask: int) -> int:
    """Nodes of mask reachable from its lowest node inside the induced subgraph."""
    start = mask & -mask
    reached = start
    frontier = start
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = graph._adjacency[low.bit_length()] & mask & ~reached
        reached |= new
        frontier |= new
    return reached


def induces_connected(graph: SimpleGraph, node_set: NodeSet) -> bool:
    """True iff the induced subgraph on node_set is connected (and nonempty)."""
    if not node_set:
        return False
    return _reach(graph, node_set.mask) == node_set.mask


def graphical_building_set(graph: SimpleGraph) -> BuildingSet:
    """
    B(Gamma): every nonempty node set inducing a connected subgraph.
    All 2^m subsets are filtered with a reachability check.
    """
    if graph.node_count > MAX_GROUND_SIZE:
        raise GroundTooLarge(graph.node_count, MAX_GROUND_SIZE)
    ground = graph.node_set.mask
    masks = [sub for sub in submasks(ground) if _reach(graph, sub) == sub]
    return from_masks(ground, masks, check=False)


def induced_subgraph(graph: SimpleGraph, node_set: NodeSet) -> SimpleGraph:
    """Gamma|_S, labels preserved."""
    if not node_set.issubset(graph.node_set):
        raise ElementOutsideGround(node_set, graph.node_set)
    return SimpleGraph(node_set.members,
                       frozenset(edge for edge in graph.edges
                                 if edge[0] in node_set and edge[1] in node_set))


def contract(graph: SimpleGraph, node_set: NodeSet) -> SimpleGraph:
    """
    Collapse a connected node set S to the single node min S.
    Edges are mapped to their images, duplicates merged and loops dropped.
    """
    if not node_set.issubset(graph.node_set):
        raise ElementOutsideGround(node_set, graph.node_set)
    if not induces_connected(graph, node_set):
        raise SNotConnected(node_set)
    target = node_set.min

    def image(node):
        return target if node in node_set else node

    nodes = [node for node in graph.nodes if node not in node_set] + [target]
    edges = {(image(i), image(j)) for i, j in graph.edges if image(i) != image(j)}
    return make_graph(nodes, edges)


def quotient(graph: SimpleGraph, node_set: NodeSet) -> SimpleGraph:
    """
    Gamma/S on the nodes outside S: two nodes are adjacent iff they are adjacent in
    Gamma or both adjacent to S. Obtained from contract() by joining the neighbours of
    the collapsed node pairwise and then deleting it, so that
    graphical_building_set(quotient(G, S)) == contraction(graphical_building_set(G), S).
    """
    if node_set == graph.node_set:
        raise EmptyGround(node_set)
    contracted = contract(graph, node_set)
    collapsed = node_set.min
    around = contracted.neighbours(collapsed).members
    edges = {edge for edge in contracted.edges if collapsed not in edge}
    edges.update(itertools.combinations(around, 2))
    return make_graph([node for node in contracted.nodes if node != collapsed], edges)


def add_node(graph: SimpleGraph, attached_to: NodeSet) -> SimpleGraph:
    """Add node max+1 adjacent exactly to attached_to."""
    new_node = max(graph.nodes) + 1
    edges = set(graph.edges) | {(node, new_node) for node in attached_to}
    return make_graph(graph.nodes + (new_node,), edges)


def add_edge(graph: SimpleGraph, edge) -> SimpleGraph:
    """Gamma + e."""
    return make_graph(graph.nodes, set(graph.edges) | {tuple(edge)})


def edge_additions(graph: SimpleGraph):
    """All supergraphs Gamma + e for each non-edge e, in lexicographic order of e."""
    for i, j in itertools.combinations(graph.nodes, 2):
        if (i, j) not in graph.edges:
            yield (i, j), add_edge(graph, (i, j))


def is_subgraph(small: SimpleGraph, large: SimpleGraph) -> bool:
    """Same nodes and every edge of small is an edge of large."""
    return small.nodes == large.nodes and small.edges <= large.edges


def path_graph(m: int) -> SimpleGraph:
    """Path 1-2-...-m."""
    if m < 1:
        raise MTooSmall("path", m, 1)
    return SimpleGraph.on_range(m, [(i, i + 1) for i in range(1, m)])


def cycle_graph(m: int) -> SimpleGraph:
    """Cycle 1-2-...-m-1."""
    if m < 3:
        raise MTooSmall("cycle", m, 3)
    return SimpleGraph.on_range(m, [(i, i + 1) for i in range(1, m)] + [(1, m)])


def complete_graph(m: int) -> SimpleGraph:
    """Complete graph on [m]."""
    if m < 1:
        raise MTooSmall("complete", m, 1)
    return SimpleGraph.on_range(m, itertools.combinations(range(1, m + 1), 2))


def star_graph(m: int) -> SimpleGraph:
    """K_{1,m-1} with center 1."""
    if m < 1:
        raise MTooSmall("star", m, 1)
    return SimpleGraph.on_range(m, [(1, i) for i in range(2, m + 1)])


def is_connected(graph: SimpleGraph) -> bool:
    return induces_connected(graph, graph.node_set)


def is_tree(graph: SimpleGraph) -> bool:
    return is_connected(graph) and len(graph.edges) == graph.node_count - 1


def is_clique(graph: SimpleGraph, node_set: NodeSet) -> bool:
    """True iff node_set induces a complete subgraph."""
    return all(graph.has_edge(i, j) for i, j in itertools.combinations(node_set.members, 2))


def is_hamiltonian(graph: SimpleGraph) -> bool:
    """
    Hamiltonian cycle test by dynamic programming over (subset, endpoint).
    reach[mask, v]: a path starting at node index 0, visiting exactly mask, ends at v.
    Graphs with fewer than 3 nodes have no cycle.
    """
    m = graph.node_count
    if m > MAX_HAMILTONIAN_NODES:
        raise TooLargeForHamiltonicity(m, MAX_HAMILTONIAN_NODES)
    if m < 3:
        return False
    index = {node: idx for idx, node in enumerate(graph.nodes)}
    adjacent = np.zeros((m, m), dtype=bool)
    for i, j in graph.edges:
        adjacent[index[i], index[j]] = adjacent[index[j], index[i]] = True

    full = (1 << m) - 1
    reach = np.zeros((1 << m, m), dtype=bool)
    reach[1, 0] = True
    # odd masks only, every path starts at index 0
    for mask in range(1, full + 1, 2):
        ends = np.flatnonzero(reach[mask])
        for end in ends:
            for nxt in np.flatnonzero(adjacent[end]):
                bit = 1 << int(nxt)
                if not mask & bit:
                    reach[mask | bit, nxt] = True
    return bool(np.any(reach[full] & adjacent[0]))


def _edge_slots(m: int) -> list:
    return list(itertools.combinations(range(1, m + 1), 2))


def enumerate_connected_graphs(m: int):
    """
    All labeled connected graphs on [m], each once.
    Order: edge subsets by increasing bitmask over the lexicographic list of pairs.
    """
    if m > MAX_ENUMERATION_NODES:
        raise MTooLarge("connected graph", m, MAX_ENUMERATION_NODES)
    if m < 1:
        raise MTooSmall("connected", m, 1)
    slots = _edge_slots(m)
    full = (1 << m) - 1
    for selection in range(1 << len(slots)):
        adjacency = [0] * (m + 1)
        edges = []
        for idx, (i, j) in enumerate(slots):
            if selection >> idx & 1:
                adjacency[i] |= label_bit(j)
                adjacency[j] |= label_bit(i)
                edges.append((i, j))
        # flood fill from node 1
        reached = frontier = 1
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = adjacency[low.bit_length()] & ~reached
            reached |= new
            frontier |= new
        if reached == full:
            yield SimpleGraph(tuple(range(1, m + 1)), frozenset(edges))


def enumerate_trees(m: int):
    """All m^(m-2) labeled trees on [m] by Pruefer decoding, sequences in lexicographic order."""
    if m > MAX_TREE_NODES:
        raise MTooLarge("tree", m, MAX_TREE_NODES)
    if m < 1:
        raise MTooSmall("tree", m, 1)
    if m == 1:
        yield SimpleGraph.on_range(1, [])
        return
    if m == 2:
        yield SimpleGraph.on_range(2, [(1, 2)])
        return
    for sequence in itertools.product(range(m), repeat=m - 2):
        tree = nx.from_prufer_sequence(list(sequence))
        yield SimpleGraph.on_range(m, [(i + 1, j + 1) for i, j in tree.edges()])


def enumerate_hamiltonian_graphs(m: int):
    """Labeled graphs on [m] containing a Hamiltonian cycle."""
    if m > MAX_ENUMERATION_NODES:
        raise MTooLarge("hamiltonian graph", m, MAX_ENUMERATION_NODES)
    for graph in enumerate_connected_graphs(m):
        if is_hamiltonian(graph):
            yield graph
