"""
=============================================================================
CORE GRAPH SERVICE
=============================================================================

Immutable simple undirected graph plus the exact counting functionals every
other stage consumes:

    induced_edge_count(G, X)      ||X||, edges with both ends in X
    cross_edge_count(G, A, B)     |E(A,B)|
    surplus(G, X, c)              (||X|| - c|X|, max(0, ||X|| - c|X|))

Storage is a frozen networkx graph. Restricting to a vertex subset keeps the
original vertex ids (no re-indexing), so anything computed on a working
subgraph lifts back to the input graph unchanged.

All real-valued quantities are fractions.Fraction; nothing is ever rounded.
=============================================================================
"""
import logging
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Sequence, Tuple

import networkx as nx

from .errors import DuplicateEdge, OverlappingSets, SelfLoop, VertexOutOfRange

logger = logging.getLogger(__name__)

VertexSet = FrozenSet[int]
Edge = Tuple[int, int]


class Graph:
    """
    Immutable simple graph. Vertex ids are the ints 0..n-1 for graphs built
    with build_graph; restrict() returns a graph over a subset of those ids.
    """

    __slots__ = ("_nx", "_vertices", "_adj", "_edge_list")

    def __init__(self, nx_graph: nx.Graph):
        self._nx = nx.freeze(nx_graph)
        self._vertices: VertexSet = frozenset(self._nx.nodes)
        self._adj: Dict[int, VertexSet] = {
            v: frozenset(self._nx.adj[v]) for v in self._nx.nodes
        }
        self._edge_list: Tuple[Edge, ...] = tuple(sorted(
            (min(u, v), max(u, v)) for u, v in self._nx.edges
        ))

    # ==================== Basic queries ====================

    @property
    def vertex_count(self) -> int:
        return len(self._vertices)

    @property
    def vertices(self) -> VertexSet:
        return self._vertices

    @property
    def edge_count(self) -> int:
        """||V||"""
        return len(self._edge_list)

    @property
    def edges(self) -> FrozenSet[Edge]:
        return frozenset(self._edge_list)

    @property
    def edge_list(self) -> Tuple[Edge, ...]:
        """Edges as sorted (u, v) pairs with u < v."""
        return self._edge_list

    @property
    def adjacency(self) -> Mapping[int, VertexSet]:
        return self._adj

    @property
    def nx(self) -> nx.Graph:
        """Read-only networkx view (frozen: mutators raise)."""
        return self._nx

    def neighbors(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def min_degree(self) -> Optional[int]:
        if not self._vertices:
            return None
        return min(len(nbrs) for nbrs in self._adj.values())

    def sorted_vertices(self) -> Sequence[int]:
        return sorted(self._vertices)

    # ==================== Derived graphs ====================

    def restrict(self, vertex_set: Iterable[int]) -> "Graph":
        """G[X] with the original vertex ids."""
        xs = self.check_subset(vertex_set)
        return Graph(nx.Graph(self._nx.subgraph(xs)))

    def is_clique(self, vertex_set: Iterable[int]) -> bool:
        xs = sorted(self.check_subset(vertex_set))
        for i, u in enumerate(xs):
            nbrs = self._adj[u]
            for v in xs[i + 1:]:
                if v not in nbrs:
                    return False
        return True

    # ==================== Validation helpers ====================

    def _check_vertex(self, v: int) -> None:
        if v not in self._adj:
            raise VertexOutOfRange(f"vertex {v} is not in the graph")

    def check_subset(self, vertex_set: Iterable[int]) -> VertexSet:
        xs = frozenset(vertex_set)
        stray = xs - self._vertices
        if stray:
            raise VertexOutOfRange(f"vertices {sorted(stray)[:5]} are not in the graph")
        return xs

    def __repr__(self) -> str:
        return f"Graph(|V|={self.vertex_count}, ||V||={self.edge_count})"


# ==================== Construction ====================

def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """
    Build a graph on vertices 0..n-1 with exactly the listed edges.
    Repeated pairs (in either orientation) are an error, never merged.
    """
    if n < 0:
        raise VertexOutOfRange(f"vertex count must be non-negative, got {n}")

    g = nx.Graph()
    g.add_nodes_from(range(n))
    for pair in edge_list:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        if g.has_edge(u, v):
            raise DuplicateEdge(f"edge ({u}, {v}) listed more than once")
        g.add_edge(u, v)

    graph = Graph(g)
    logger.debug(f"Built {graph!r}")
    return graph


# ==================== Counting functionals ====================

def induced_edge_count(G: Graph, X: Iterable[int]) -> int:
    """||X||: edges of G with both endpoints in X."""
    xs = G.check_subset(X)
    return G.nx.subgraph(xs).number_of_edges()


def cross_edge_count(G: Graph, A: Iterable[int], B: Iterable[int]) -> int:
    """|E(A,B)| for disjoint A, B."""
    a = G.check_subset(A)
    b = G.check_subset(B)
    if a & b:
        raise OverlappingSets(f"sets share vertices {sorted(a & b)[:5]}")
    if not a or not b:
        return 0
    return int(nx.cut_size(G.nx, a, b))


def surplus(G: Graph, X: Iterable[int], c: Fraction) -> Tuple[Fraction, Fraction]:
    """(excess, T) with excess = ||X|| - c|X| and T = max(0, excess)."""
    xs = G.check_subset(X)
    excess = Fraction(induced_edge_count(G, xs)) - Fraction(c) * len(xs)
    return excess, max(Fraction(0), excess)
