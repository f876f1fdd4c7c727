"""
Brute-force oracle.

Exponential on purpose: it enumerates every candidate so its answers can be
trusted without reading any of the solver's reasoning. Vertex counts above
the configured caps raise TooLarge.
"""
import logging
from fractions import Fraction
from typing import List, Optional, Tuple

from .. import config
from .errors import TooLarge
from .graph import Graph, VertexSet

logger = logging.getLogger(__name__)


def _masks(G: Graph) -> Tuple[List[int], List[int]]:
    """
    Per-vertex adjacency bitmasks over the sorted vertex order. Bit
    (n - 1 - i) stands for the i-th vertex, so counting up in binary walks the
    characteristic sequences (x_0, ..., x_{n-1}) lexicographically.
    """
    order = list(G.sorted_vertices())
    n = len(order)
    index = {v: i for i, v in enumerate(order)}
    adj = [0] * n
    for u, v in G.edge_list:
        adj[index[u]] |= 1 << (n - 1 - index[v])
        adj[index[v]] |= 1 << (n - 1 - index[u])
    return order, adj


def _edges_inside(mask: int, adj: List[int], n: int) -> int:
    doubled = 0
    rest = mask
    while rest:
        low = rest & -rest
        i = n - low.bit_length()
        doubled += bin(adj[i] & mask).count("1")
        rest ^= low
    return doubled // 2


def _check_cap(G: Graph, cap: int, what: str) -> None:
    if G.vertex_count > cap:
        raise TooLarge(f"{what} is capped at {cap} vertices, graph has {G.vertex_count}")


def brute_force_partition(
    G: Graph, s, t, cap: Optional[int] = None
) -> Optional[Tuple[VertexSet, VertexSet]]:
    """First non-trivial (A, B) with ||A|| >= s|A| and ||B|| >= t|B|, or None."""
    cap = config.ORACLE_PARTITION_CAP if cap is None else cap
    _check_cap(G, cap, "partition search")
    s, t = Fraction(s), Fraction(t)
    order, adj = _masks(G)
    n = len(order)
    full = (1 << n) - 1

    for mask in range(1, full):
        a_size = bin(mask).count("1")
        if _edges_inside(mask, adj, n) < s * a_size:
            continue
        if _edges_inside(full ^ mask, adj, n) < t * (n - a_size):
            continue
        A = frozenset(order[i] for i in range(n) if mask >> (n - 1 - i) & 1)
        logger.debug(f"Oracle hit at mask {mask:0{n}b}")
        return A, G.vertices - A

    logger.debug(f"Oracle: none of {full - 1} candidates qualifies")
    return None


def check_fact5(G: Graph, c, cap: Optional[int] = None) -> bool:
    """True iff every proper nonempty X has ||X|| - c|X| < 0."""
    cap = config.ORACLE_FACT5_CAP if cap is None else cap
    _check_cap(G, cap, "subset sparsity check")
    c = Fraction(c)
    order, adj = _masks(G)
    n = len(order)
    full = (1 << n) - 1

    for mask in range(1, full):
        if _edges_inside(mask, adj, n) - c * bin(mask).count("1") >= 0:
            return False
    return True
