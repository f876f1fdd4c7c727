"""
Peeling Service
Deletes low-degree vertices until the working graph satisfies
delta(G') > s+t+1+T(G') while keeping ||V'|| >= (s+t+1)|V'|.

Deletion rule: recompute T on the current graph; among vertices with
d(v) <= s+t+1+T delete the one of minimum degree, smallest id on ties.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Optional, Set, Tuple

from .errors import HypothesisNotMet, InternalAssertion, ensure
from .graph import Graph, VertexSet
from .relaxation import Params

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TraceEntry:
    vertex: int
    degree: int
    surplus: Fraction  # T of the graph the vertex was deleted from


@dataclass(frozen=True)
class PeelResult:
    surviving: VertexSet
    trace: Tuple[TraceEntry, ...]
    surplus: Fraction  # T(G')
    min_degree: int


class _PeelState:
    """Live degree bookkeeping over the shrinking vertex set."""

    def __init__(self, G: Graph, c: Fraction):
        self.G = G
        self.c = c
        self.alive: Set[int] = set(G.vertices)
        self.degree: Dict[int, int] = {v: G.degree(v) for v in G.vertices}
        self.edges = G.edge_count

    @property
    def excess(self) -> Fraction:
        return self.edges - self.c * len(self.alive)

    @property
    def surplus(self) -> Fraction:
        return max(Fraction(0), self.excess)

    def candidate(self) -> Optional[int]:
        threshold = self.c + self.surplus
        best = None
        for v in self.alive:
            d = self.degree[v]
            if d <= threshold and (best is None or (d, v) < (self.degree[best], best)):
                best = v
        return best

    def delete(self, v: int) -> None:
        self.alive.discard(v)
        self.edges -= self.degree[v]
        for u in self.G.adjacency[v]:
            if u in self.alive:
                self.degree[u] -= 1


def peel(G: Graph, params: Params) -> PeelResult:
    """Peel G down to an induced subgraph with the minimum-degree property."""
    if G.vertex_count == 0:
        raise HypothesisNotMet("the graph has no vertices")
    state = _PeelState(G, params.c)
    if state.excess < 0:
        raise HypothesisNotMet(
            f"||V|| = {G.edge_count} < {params.c} * {G.vertex_count}"
        )

    trace = []
    while True:
        v = state.candidate()
        if v is None:
            break
        entry = TraceEntry(vertex=v, degree=state.degree[v], surplus=state.surplus)
        state.delete(v)
        trace.append(entry)
        logger.debug(f"Peeled vertex {v} (d={entry.degree}, T={entry.surplus})")
        # ||V - v|| = ||V|| - d(v) >= c|V| + T - (c + T)
        ensure(state.excess >= 0, "peel step keeps excess non-negative",
               vertex=v, excess=state.excess)
        ensure(bool(state.alive), "peel leaves a nonempty graph", vertex=v)

    surviving = frozenset(state.alive)
    T = state.surplus
    delta = min(state.degree[v] for v in surviving)
    s_plus_t = params.s + params.t
    ensure(delta > params.c + T, "minimum degree exceeds s+t+1+T",
           min_degree=delta, T=T)
    ensure(0 <= T < s_plus_t + 2, "0 <= T < s+t+2", T=T)
    ensure(len(surviving) > s_plus_t + 2 + T, "|V'| > s+t+2+T",
           size=len(surviving), T=T)

    logger.info(f"Peel: {len(trace)} deletions, {len(surviving)} survivors, "
                f"T={T}, delta={delta}")
    return PeelResult(surviving=surviving, trace=tuple(trace), surplus=T, min_degree=delta)


def replay_trace(G: Graph, params: Params, trace: Iterable[TraceEntry]) -> VertexSet:
    """
    Re-apply a peel trace to G, checking every entry against the deletion rule
    on the live graph. Returns the survivor set.
    """
    state = _PeelState(G, params.c)
    for step, entry in enumerate(trace):
        expected = state.candidate()
        if expected != entry.vertex:
            raise InternalAssertion("trace entry follows the deletion rule",
                                    {"step": step, "recorded": entry.vertex, "expected": expected})
        ensure(state.degree[entry.vertex] == entry.degree and state.surplus == entry.surplus,
               "trace entry matches live degree and T",
               step=step, degree=state.degree[entry.vertex], T=state.surplus)
        state.delete(entry.vertex)
    return frozenset(state.alive)
