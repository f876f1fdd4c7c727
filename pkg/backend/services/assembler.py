"""
=============================================================================
PARTITION ASSEMBLER
=============================================================================

Runs the whole pipeline for one (G, s, t):

    min(s,t) <= 1/2     small_split: an edge on the side with the small
                        parameter, everything else on the other
    otherwise           peel -> cliqueify -> clique_split (big clique)
                                          -> collapse + select (rounding)
                        then merge_remainder puts the peeled-off vertices
                        on whichever side can absorb them

Internally s <= t (see make_params); the finished witness is always
reported against the caller's (s, t). validate() recomputes everything from
the graph and never reads the recorded margins.
=============================================================================
"""
import logging
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from .errors import (
    CliqueTooSmall,
    HypothesisNotMet,
    InternalAssertion,
    InvalidInput,
    NonPositiveParameter,
    NotAClique,
    ensure,
)
from .graph import Graph, VertexSet, cross_edge_count, induced_edge_count, surplus
from .peeler import TraceEntry, peel
from .relaxation import HALF, BigClique, LoopStats, Params, cliqueify, make_params
from .rounding import RoundingCertificate, collapse_with_steps, select_integral

logger = logging.getLogger(__name__)

PATH_SMALL = "small-st"
PATH_CLIQUE = "clique-fallback"
PATH_ROUNDING = "rounding"

MERGED_A = "A"
MERGED_B = "B"
MERGED_NONE = "none"


# ==================== Domain Types ====================

@dataclass(frozen=True)
class RunTrace:
    """Diagnostics collected along the way. Not part of the serialized witness."""
    peel_trace: Tuple[TraceEntry, ...] = ()
    loop_stats: Optional[LoopStats] = None
    collapse_steps: int = 0


@dataclass(frozen=True)
class PartitionWitness:
    A: VertexSet
    B: VertexSet
    path: str
    s_side: Fraction  # ||A|| - s|A|
    t_side: Fraction  # ||B|| - t|B|
    peeled: VertexSet
    merged_into: str = MERGED_NONE
    certificate: Optional[RoundingCertificate] = None
    trace: RunTrace = field(default_factory=RunTrace)


@dataclass(frozen=True)
class ValidationFailure:
    check: str
    values: Dict[str, object] = field(default_factory=dict)

    def __str__(self) -> str:
        detail = ", ".join(f"{k}={v}" for k, v in self.values.items())
        return f"{self.check}: {detail}" if detail else self.check


@dataclass(frozen=True)
class ValidationReport:
    failures: Tuple[ValidationFailure, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures

    def names(self) -> List[str]:
        return [f.check for f in self.failures]


# ==================== Helpers ====================

def side_margin(G: Graph, X: Iterable[int], weight: Fraction) -> Fraction:
    xs = frozenset(X)
    return induced_edge_count(G, xs) - weight * len(xs)


def _check_hypothesis(G: Graph, c: Fraction) -> None:
    if G.vertex_count == 0:
        raise HypothesisNotMet("the graph has no vertices")
    excess, _ = surplus(G, G.vertices, c)
    if excess < 0:
        raise HypothesisNotMet(
            f"||V|| = {G.edge_count} < {c} * {G.vertex_count}"
        )


def check_partial_partition(G: Graph, params: Params, A: VertexSet, B: VertexSet) -> None:
    """
    Assert the three conditions a disjoint pair must meet before merging:
    both margins non-negative and their sum at least T(A u B) - 1.
    """
    ensure(bool(A) and bool(B), "both parts nonempty", a=len(A), b=len(B))
    ensure(not (A & B), "parts are disjoint")
    a_side = side_margin(G, A, params.s)
    b_side = side_margin(G, B, params.t)
    _, T = surplus(G, A | B, params.c)
    ensure(a_side >= 0, "||A|| - s|A| >= 0", a_side=a_side)
    ensure(b_side >= 0, "||B|| - t|B| >= 0", b_side=b_side)
    ensure(a_side + b_side >= T - 1, "margin sum >= T(A u B) - 1",
           total=a_side + b_side, T=T)


# ==================== Small Parameters ====================

def small_split(G: Graph, s, t) -> Tuple[VertexSet, VertexSet]:
    """
    Direct split when min(s, t) <= 1/2: one edge xy on the side carrying the
    smaller parameter (B on ties), the rest on the other side.
    x is the minimum-degree non-isolated vertex, y its smallest neighbour.
    """
    s, t = Fraction(s), Fraction(t)
    if s <= 0 or t <= 0:
        raise NonPositiveParameter(f"s and t must be positive, got s={s}, t={t}")
    if min(s, t) > HALF:
        raise InvalidInput(f"small split needs min(s, t) <= 1/2, got s={s}, t={t}")
    _check_hypothesis(G, s + t + 1)

    non_isolated = [v for v in G.sorted_vertices() if G.degree(v) > 0]
    x = min(non_isolated, key=lambda v: (G.degree(v), v))
    y = min(G.neighbors(x))
    pair = frozenset((x, y))
    rest = G.vertices - pair

    if s < t:
        A, B = pair, rest
    else:
        A, B = rest, pair

    report = _check_parts(G, s, t, A, B)
    if not report.ok:
        raise InternalAssertion("small split satisfies both sides",
                                {"failures": "; ".join(str(f) for f in report.failures)})
    logger.info(f"Small split: edge ({x},{y}) on side {'A' if s < t else 'B'}")
    return A, B


# ==================== Clique Fallback ====================

def clique_split(G: Graph, params: Params, C: Iterable[int]) -> Tuple[VertexSet, VertexSet]:
    """Two disjoint cliques of sizes ceil(2s+1), ceil(2t+1) out of a big clique."""
    members = sorted(G.check_subset(C))
    if not G.is_clique(members):
        raise NotAClique(f"set of size {len(members)} is not a clique")
    if len(members) < params.clique_size:
        raise CliqueTooSmall(
            f"clique of size {len(members)} is below {params.clique_size}"
        )

    a_size = math.ceil(2 * params.s + 1)
    b_size = math.ceil(2 * params.t + 1)
    ensure(a_size + b_size <= len(members), "ceil(2s+1) + ceil(2t+1) <= |C|",
           a=a_size, b=b_size, size=len(members))
    A = frozenset(members[:a_size])
    B = frozenset(members[a_size:a_size + b_size])
    check_partial_partition(G, params, A, B)
    logger.info(f"Clique split: |A|={len(A)}, |B|={len(B)} from |C|={len(members)}")
    return A, B


# ==================== Merge ====================

def merge_remainder(
    G: Graph,
    params: Params,
    A: Iterable[int],
    B: Iterable[int],
    *,
    path: str = PATH_ROUNDING,
    peeled: Optional[Iterable[int]] = None,
) -> PartitionWitness:
    """
    Extend a disjoint pair to a partition of V(G) by adding the remainder to
    A when the A-side inequality holds, otherwise to B. Margins are in the
    orientation of `params`.
    """
    A, B = G.check_subset(A), G.check_subset(B)
    check_partial_partition(G, params, A, B)
    rest = G.vertices - A - B
    merged = MERGED_NONE

    if rest:
        a_gain = cross_edge_count(G, A, rest) + induced_edge_count(G, rest)
        a_need = params.s * (len(A) + len(rest)) - induced_edge_count(G, A)
        if a_gain >= a_need:
            A, merged = A | rest, MERGED_A
        else:
            b_gain = cross_edge_count(G, B, rest) + induced_edge_count(G, rest)
            b_need = params.t * (len(B) + len(rest)) - induced_edge_count(G, B)
            ensure(b_gain >= b_need, "one side absorbs the remainder",
                   a_gain=a_gain, a_need=a_need, b_gain=b_gain, b_need=b_need)
            B, merged = B | rest, MERGED_B
        logger.info(f"Merged {len(rest)} remaining vertices into {merged}")

    witness = PartitionWitness(
        A=A, B=B, path=path,
        s_side=side_margin(G, A, params.s), t_side=side_margin(G, B, params.t),
        peeled=frozenset(peeled) if peeled is not None else G.vertices,
        merged_into=merged,
    )
    report = _check_parts(G, params.s, params.t, witness.A, witness.B)
    ensure(report.ok, "merged partition validates",
           failures="; ".join(str(f) for f in report.failures))
    return witness


def _to_caller(G: Graph, params: Params, witness: PartitionWitness) -> PartitionWitness:
    """Exchange the sides back when make_params swapped s and t."""
    if not params.swapped:
        return witness
    merged = {MERGED_A: MERGED_B, MERGED_B: MERGED_A}.get(witness.merged_into, MERGED_NONE)
    A, B = witness.B, witness.A
    return replace(
        witness, A=A, B=B, merged_into=merged,
        s_side=side_margin(G, A, params.caller_s), t_side=side_margin(G, B, params.caller_t),
    )


# ==================== Pipeline ====================

def solve(G: Graph, s, t) -> PartitionWitness:
    """Partition V(G) into (A, B) with ||A|| >= s|A| and ||B|| >= t|B|."""
    params = make_params(s, t)
    s, t = params.caller_s, params.caller_t
    _check_hypothesis(G, params.c)
    logger.info(f"Solving {G!r} with s={s}, t={t}")

    if min(s, t) <= HALF:
        A, B = small_split(G, s, t)
        witness = PartitionWitness(
            A=A, B=B, path=PATH_SMALL,
            s_side=side_margin(G, A, s), t_side=side_margin(G, B, t),
            peeled=G.vertices,
        )
    else:
        witness = _solve_large(G, params)

    report = validate(G, s, t, witness)
    if not report.ok:
        raise InternalAssertion("final witness validates",
                                {"failures": "; ".join(str(f) for f in report.failures)})
    logger.info(f"✅ Solved via {witness.path}: |A|={len(witness.A)}, |B|={len(witness.B)}, "
                f"margins=({witness.s_side}, {witness.t_side})")
    return witness


def _solve_large(G: Graph, params: Params) -> PartitionWitness:
    peel_result = peel(G, params)
    H = G.restrict(peel_result.surviving)
    outcome = cliqueify(H, params)

    if isinstance(outcome, BigClique):
        A, B = clique_split(G, params, outcome.clique.members)
        path, cert, steps = PATH_CLIQUE, None, 0
    else:
        z, steps = collapse_with_steps(H, params, outcome.y, outcome.support)
        xhat, cert = select_integral(H, params, outcome.y, outcome.support, z, outcome.surplus)
        A = xhat.ones()
        B = H.vertices - A
        path = PATH_ROUNDING

    witness = merge_remainder(G, params, A, B, path=path, peeled=peel_result.surviving)
    witness = replace(
        witness,
        certificate=cert,
        trace=RunTrace(peel_trace=peel_result.trace, loop_stats=outcome.stats,
                       collapse_steps=steps),
    )
    return _to_caller(G, params, witness)


# ==================== Validation ====================

def _check_parts(G: Graph, s: Fraction, t: Fraction, A: Iterable[int], B: Iterable[int]) -> ValidationReport:
    A, B = frozenset(A), frozenset(B)
    failures: List[ValidationFailure] = []

    stray = (A | B) - G.vertices
    if stray:
        failures.append(ValidationFailure("vertex range", {"stray": sorted(stray)[:5]}))
        return ValidationReport(tuple(failures))

    if A & B:
        failures.append(ValidationFailure("overlapping parts", {"shared": sorted(A & B)[:5]}))
    missing = G.vertices - A - B
    if missing:
        failures.append(ValidationFailure("not a partition", {"missing": sorted(missing)[:5]}))
    if not A or not B:
        failures.append(ValidationFailure("trivial partition", {"a": len(A), "b": len(B)}))

    a_edges = induced_edge_count(G, A)
    if a_edges < s * len(A):
        failures.append(ValidationFailure("A-margin", {"edges": a_edges, "needed": s * len(A)}))
    b_edges = induced_edge_count(G, B)
    if b_edges < t * len(B):
        failures.append(ValidationFailure("B-margin", {"edges": b_edges, "needed": t * len(B)}))
    return ValidationReport(tuple(failures))


def validate(G: Graph, s, t, w: PartitionWitness) -> ValidationReport:
    """Recompute partition-ness, non-triviality and both margins from G."""
    return _check_parts(G, Fraction(s), Fraction(t), w.A, w.B)
