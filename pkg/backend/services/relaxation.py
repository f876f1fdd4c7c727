"""
=============================================================================
FRACTIONAL RELAXATION & CLIQUE-IFICATION
=============================================================================

ARCHITECTURAL ROLE:
    Works on the peeled graph. Relaxes the 0/1 side-membership vector to a
    point of the unit cube and drives its fractional support onto a clique.

OBJECTIVES (exact, Fraction-valued):
    f0(x) = sum_E x_u x_v             - s * sum_V x_v
    g0(x) = sum_E (1-x_u)(1-x_v)      - t * sum_V (1-x_v)
    f1(x) = sum_E x_u x_v             - c*p * sum_V x_v
    g1(x) = sum_E (1-x_u)(1-x_v)      - c*p_bar * sum_V (1-x_v)

    with c = s+t+1, p = (s+1)/(s+t+2), p_bar = (t+1)/(s+t+2).
    f1 - g1 = sum_v x_v (d(v) - c) + const, so on a graph with
    delta > c it is increasing in every coordinate.

EXCHANGE LOOP (from y = p*1, priority order):
    1. non-adjacent u, v in fr(y): f1, g1 are affine in (y_u, y_v); move
       along a direction both do not decrease until a coordinate hits 0/1
    2. v in fr(y) with both slopes >= 0 (set y_v = 1) or both <= 0 (y_v = 0)
    3. f1 > p^2 T: lower the smallest fractional coordinate until
       f1 = p^2 T or y_v = 0
    4. f1(y_C) > p^2 T: zero every coordinate outside fr(y)
    5. stop

    Potential (|fr(y)|, sum y) strictly decreases lexicographically. The
    terminal point satisfies the four exchange conclusions checked by
    check_exchange_conclusions(), unless fr(y) is a clique of size
    >= ceil(2s+2t+3), which is returned as BigClique instead.

NUMERICS:
    f1, g1 and the neighbour sums are tracked incrementally; a single
    coordinate change is exact because each objective is affine in any one
    coordinate. AUDIT_MOVES re-evaluates from scratch after every move.
=============================================================================
"""
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Set, Tuple, Union

from .. import config
from .errors import (
    DimensionMismatch,
    HypothesisNotMet,
    InternalAssertion,
    InvalidInput,
    NonPositiveParameter,
    ensure,
)
from .graph import Graph, VertexSet, surplus

logger = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


# ==================== Parameters ====================

@dataclass(frozen=True)
class Params:
    """Derived constants. Internally s <= t; `swapped` records an exchange."""
    s: Fraction
    t: Fraction
    c: Fraction
    p: Fraction
    p_bar: Fraction
    N: Fraction
    swapped: bool = False

    @property
    def clique_size(self) -> int:
        """ceil(2s+2t+3): a clique this large is split directly."""
        return math.ceil(self.N)

    @property
    def caller_s(self) -> Fraction:
        return self.t if self.swapped else self.s

    @property
    def caller_t(self) -> Fraction:
        return self.s if self.swapped else self.t


def make_params(s, t) -> Params:
    s, t = Fraction(s), Fraction(t)
    if s <= 0 or t <= 0:
        raise NonPositiveParameter(f"s and t must be positive, got s={s}, t={t}")

    swapped = s > t
    if swapped:
        s, t = t, s

    denom = s + t + 2
    params = Params(
        s=s, t=t, c=s + t + 1,
        p=(s + 1) / denom, p_bar=(t + 1) / denom,
        N=2 * s + 2 * t + 3, swapped=swapped,
    )
    ensure(params.p + params.p_bar == 1, "p + p_bar = 1", p=params.p, p_bar=params.p_bar)
    # f0 = f1 + p_bar*sum(x) and g0 = g1 + p*sum(1-x) rest on these two identities
    ensure(params.c * params.p - s == params.p_bar, "c*p - s = p_bar")
    ensure(params.c * params.p_bar - t == params.p, "c*p_bar - t = p")
    return params


# ==================== Domain Types ====================

@dataclass(frozen=True)
class FractionalAssignment:
    """A point of [0,1]^V keyed by vertex id of the working graph."""
    values: Mapping[int, Fraction]

    def __post_init__(self):
        frozen = {int(v): Fraction(x) for v, x in self.values.items()}
        for v, x in frozen.items():
            if not ZERO <= x <= ONE:
                raise InvalidInput(f"coordinate {v} = {x} outside [0, 1]")
        object.__setattr__(self, "values", MappingProxyType(frozen))

    @classmethod
    def constant(cls, vertices: Iterable[int], value: Fraction) -> "FractionalAssignment":
        return cls({v: value for v in vertices})

    @classmethod
    def indicator(cls, vertices: Iterable[int], members: Iterable[int]) -> "FractionalAssignment":
        inside = set(members)
        return cls({v: (ONE if v in inside else ZERO) for v in vertices})

    def __getitem__(self, v: int) -> Fraction:
        return self.values[v]

    @property
    def vertices(self) -> FrozenSet[int]:
        return frozenset(self.values)

    def support(self) -> VertexSet:
        """fr(x): coordinates strictly between 0 and 1."""
        return frozenset(v for v, x in self.values.items() if ZERO < x < ONE)

    def ones(self) -> VertexSet:
        return frozenset(v for v, x in self.values.items() if x == ONE)

    def total(self) -> Fraction:
        return sum(self.values.values(), ZERO)

    def co_total(self) -> Fraction:
        return len(self.values) - self.total()

    def is_integral(self) -> bool:
        return not self.support()

    def is_trivial(self) -> bool:
        """x = 0 or x = 1."""
        return all(x == ZERO for x in self.values.values()) or \
            all(x == ONE for x in self.values.values())

    def restricted_to_support(self) -> "FractionalAssignment":
        """y_C: keeps fr(y), zeroes everything else."""
        fr = self.support()
        return FractionalAssignment({v: (x if v in fr else ZERO) for v, x in self.values.items()})

    def with_values(self, updates: Mapping[int, Fraction]) -> "FractionalAssignment":
        merged = dict(self.values)
        merged.update(updates)
        return FractionalAssignment(merged)


@dataclass(frozen=True)
class ObjectiveValues:
    f0: Fraction
    g0: Fraction
    f1: Fraction
    g1: Fraction


@dataclass(frozen=True)
class CliqueSupport:
    members: VertexSet

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class LoopStats:
    iterations: int = 0
    pair_moves: int = 0
    pin_moves: int = 0
    descent_moves: int = 0
    restriction_moves: int = 0


@dataclass(frozen=True)
class CliqueRelaxation:
    """Normal outcome: fr(y) is a clique below the size threshold."""
    y: FractionalAssignment
    support: CliqueSupport
    surplus: Fraction
    stats: LoopStats = field(default_factory=LoopStats)


@dataclass(frozen=True)
class BigClique:
    """Fallback outcome: a clique of size >= ceil(2s+2t+3)."""
    clique: CliqueSupport
    surplus: Fraction
    stats: LoopStats = field(default_factory=LoopStats)


RelaxationOutcome = Union[CliqueRelaxation, BigClique]


# ==================== Objective Evaluation ====================

def _check_dimension(G: Graph, x: FractionalAssignment) -> None:
    if x.vertices != G.vertices:
        raise DimensionMismatch(
            f"assignment covers {len(x.vertices)} vertices, graph has {G.vertex_count}"
        )


def eval_objectives(G: Graph, params: Params, x: FractionalAssignment) -> ObjectiveValues:
    _check_dimension(G, x)
    vals = x.values
    inner = ZERO
    outer = ZERO
    for u, v in G.edge_list:
        xu, xv = vals[u], vals[v]
        inner += xu * xv
        outer += (1 - xu) * (1 - xv)
    total = x.total()
    co_total = len(vals) - total
    return ObjectiveValues(
        f0=inner - params.s * total,
        g0=outer - params.t * co_total,
        f1=inner - params.c * params.p * total,
        g1=outer - params.c * params.p_bar * co_total,
    )


def objective_gradients(
    G: Graph, params: Params, x: FractionalAssignment, v: int
) -> Tuple[Fraction, Fraction]:
    """(df1/dx_v, dg1/dx_v). Their difference is d(v) - c for every x."""
    _check_dimension(G, x)
    nbrs = G.neighbors(v)
    nsum = sum((x[u] for u in nbrs), ZERO)
    df1 = nsum - params.c * params.p
    dg1 = -(len(nbrs) - nsum) + params.c * params.p_bar
    ensure(df1 - dg1 == len(nbrs) - params.c, "df1 - dg1 = d(v) - c", vertex=v)
    return df1, dg1


def fractional_support(x: FractionalAssignment) -> VertexSet:
    return x.support()


# ==================== Planar Ascent Direction ====================

Vector2 = Tuple[Fraction, Fraction]


def _rot(a: Vector2) -> Vector2:
    return (-a[1], a[0])


def ascent_direction(grad_f: Vector2, grad_g: Vector2) -> Vector2:
    """
    Nonzero r in the plane with grad_f . r >= 0 and grad_g . r >= 0.
    Two closed half-planes always share a nonzero ray. Candidates in order:
    axes, rotations of grad_f - grad_g (small exact entries), grad_f, grad_g.
    """
    diff = (grad_f[0] - grad_g[0], grad_f[1] - grad_g[1])
    candidates: List[Vector2] = [
        (ONE, ZERO), (-ONE, ZERO), (ZERO, ONE), (ZERO, -ONE),
    ]
    for base in (diff, grad_f, grad_g):
        r = _rot(base)
        candidates.extend([r, (-r[0], -r[1])])

    for r in candidates:
        if r == (ZERO, ZERO):
            continue
        if grad_f[0] * r[0] + grad_f[1] * r[1] >= 0 and grad_g[0] * r[0] + grad_g[1] * r[1] >= 0:
            return r
    raise InternalAssertion("two half-planes share a nonzero ray",
                            {"grad_f": grad_f, "grad_g": grad_g})


def step_to_boundary(point: Vector2, r: Vector2) -> Vector2:
    """Largest step along r keeping both coordinates in [0,1]."""
    alpha = None
    for x, d in zip(point, r):
        if d > 0:
            limit = (ONE - x) / d
        elif d < 0:
            limit = x / -d
        else:
            continue
        alpha = limit if alpha is None else min(alpha, limit)
    ensure(alpha is not None and alpha > 0, "boundary step is positive", alpha=alpha)
    return tuple(x + alpha * d for x, d in zip(point, r))  # type: ignore[return-value]


# ==================== Exchange State ====================

class _ExchangeState:
    """Mutable y with incremental neighbour sums, f1, g1 and support."""

    def __init__(self, G: Graph, params: Params, T: Fraction):
        self.G = G
        self.params = params
        self.T = T
        self.f1_floor = params.p ** 2 * T
        self.g1_floor = params.p_bar ** 2 * T
        self.cp = params.c * params.p
        self.cpb = params.c * params.p_bar

        start = FractionalAssignment.constant(G.vertices, params.p)
        self.y: Dict[int, Fraction] = dict(start.values)
        self.nsum: Dict[int, Fraction] = {
            v: params.p * len(G.adjacency[v]) for v in G.vertices
        }
        values = eval_objectives(G, params, start)
        self.f1 = values.f1
        self.g1 = values.g1
        self.total = start.total()
        self.fr: Set[int] = set(start.support())
        self.ones: Set[int] = set(start.ones())

    # ----- gradients -----

    def df1(self, v: int) -> Fraction:
        return self.nsum[v] - self.cp

    def dg1(self, v: int) -> Fraction:
        return -(len(self.G.adjacency[v]) - self.nsum[v]) + self.cpb

    # ----- mutation -----

    def set_value(self, v: int, new: Fraction) -> None:
        delta = new - self.y[v]
        if delta == 0:
            return
        self.f1 += delta * self.df1(v)
        self.g1 += delta * self.dg1(v)
        for u in self.G.adjacency[v]:
            self.nsum[u] += delta
        self.y[v] = new
        self.total += delta
        self.fr.discard(v)
        self.ones.discard(v)
        if new == ONE:
            self.ones.add(v)
        elif new != ZERO:
            self.fr.add(v)

    def snapshot(self) -> FractionalAssignment:
        return FractionalAssignment(self.y)

    def clique_f1(self) -> Fraction:
        """f1(y_C) when fr(y) is a clique: pairwise products plus linear term."""
        vals = [self.y[v] for v in self.fr]
        s1 = sum(vals, ZERO)
        s2 = sum((x * x for x in vals), ZERO)
        return (s1 * s1 - s2) / 2 - self.cp * s1

    # ----- loop steps -----

    def _nonadjacent_pair(self) -> Optional[Tuple[int, int]]:
        order = sorted(self.fr)
        for i, u in enumerate(order):
            nbrs = self.G.adjacency[u]
            for v in order[i + 1:]:
                if v not in nbrs:
                    return u, v
        return None

    def step(self) -> Optional[str]:
        pair = self._nonadjacent_pair()
        if pair is not None:
            u, v = pair
            r = ascent_direction((self.df1(u), self.df1(v)), (self.dg1(u), self.dg1(v)))
            new_u, new_v = step_to_boundary((self.y[u], self.y[v]), r)
            logger.debug(f"pair move ({u},{v}) along {r}")
            self.set_value(u, new_u)
            self.set_value(v, new_v)
            return "pair"

        for v in sorted(self.fr):
            a, b = self.df1(v), self.dg1(v)
            if a >= 0 and b >= 0:
                self.set_value(v, ONE)
                return "pin"
            if a <= 0 and b <= 0:
                self.set_value(v, ZERO)
                return "pin"

        if self.f1 > self.f1_floor and self.fr:
            v = min(self.fr)
            slope = self.df1(v)
            ensure(slope > 0 > self.dg1(v), "df1 > 0 > dg1 on the support", vertex=v)
            drop = min(self.y[v], (self.f1 - self.f1_floor) / slope)
            self.set_value(v, self.y[v] - drop)
            return "descent"

        if self.fr and self.clique_f1() > self.f1_floor:
            for v in sorted(self.ones):
                self.set_value(v, ZERO)
            return "restriction"

        return None


# ==================== Clique-ification ====================

def cliqueify(G: Graph, params: Params, audit: Optional[bool] = None) -> RelaxationOutcome:
    """Run the exchange loop from p*1 on the peeled graph G."""
    audit = config.AUDIT_MOVES if audit is None else audit
    n = G.vertex_count
    _, T = surplus(G, G.vertices, params.c)
    delta = G.min_degree()
    if delta is None or delta <= params.c + T:
        raise HypothesisNotMet(
            f"working graph needs minimum degree > {params.c + T}, got {delta}"
        )

    state = _ExchangeState(G, params, T)
    ensure(state.f1 == state.f1_floor and state.g1 == state.g1_floor,
           "f1(p1) = p^2 T and g1(p1) = p_bar^2 T", f1=state.f1, g1=state.g1)

    counts = {"pair": 0, "pin": 0, "descent": 0, "restriction": 0}
    cap = n * (n + 2)
    iterations = 0
    while True:
        before = (len(state.fr), state.total)
        kind = state.step()
        if kind is None:
            break
        iterations += 1
        counts[kind] += 1
        after = (len(state.fr), state.total)

        ensure(iterations <= cap, "exchange loop iteration bound", iterations=iterations, cap=cap)
        ensure(after < before, "potential (|fr|, sum y) decreases", move=kind,
               fr_before=before[0], fr_after=after[0])
        if kind == "restriction" and after[0] == before[0]:
            ensure(before[1] - after[1] >= 1, "restriction drops sum y by at least 1",
                   drop=before[1] - after[1])
        ensure(state.f1 >= state.f1_floor, "move keeps f1 >= p^2 T", move=kind, f1=state.f1)
        ensure(state.g1 >= state.g1_floor, "move keeps g1 >= p_bar^2 T", move=kind, g1=state.g1)
        ensure(ZERO < state.total < n, "y stays off {0, 1}", total=state.total)

        if audit:
            fresh = eval_objectives(G, params, state.snapshot())
            ensure(fresh.f1 == state.f1 and fresh.g1 == state.g1,
                   "tracked objectives match re-evaluation", move=kind)

    stats = LoopStats(
        iterations=iterations,
        pair_moves=counts["pair"],
        pin_moves=counts["pin"],
        descent_moves=counts["descent"],
        restriction_moves=counts["restriction"],
    )
    y = state.snapshot()
    support = CliqueSupport(y.support())
    ensure(G.is_clique(support.members), "terminal support is a clique")

    if len(support) >= params.clique_size:
        logger.info(f"Exchange loop surfaced a clique of size {len(support)} "
                    f"after {iterations} moves")
        return BigClique(clique=support, surplus=T, stats=stats)

    check_exchange_conclusions(G, params, y, T)
    logger.info(f"Exchange loop: {iterations} moves, |C|={len(support)}, "
                f"sum y={float(state.total):.3f}")
    return CliqueRelaxation(y=y, support=support, surplus=T, stats=stats)


def check_exchange_conclusions(G: Graph, params: Params, y: FractionalAssignment, T: Fraction) -> None:
    """Re-check every terminal property of the exchange loop from scratch."""
    p, p_bar, c = params.p, params.p_bar, params.c
    values = eval_objectives(G, params, y)
    C = y.support()

    # (1)
    ensure(values.f1 >= p ** 2 * T, "f1(y) >= p^2 T", f1=values.f1, T=T)
    ensure(values.g1 >= p_bar ** 2 * T, "g1(y) >= p_bar^2 T", g1=values.g1, T=T)
    ensure(not y.is_trivial(), "y not in {0, 1}")
    # (2)
    ensure(G.is_clique(C), "fr(y) is a clique", size=len(C))
    ensure(len(C) < params.N, "|fr(y)| < 2s+2t+3", size=len(C))
    # (3)
    spread = sum((y[v] - y[v] ** 2 for v in C), ZERO)
    bound = params.N * p * (1 - p) + T * p * (1 - p) / (params.s + params.t + 2)
    ensure(spread < bound, "sum_C (y - y^2) below the support bound", spread=spread, bound=bound)
    # (4)
    ensure(y.total() >= 2 * c * p, "sum y >= 2cp", total=y.total())
    ensure(y.co_total() >= 2 * c * p_bar, "sum (1-y) >= 2c p_bar", co_total=y.co_total())

    if C:
        ensure(values.f1 == p ** 2 * T, "f1(y) = p^2 T on a nonempty support", f1=values.f1)
        restricted = eval_objectives(G, params, y.restricted_to_support())
        ensure(restricted.f1 <= p ** 2 * T, "f1(y_C) <= p^2 T", f1_c=restricted.f1)
        for v in sorted(C):
            df1, dg1 = objective_gradients(G, params, y, v)
            ensure(df1 > 0 > dg1, "df1 > 0 > dg1 on the support", vertex=v)
