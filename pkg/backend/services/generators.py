"""
Graph generators addressed by a spec string:

    complete(n)
    gnp(n, prob[, seed])     prob as "num/den"; seed defaults to the caller's
    sharp(s, t, n)           clique {0..s+t} joined to an independent rest
    union(spec, spec)        disjoint union, second part shifted by |V(first)|

gnp draws from splitmix64 (constants below) over the pairs u < v in
lexicographic order and keeps an edge iff r * den < num * 2^64, so an edge
set depends only on (n, prob, seed).
"""
import logging
from fractions import Fraction
from typing import List, Optional

import networkx as nx

from .errors import InvalidRational, InvalidSpec
from .graph import Graph, build_graph
from .parser import parse_rational

logger = logging.getLogger(__name__)

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX_1 = 0xBF58476D1CE4E5B9
MIX_2 = 0x94D049BB133111EB


class SplitMix64:
    """splitmix64: state += gamma, then two xor-shift-multiply rounds."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * MIX_1) & MASK64
        z = ((z ^ (z >> 27)) * MIX_2) & MASK64
        return z ^ (z >> 31)


# ==================== Generators ====================

def complete(n: int) -> Graph:
    if n < 0:
        raise InvalidSpec(f"complete(n) needs n >= 0, got {n}")
    return Graph(nx.complete_graph(n))


def gnp(n: int, prob, seed: int) -> Graph:
    prob = Fraction(prob)
    if n < 0 or not 0 <= prob <= 1:
        raise InvalidSpec(f"gnp needs n >= 0 and 0 <= prob <= 1, got n={n}, prob={prob}")
    rng = SplitMix64(seed)
    threshold = prob.numerator << 64
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.next() * prob.denominator < threshold:
                edges.append((u, v))
    logger.debug(f"gnp({n}, {prob}, {seed}) drew {len(edges)} edges")
    return build_graph(n, edges)


def sharp_density(s: int, t: int, n: int) -> int:
    """Edge count of sharp(s, t, n): C(s+t+1, 2) plus (n-s-t-1)(s+t+1)."""
    k = s + t + 1
    return k * (k - 1) // 2 + (n - k) * k


def sharp(s: int, t: int, n: int) -> Graph:
    """
    Clique on {0..s+t}, every clique vertex joined to every other vertex,
    no edges among the rest. Admits no (s, t) partition although ||V|| / |V|
    approaches s+t+1 as n grows.
    """
    if s <= 0 or t <= 0:
        raise InvalidSpec(f"sharp needs positive integers s, t, got s={s}, t={t}")
    k = s + t + 1
    if n <= k:
        raise InvalidSpec(f"sharp needs n > s+t+1 = {k}, got n={n}")
    edges = [(u, v) for u in range(k) for v in range(u + 1, n)]
    graph = build_graph(n, edges)
    if graph.edge_count != sharp_density(s, t, n):
        raise InvalidSpec(f"sharp({s},{t},{n}) built {graph.edge_count} edges")
    return graph


def union(first: Graph, second: Graph) -> Graph:
    offset = first.vertex_count
    edges = list(first.edge_list) + [(u + offset, v + offset) for u, v in second.edge_list]
    return build_graph(offset + second.vertex_count, edges)


# ==================== Spec strings ====================

def _split_args(body: str, spec: str) -> List[str]:
    args, depth, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise InvalidSpec(f"unbalanced parentheses in {spec!r}")
        elif ch == "," and depth == 0:
            args.append(body[start:i].strip())
            start = i + 1
    if depth != 0:
        raise InvalidSpec(f"unbalanced parentheses in {spec!r}")
    tail = body[start:].strip()
    if tail or args:
        args.append(tail)
    return args


def _int_arg(value: str, name: str, spec: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise InvalidSpec(f"{name} must be an integer in {spec!r}, got {value!r}")


def generate(spec: str, seed: Optional[int] = None) -> Graph:
    """Build the graph named by `spec`. `seed` fills in a gnp seed left out of the spec."""
    spec = spec.strip()
    open_at = spec.find("(")
    if open_at <= 0 or not spec.endswith(")"):
        raise InvalidSpec(f"expected name(args), got {spec!r}")
    name = spec[:open_at].strip().lower()
    args = _split_args(spec[open_at + 1:-1], spec)

    if name == "complete":
        if len(args) != 1:
            raise InvalidSpec(f"complete takes 1 argument, got {len(args)}")
        return complete(_int_arg(args[0], "n", spec))

    if name == "gnp":
        if len(args) not in (2, 3):
            raise InvalidSpec(f"gnp takes 2 or 3 arguments, got {len(args)}")
        n = _int_arg(args[0], "n", spec)
        try:
            prob = parse_rational(args[1])
        except InvalidRational as exc:
            raise InvalidSpec(f"bad probability in {spec!r}: {exc}")
        if len(args) == 3:
            rng_seed = _int_arg(args[2], "seed", spec)
        else:
            rng_seed = seed if seed is not None else 0
        return gnp(n, prob, rng_seed)

    if name == "sharp":
        if len(args) != 3:
            raise InvalidSpec(f"sharp takes 3 arguments, got {len(args)}")
        s, t, n = (_int_arg(a, label, spec) for a, label in zip(args, ("s", "t", "n")))
        return sharp(s, t, n)

    if name == "union":
        if len(args) != 2:
            raise InvalidSpec(f"union takes 2 arguments, got {len(args)}")
        return union(generate(args[0], seed), generate(args[1], seed))

    raise InvalidSpec(f"unknown generator {name!r}")
