"""
Rounding Service
Turns the clique-supported fractional point y into an integral side vector.

    f2(x) = f0(x) - (S_C(x) - S_C(y) + p_bar)^2 / 2 - sum_C (x_v - x_v^2) / 2
    g2(x) = g0(x) - (S_C(y) - S_C(x) + p)^2 / 2     - sum_C (x_v - x_v^2) / 2

where S_C is the coordinate sum over the clique support C = fr(y). Both are
lower bounds for f0/g0 on the cube and affine in the C-coordinates, so the
support collapses to at most one fractional pivot w, which is then rounded
both ways and the better passing corner kept.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .. import config
from .errors import InternalAssertion, NotAClique, SupportMismatch, ensure
from .graph import Graph
from .relaxation import (
    HALF,
    ONE,
    ZERO,
    CliqueSupport,
    FractionalAssignment,
    ObjectiveValues,
    Params,
    ascent_direction,
    eval_objectives,
    step_to_boundary,
)

logger = logging.getLogger(__name__)

CHOSEN_PLUS = "plus"
CHOSEN_MINUS = "minus"
CHOSEN_NONE = "none"


@dataclass(frozen=True)
class RoundingCertificate:
    T: Fraction
    x_bound: Fraction
    y_bound: Fraction
    a_margin: Fraction
    b_margin: Fraction
    a_local: Optional[Fraction]
    b_local: Optional[Fraction]
    pivot: Optional[int]
    chosen: str
    f0: Fraction
    g0: Fraction
    f2_corner: Fraction
    g2_corner: Fraction

    @property
    def achieved(self) -> Fraction:
        """f0 + g0 at the chosen point (acceptance threshold is T - 1)."""
        return self.f0 + self.g0


# ==================== Penalized Objectives ====================

def _check_support(G: Graph, y: FractionalAssignment, C: CliqueSupport) -> None:
    if C.members != y.support():
        raise SupportMismatch("C must equal fr(y)")
    if not G.is_clique(C.members):
        raise NotAClique(f"support of size {len(C)} is not a clique")


def _penalties(
    params: Params, y: FractionalAssignment, C: CliqueSupport, x: FractionalAssignment
) -> Tuple[Fraction, Fraction]:
    shift = sum((x[v] - y[v] for v in C.members), ZERO)
    spread = sum((x[v] - x[v] * x[v] for v in C.members), ZERO)
    pen_f = (shift + params.p_bar) ** 2 / 2 + spread / 2
    pen_g = (params.p - shift) ** 2 / 2 + spread / 2
    return pen_f, pen_g


def eval_penalized(
    G: Graph,
    params: Params,
    y: FractionalAssignment,
    C: CliqueSupport,
    x: FractionalAssignment,
) -> Tuple[Fraction, Fraction]:
    """(f2(x), g2(x)) for the support C = fr(y)."""
    _check_support(G, y, C)
    values = eval_objectives(G, params, x)
    pen_f, pen_g = _penalties(params, y, C, x)
    return values.f0 - pen_f, values.g0 - pen_g


def penalized_gradient(
    G: Graph,
    params: Params,
    y: FractionalAssignment,
    C: CliqueSupport,
    x: FractionalAssignment,
    v: int,
) -> Tuple[Fraction, Fraction]:
    """Slopes of f2 and g2 in coordinate v of C (constant along C)."""
    if v not in C.members:
        raise SupportMismatch(f"vertex {v} is not in the clique support")
    nbrs = G.neighbors(v)
    nsum = sum((x[u] for u in nbrs), ZERO)
    shift = sum((x[u] - y[u] for u in C.members), ZERO)
    df2 = nsum - params.s - (shift + params.p_bar) - HALF + x[v]
    dg2 = -(len(nbrs) - nsum) + params.t + (params.p - shift) - HALF + x[v]
    return df2, dg2


# ==================== Corner Collapse ====================

def collapse_to_corner(
    G: Graph,
    params: Params,
    y: FractionalAssignment,
    C: CliqueSupport,
    audit: Optional[bool] = None,
) -> FractionalAssignment:
    """
    Pairwise moves on the two smallest fractional C-coordinates until at most
    one remains; f2 and g2 never decrease.
    """
    corner, _ = collapse_with_steps(G, params, y, C, audit=audit)
    return corner


def collapse_with_steps(
    G: Graph,
    params: Params,
    y: FractionalAssignment,
    C: CliqueSupport,
    audit: Optional[bool] = None,
) -> Tuple[FractionalAssignment, int]:
    """collapse_to_corner plus the number of pairwise moves it took."""
    audit = config.AUDIT_MOVES if audit is None else audit
    _check_support(G, y, C)
    f2_start, g2_start = eval_penalized(G, params, y, C, y)
    f2, g2 = f2_start, g2_start

    z: Dict[int, Fraction] = dict(y.values)
    steps = 0
    while True:
        fractional = sorted(v for v in C.members if ZERO < z[v] < ONE)
        if len(fractional) < 2:
            break
        u, v = fractional[0], fractional[1]
        current = FractionalAssignment(z)
        fu, gu = penalized_gradient(G, params, y, C, current, u)
        fv, gv = penalized_gradient(G, params, y, C, current, v)
        r = ascent_direction((fu, fv), (gu, gv))
        new_u, new_v = step_to_boundary((z[u], z[v]), r)
        du, dv = new_u - z[u], new_v - z[v]
        f2 += fu * du + fv * dv
        g2 += gu * du + gv * dv
        z[u], z[v] = new_u, new_v
        steps += 1
        logger.debug(f"collapse move ({u},{v}) along {r}")

        ensure(f2 >= f2_start and g2 >= g2_start, "collapse keeps f2, g2 non-decreasing",
               f2=f2, g2=g2)
        ensure(steps <= len(C), "collapse step bound", steps=steps)
        if audit:
            fresh = eval_penalized(G, params, y, C, FractionalAssignment(z))
            ensure(fresh == (f2, g2), "tracked f2, g2 match re-evaluation")

    corner = FractionalAssignment(z)
    ensure(all(corner[v] == y[v] for v in G.vertices if v not in C.members),
           "collapse leaves coordinates outside C untouched")
    ensure(len(corner.support()) <= 1, "at most one fractional coordinate",
           fractional=len(corner.support()))
    ensure(eval_penalized(G, params, y, C, corner) == (f2, g2),
           "collapsed f2, g2 match the tracked values")
    logger.info(f"Collapse: {steps} moves, pivot={sorted(corner.support()) or None}")
    return corner, steps


# ==================== Integral Selection ====================

def _passes(x: FractionalAssignment, values: ObjectiveValues, T: Fraction) -> bool:
    return (
        not x.is_trivial()
        and values.f0 >= 0
        and values.g0 >= 0
        and values.f0 + values.g0 >= T - 1
    )


def select_integral(
    G: Graph,
    params: Params,
    y: FractionalAssignment,
    C: CliqueSupport,
    z: FractionalAssignment,
    T: Fraction,
) -> Tuple[FractionalAssignment, RoundingCertificate]:
    """Round the pivot (if any) both ways and return a corner passing the acceptance test."""
    s, t, p, p_bar, c = params.s, params.t, params.p, params.p_bar, params.c
    ensure(0 <= T < s + t + 2, "0 <= T < s+t+2", T=T)
    fractional = z.support()
    if len(fractional) > 1:
        raise SupportMismatch(f"corner has {len(fractional)} fractional coordinates")

    n = G.vertex_count
    total_y = y.total()
    loss = p * (1 - p) * T / (2 * s + 2 * t + 4)
    X = p ** 2 * T - loss
    Y = p_bar ** 2 * T - loss
    A = total_y - c * p - HALF
    B = (n - total_y) - c * p_bar - HALF

    ensure(X >= 0 and Y >= 0, "X >= 0 and Y >= 0", X=X, Y=Y)
    ensure(A >= c * p - HALF > 0, "A >= cp - 1/2 > 0", A=A)
    ensure(B >= c * p_bar - HALF > 0, "B >= c p_bar - 1/2 > 0", B=B)
    ensure(A + B == n - (s + t + 2), "A + B = |V| - (s+t+2)", sum=A + B)
    ensure(A + B >= T, "A + B >= T", sum=A + B, T=T)

    f2_z, g2_z = eval_penalized(G, params, y, C, z)
    ensure(f2_z >= X + A * p_bar > 0, "f2(z) >= X + A p_bar > 0", f2=f2_z)
    ensure(g2_z >= Y + B * p > 0, "g2(z) >= Y + B p > 0", g2=g2_z)
    ensure(f2_z + g2_z >= X + Y + A * p_bar + B * p >= T - Fraction(7, 12),
           "f2(z) + g2(z) >= X + Y + A p_bar + B p >= T - 7/12", sum=f2_z + g2_z, T=T)

    if not fractional:
        values = eval_objectives(G, params, z)
        ensure(_passes(z, values, T), "integral corner meets the acceptance test",
               f0=values.f0, g0=values.g0, T=T)
        cert = RoundingCertificate(
            T=T, x_bound=X, y_bound=Y, a_margin=A, b_margin=B,
            a_local=None, b_local=None, pivot=None, chosen=CHOSEN_NONE,
            f0=values.f0, g0=values.g0, f2_corner=f2_z, g2_corner=g2_z,
        )
        logger.info(f"Integral corner accepted: f0+g0={values.f0 + values.g0}, T={T}")
        return z, cert

    (w,) = tuple(fractional)
    non_neighbors = [v for v in G.vertices if v != w and not G.has_edge(v, w)]
    a_local = A - sum((y[v] for v in non_neighbors), ZERO)
    b_local = B - sum((1 - y[v] for v in non_neighbors), ZERO)
    ensure(a_local + b_local == G.degree(w) + 1 - (s + t + 2),
           "A' + B' = d(w) + 1 - (s+t+2)", sum=a_local + b_local)
    ensure(a_local + b_local > T, "A' + B' > T", sum=a_local + b_local, T=T)

    df2, dg2 = penalized_gradient(G, params, y, C, z, w)
    ensure(df2 == a_local and dg2 == -b_local, "pivot slopes equal (A', -B')",
           df2=df2, dg2=dg2, a_local=a_local, b_local=b_local)

    plus = z.with_values({w: ONE})
    minus = z.with_values({w: ZERO})
    f2_plus, g2_plus = eval_penalized(G, params, y, C, plus)
    f2_minus, g2_minus = eval_penalized(G, params, y, C, minus)
    ensure(f2_plus - f2_minus == a_local and g2_plus - g2_minus == -b_local,
           "pivot rounding changes f2 by A' and g2 by -B'")

    candidates = []
    for tag, point in ((CHOSEN_PLUS, plus), (CHOSEN_MINUS, minus)):
        values = eval_objectives(G, params, point)
        logger.debug(f"corner {tag}: f0={values.f0}, g0={values.g0}")
        if _passes(point, values, T):
            candidates.append((values.f0 + values.g0, tag, point, values))

    if not candidates:
        raise InternalAssertion("one rounded corner meets the acceptance test",
                                {"pivot": w, "T": T, "A'": a_local, "B'": b_local})

    # larger f0 + g0 wins, ties to plus
    best = max(candidates, key=lambda item: (item[0], item[1] == CHOSEN_PLUS))
    _, tag, point, values = best
    cert = RoundingCertificate(
        T=T, x_bound=X, y_bound=Y, a_margin=A, b_margin=B,
        a_local=a_local, b_local=b_local, pivot=w, chosen=tag,
        f0=values.f0, g0=values.g0, f2_corner=f2_z, g2_corner=g2_z,
    )
    logger.info(f"Pivot {w} rounded {tag}: f0={values.f0}, g0={values.g0}, T={T}")
    return point, cert
