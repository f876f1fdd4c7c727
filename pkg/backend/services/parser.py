"""
=============================================================================
GRAPH TEXT & RATIONAL PARSING SERVICE
=============================================================================

ARCHITECTURAL ROLE:
    Reads and writes the plain-text edge-list format every surface (CLI,
    HTTP) accepts, and parses the exact rationals used for s and t.

GRAPH TEXT FORMAT:

    # anything after '#' at the start of a line is ignored
    n m
    u v        (m lines, one edge each, both endpoints < n)

    Blank lines are ignored. The edge count in the header must match the
    number of edge lines. Either orientation is accepted: "2 0" reads as the
    edge (0, 2), and format_graph always writes the low endpoint first.
    Repeated edges (in either orientation) and self-loops are rejected,
    never merged.

FUNCTION REFERENCE:

    parse_graph(text: str) -> Graph
        RAISES: ParseError (with 1-based line number), SelfLoop,
                DuplicateEdge, VertexOutOfRange
        EXAMPLE: "3 2\\n0 1\\n1 2\\n" -> path on 3 vertices

    format_graph(G: Graph) -> str
        Canonical text: header, then edges sorted with u < v.
        parse_graph(format_graph(G)) has exactly G's edges.

    parse_rational(text: str) -> Fraction
        ACCEPTS: "3/2", "2", "-1/4"
        REJECTS: decimals ("0.5"), exponents, empty strings
        RAISES: InvalidRational

    format_rational(value: Fraction) -> str
        Always "num/den" in lowest terms: 3 -> "3/1".
=============================================================================
"""
import logging
import re
from fractions import Fraction
from typing import List, Tuple

from .errors import DuplicateEdge, InvalidRational, ParseError, SelfLoop, VertexOutOfRange
from .graph import Graph, build_graph

logger = logging.getLogger(__name__)

_INT = r"[+-]?\d+"
_RATIONAL_RE = re.compile(rf"^\s*({_INT})(?:\s*/\s*(\d+))?\s*$")
_PAIR_RE = re.compile(r"^\s*(\d+)\s+(\d+)\s*$")


# ==================== Rationals ====================

def parse_rational(text: str) -> Fraction:
    """'num/den' or an integer; decimals are rejected to keep values exact."""
    match = _RATIONAL_RE.match(str(text))
    if not match:
        raise InvalidRational(f"expected 'num/den' or an integer, got {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise InvalidRational(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(value) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


# ==================== Graph Text ====================

def _content_lines(text: str) -> List[Tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append((number, stripped))
    return lines


def parse_graph(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("missing header 'n m'", line=1)

    header_line, header = lines[0]
    match = _PAIR_RE.match(header)
    if not match:
        raise ParseError(f"header must be two non-negative integers 'n m', got {header!r}",
                         line=header_line)
    n, m = int(match.group(1)), int(match.group(2))

    body = lines[1:]
    if len(body) != m:
        last = body[-1][0] if body else header_line
        raise ParseError(f"header announces {m} edges, found {len(body)}", line=last)

    edges = []
    seen = set()
    for number, content in body:
        match = _PAIR_RE.match(content)
        if not match:
            raise ParseError(f"edge line must be 'u v', got {content!r}", line=number)
        u, v = int(match.group(1)), int(match.group(2))
        # checked here so the error names the line
        if u == v:
            raise SelfLoop(f"line {number}: self-loop at vertex {u}")
        if u >= n or v >= n:
            raise VertexOutOfRange(f"line {number}: edge ({u}, {v}) outside 0..{n - 1}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"line {number}: edge ({u}, {v}) listed more than once")
        seen.add(key)
        edges.append(key)

    graph = build_graph(n, edges)
    logger.debug(f"Parsed {graph!r} from {len(lines)} content lines")
    return graph


def format_graph(G: Graph) -> str:
    """Canonical GraphText. Vertex ids must be 0..n-1."""
    if G.vertices != frozenset(range(G.vertex_count)):
        raise VertexOutOfRange("graph text needs vertex ids 0..n-1")
    out = [f"{G.vertex_count} {G.edge_count}"]
    out.extend(f"{u} {v}" for u, v in G.edge_list)
    return "\n".join(out) + "\n"
