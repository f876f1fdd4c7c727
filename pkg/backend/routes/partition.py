"""
=============================================================================
PARTITION API ROUTES
=============================================================================

Average-degree partition solver over HTTP. Same services as the CLI.

ENDPOINTS:
    POST /api/partition/solve     - Graph + (s, t) -> WitnessDocument
    POST /api/partition/verify    - Re-check a witness against its graph
    POST /api/partition/oracle    - Brute-force partition search (small graphs)
    POST /api/partition/generate  - Build a graph from a generator spec

ERRORS:
    400  invalid input (bad GraphText, rationals, spec strings, too large)
    422  density hypothesis not met
    500  internal certificate check failed

Handlers are plain `def`: the work is CPU-bound exact arithmetic, so FastAPI
runs them in its threadpool instead of on the event loop.
=============================================================================
"""
import logging

from fastapi import APIRouter, HTTPException, status

from .. import config
from ..schemas import (
    GenerateRequest,
    GenerateResponse,
    OracleRequest,
    OracleResponse,
    SolveRequest,
    VerifyRequest,
    VerifyResponse,
    WitnessDocument,
)
from ..services.assembler import solve, validate
from ..services.errors import HypothesisNotMet, InternalAssertion, InvalidInput, TooLarge
from ..services.generators import generate
from ..services.graph import Graph
from ..services.oracle import brute_force_partition
from ..services.parser import format_graph, parse_graph, parse_rational
from ..services.witness_io import margins_match, to_witness, witness_document

# ==================== Logging ====================
logger = logging.getLogger(__name__)

# ==================== Router ====================
router = APIRouter(prefix="/api/partition", tags=["Partition"])


# ==================== Helpers ====================

def _load_graph(graph_text: str) -> Graph:
    G = parse_graph(graph_text)
    if G.vertex_count > config.MAX_API_VERTICES:
        raise TooLarge(f"graph has {G.vertex_count} vertices, limit is {config.MAX_API_VERTICES}")
    return G


def _http_error(exc: Exception, action: str) -> HTTPException:
    if isinstance(exc, HypothesisNotMet):
        logger.info(f"{action}: hypothesis not met: {exc}")
        return HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=str(exc))
    if isinstance(exc, InvalidInput):
        logger.warning(f"{action}: invalid input: {exc}")
        return HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(exc))
    if isinstance(exc, InternalAssertion):
        logger.error(f"{action}: certificate check failed: {exc}", exc_info=True)
        return HTTPException(status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
                             detail=f"Internal check failed: {exc}")
    logger.error(f"{action} failed: {exc}", exc_info=True)
    return HTTPException(status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
                         detail=f"{action} failed: {str(exc)}")


# ==================== Endpoints ====================

@router.post("/solve", response_model=WitnessDocument)
def solve_partition(request: SolveRequest):
    """Run the full pipeline and return the canonical witness document."""
    try:
        G = _load_graph(request.graph_text)
        s, t = parse_rational(request.s), parse_rational(request.t)
        logger.info(f"Solve request: {G!r}, s={s}, t={t}")
        witness = solve(G, s, t)
        return witness_document(witness, s, t)
    except Exception as e:
        raise _http_error(e, "Solve")


@router.post("/verify", response_model=VerifyResponse)
def verify_witness(request: VerifyRequest):
    """Recompute every inequality from the graph; recorded margins are only compared."""
    try:
        G = _load_graph(request.graph_text)
        s, t = parse_rational(request.s), parse_rational(request.t)
        report = validate(G, s, t, to_witness(request.witness))
        matched = margins_match(G, request.witness)
        return VerifyResponse(
            ok=report.ok,
            failures=[str(f) for f in report.failures],
            margins_match=matched,
        )
    except Exception as e:
        raise _http_error(e, "Verify")


@router.post("/oracle", response_model=OracleResponse)
def oracle_partition(request: OracleRequest):
    """Lexicographically first valid partition by exhaustive search, if any."""
    try:
        G = _load_graph(request.graph_text)
        s, t = parse_rational(request.s), parse_rational(request.t)
        found = brute_force_partition(G, s, t, cap=request.cap)
        if found is None:
            return OracleResponse(found=False)
        A, B = found
        return OracleResponse(found=True, A=sorted(A), B=sorted(B))
    except Exception as e:
        raise _http_error(e, "Oracle")


@router.post("/generate", response_model=GenerateResponse)
def generate_graph(request: GenerateRequest):
    try:
        G = generate(request.spec, seed=request.seed)
        if G.vertex_count > config.MAX_API_VERTICES:
            raise TooLarge(f"generated graph has {G.vertex_count} vertices")
        return GenerateResponse(graph_text=format_graph(G), vertices=G.vertex_count,
                                edges=G.edge_count)
    except Exception as e:
        raise _http_error(e, "Generate")
