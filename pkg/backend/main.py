"""
=============================================================================
AVERAGE-DEGREE PARTITION SOLVER - HTTP SERVICE
=============================================================================

PURPOSE:
    Given a graph G and rationals s, t > 0 with ||V|| >= (s+t+1)|V|, return a
    partition (A, B) of V with ||A|| >= s|A| and ||B|| >= t|B|, together with
    the exact rational quantities needed to re-check it.

ENDPOINTS:
    GET  /health                    - Health check and configured caps
    POST /api/partition/solve       - Solve and return a witness document
    POST /api/partition/verify      - Re-check a witness
    POST /api/partition/oracle      - Brute-force search on small graphs
    POST /api/partition/generate    - Build a graph from a generator spec

RUN:
    uvicorn backend.main:app --port 8001
    python -m backend serve

=============================================================================
"""
import logging
from datetime import datetime

from fastapi import FastAPI

from . import config
from .logging_config import configure_logging
from .routes.partition import router as partition_router

# ==================== Logging Setup ====================
configure_logging()
logger = logging.getLogger(__name__)

# ==================== App Initialization ====================
app = FastAPI(
    title="Average-Degree Partition Solver",
    description="Splits a dense graph into two parts of prescribed minimum density, with exact certificates.",
    version=config.VERSION,
    docs_url="/docs",
    redoc_url="/redoc"
)

# ==================== Register Partition Router ====================
app.include_router(partition_router)  # /api/partition/*


# ==================== Health Check ====================

@app.get("/health")
async def health():
    """Service status and the limits this instance enforces."""
    return {
        "status": "healthy",
        "service": "avgdeg-partition",
        "version": config.VERSION,
        "max_api_vertices": config.MAX_API_VERTICES,
        "oracle_partition_cap": config.ORACLE_PARTITION_CAP,
        "oracle_fact5_cap": config.ORACLE_FACT5_CAP,
        "audit_moves": config.AUDIT_MOVES,
        "timestamp": datetime.now().isoformat()
    }


# ==================== Run Server ====================

if __name__ == "__main__":
    import uvicorn

    logger.info(f"Starting partition solver on {config.API_HOST}:{config.API_PORT}")
    uvicorn.run(app, host=config.API_HOST, port=config.API_PORT)
