"""
Average-Degree Partition - Pydantic Schemas for Validation
"""
from fractions import Fraction
from typing import Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

RATIONAL_PATTERN = r"^-?\d+/\d+$"

PathName = Literal["small-st", "clique-fallback", "rounding"]


def _lowest_terms(value: str) -> str:
    num, den = value.split("/")
    if int(den) == 0:
        raise ValueError(f"zero denominator in {value!r}")
    frac = Fraction(int(num), int(den))
    if f"{frac.numerator}/{frac.denominator}" != value:
        raise ValueError(f"{value!r} is not in lowest terms")
    return value


# ==================== Witness Document ====================

class Margins(BaseModel):
    model_config = ConfigDict(extra="forbid")

    sSide: str = Field(..., pattern=RATIONAL_PATTERN, description="||A|| - s|A|")
    tSide: str = Field(..., pattern=RATIONAL_PATTERN, description="||B|| - t|B|")

    @field_validator("sSide", "tSide")
    @classmethod
    def check_terms(cls, value: str) -> str:
        return _lowest_terms(value)


class WitnessDocument(BaseModel):
    """Serialized partition witness. Rationals are 'num/den' strings in lowest terms."""
    model_config = ConfigDict(extra="forbid")

    s: str = Field(..., pattern=RATIONAL_PATTERN)
    t: str = Field(..., pattern=RATIONAL_PATTERN)
    A: List[int]
    B: List[int]
    path: PathName
    peeled: List[int]
    margins: Margins
    certificate: Optional[Dict[str, Union[str, int, None]]] = None

    @field_validator("s", "t")
    @classmethod
    def check_terms(cls, value: str) -> str:
        return _lowest_terms(value)

    @field_validator("A", "B", "peeled")
    @classmethod
    def check_ascending(cls, value: List[int]) -> List[int]:
        if any(a >= b for a, b in zip(value, value[1:])):
            raise ValueError("vertex arrays must be strictly ascending")
        return value

    @model_validator(mode="after")
    def check_disjoint(self) -> "WitnessDocument":
        if set(self.A) & set(self.B):
            raise ValueError("A and B must be disjoint")
        return self


# ==================== API Request/Response Models ====================

class SolveRequest(BaseModel):
    """Request for a partition of a graph given as GraphText"""
    graph_text: str
    s: str
    t: str

    class Config:
        json_schema_extra = {
            "example": {
                "graph_text": "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n",
                "s": "1/4",
                "t": "1/4",
            }
        }


class VerifyRequest(SolveRequest):
    """Request to re-check a witness against its graph"""
    witness: WitnessDocument


class VerifyResponse(BaseModel):
    ok: bool
    failures: List[str]
    margins_match: bool


class OracleRequest(SolveRequest):
    cap: Optional[int] = Field(None, ge=0)


class OracleResponse(BaseModel):
    found: bool
    A: Optional[List[int]] = None
    B: Optional[List[int]] = None


class GenerateRequest(BaseModel):
    spec: str = Field(..., min_length=1, description="complete(n), gnp(n,p,seed), sharp(s,t,n), union(a,b)")
    seed: Optional[int] = None


class GenerateResponse(BaseModel):
    graph_text: str
    vertices: int
    edges: int
