"""
Witness serialization.

render_witness produces canonical JSON (sorted keys, ascending vertex
arrays, "num/den" rationals) so identical solves give byte-identical files.
"""
import json
import logging
from fractions import Fraction
from typing import Dict, Optional, Union

from pydantic import ValidationError

from ..schemas import Margins, WitnessDocument
from .assembler import PartitionWitness, side_margin
from .errors import ParseError
from .graph import Graph
from .parser import format_rational, parse_rational
from .rounding import RoundingCertificate

logger = logging.getLogger(__name__)


def _certificate_dict(cert: Optional[RoundingCertificate]) -> Optional[Dict[str, Union[str, int, None]]]:
    if cert is None:
        return None

    def rat(value: Optional[Fraction]) -> Optional[str]:
        return None if value is None else format_rational(value)

    return {
        "T": rat(cert.T),
        "xBound": rat(cert.x_bound),
        "yBound": rat(cert.y_bound),
        "aMargin": rat(cert.a_margin),
        "bMargin": rat(cert.b_margin),
        "aLocal": rat(cert.a_local),
        "bLocal": rat(cert.b_local),
        "pivot": cert.pivot,
        "chosen": cert.chosen,
        "f0": rat(cert.f0),
        "g0": rat(cert.g0),
        "f2Corner": rat(cert.f2_corner),
        "g2Corner": rat(cert.g2_corner),
    }


def witness_document(w: PartitionWitness, s, t) -> WitnessDocument:
    return WitnessDocument(
        s=format_rational(s),
        t=format_rational(t),
        A=sorted(w.A),
        B=sorted(w.B),
        path=w.path,
        peeled=sorted(w.peeled),
        margins=Margins(sSide=format_rational(w.s_side), tSide=format_rational(w.t_side)),
        certificate=_certificate_dict(w.certificate),
    )


def render_witness(w: PartitionWitness, s, t) -> str:
    doc = witness_document(w, s, t)
    return json.dumps(doc.model_dump(), sort_keys=True, indent=2) + "\n"


def parse_witness(text: str) -> WitnessDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"witness is not JSON: {exc.msg}", line=exc.lineno)
    try:
        return WitnessDocument.model_validate(data)
    except ValidationError as exc:
        raise ParseError(f"witness does not match the schema: {exc.error_count()} errors; "
                         f"{exc.errors()[0]['msg']}")


def to_witness(doc: WitnessDocument) -> PartitionWitness:
    """In-memory witness carrying the document's recorded sets and margins."""
    return PartitionWitness(
        A=frozenset(doc.A),
        B=frozenset(doc.B),
        path=doc.path,
        s_side=parse_rational(doc.margins.sSide),
        t_side=parse_rational(doc.margins.tSide),
        peeled=frozenset(doc.peeled),
    )


def margins_match(G: Graph, doc: WitnessDocument) -> bool:
    """True iff the recorded margins equal the ones recomputed from G."""
    if not (set(doc.A) | set(doc.B)) <= G.vertices:
        return False
    s, t = parse_rational(doc.s), parse_rational(doc.t)
    a_side = side_margin(G, doc.A, s)
    b_side = side_margin(G, doc.B, t)
    matched = (format_rational(a_side), format_rational(b_side)) == (doc.margins.sSide, doc.margins.tSide)
    if not matched:
        logger.warning(f"Recorded margins ({doc.margins.sSide}, {doc.margins.tSide}) differ from "
                       f"recomputed ({format_rational(a_side)}, {format_rational(b_side)})")
    return matched
