"""JSON interchange records for graphs and their face markings."""
import json
import logging
from typing import List, Optional, Tuple, Union

from pydantic import BaseModel, Field, field_validator, model_validator

from src.ribbon.graph import FaceMarking, RibbonGraph, validate, validate_marking

logger = logging.getLogger(__name__)


class GraphRecord(BaseModel):
    """One ribbon graph as permutation image arrays."""
    half_edges: int = Field(..., ge=0, description="Number of half-edges H")
    sigma0: List[int] = Field(..., description="Vertex rotation as an image array")
    sigma1: List[int] = Field(..., description="Edge involution as an image array")
    boundary: List[int] = Field(default_factory=list, description="Half-edges in B")
    marking: List[Tuple[int, int]] = Field(
        default_factory=list, description="(minimal half-edge of a face, color) pairs"
    )
    aut_order: Optional[int] = Field(None, ge=1, description="Order of the automorphism group")
    type: Optional[str] = Field(None, description="((g,b),n) label")

    class Config:
        populate_by_name = True

    @field_validator("boundary")
    def boundary_sorted(cls, v):
        """Store B sorted and without repeats."""
        if len(set(v)) != len(v):
            raise ValueError("boundary lists a half-edge twice")
        return sorted(v)

    @model_validator(mode="after")
    def lengths_match(self):
        """Both permutations must have H entries."""
        if len(self.sigma0) != self.half_edges or len(self.sigma1) != self.half_edges:
            raise ValueError(f"sigma0 and sigma1 must have {self.half_edges} entries")
        return self


def graph_to_interchange(
    graph: RibbonGraph,
    marking: Optional[FaceMarking] = None,
    aut_order: Optional[int] = None,
    type_label: Optional[str] = None,
) -> GraphRecord:
    return GraphRecord(
        half_edges=graph.h,
        sigma0=list(graph.sigma0),
        sigma1=list(graph.sigma1),
        boundary=sorted(graph.boundary),
        marking=list(marking.assignment) if marking else [],
        aut_order=aut_order,
        type=type_label,
    )


def graph_from_interchange(
    record: Union[GraphRecord, dict, str],
) -> Tuple[RibbonGraph, FaceMarking]:
    """Parse and validate a record; a missing marking colors faces in order.

    Raises:
        pydantic.ValidationError: malformed record.
        InvalidGraph: the permutations do not form a valid graph.
    """
    if isinstance(record, str):
        record = GraphRecord.model_validate(json.loads(record))
    elif isinstance(record, dict):
        record = GraphRecord.model_validate(record)
    graph = validate(RibbonGraph(tuple(record.sigma0), tuple(record.sigma1), frozenset(record.boundary)))
    if record.marking:
        marking = validate_marking(graph, FaceMarking.from_pairs(record.marking))
    else:
        marking = FaceMarking.sequential(graph)
    logger.debug(f"Read graph with {graph.h} half-edges and {marking.n} faces")
    return graph, marking


def records_to_json(records: List[GraphRecord]) -> str:
    return json.dumps([r.model_dump(exclude_none=True) for r in records], indent=2)
