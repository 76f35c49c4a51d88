import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from src.commands.graphs.schemas import AtlasEntry, AtlasRequest, EnumerateRequest
from src.commands.output import error_payload, to_csv
from src.enumeration.canonical import canonical_code
from src.enumeration.generate import MarkedGraphClass, generate_by_profile, generate_by_type
from src.errors import InvariantViolation
from src.events import emit_event
from src.ribbon.dot import to_dot
from src.ribbon.interchange import GraphRecord, graph_from_interchange, graph_to_interchange

logger = logging.getLogger(__name__)


class GraphService:
    """Enumeration and rendering of graph classes."""

    @staticmethod
    def enumerate_classes(
        request: EnumerateRequest, jobs: int = 1
    ) -> Tuple[Optional[List[MarkedGraphClass]], Optional[Dict[str, Any]]]:
        """Enumerate a type or a profile.

        Returns:
            tuple: (classes, errors)
                - classes: classes sorted by canonical code if successful, None otherwise
                - errors: error payload naming the failed invariant
        """
        try:
            t = request.to_type()
            if t is not None:
                classes = generate_by_type(t, jobs=jobs)
            else:
                classes = generate_by_profile(request.to_profile(), jobs=jobs)
            if request.verify:
                GraphService.verify_roundtrip(classes)
            return classes, None
        except Exception as e:
            logger.error(f"Enumeration failed: {str(e)}")
            return None, error_payload(e)

    @staticmethod
    def records(classes: List[MarkedGraphClass]) -> List[GraphRecord]:
        return [graph_to_interchange(c.graph, c.marking, c.aut_order, c.type.label()) for c in classes]

    @staticmethod
    def verify_roundtrip(classes: List[MarkedGraphClass]) -> None:
        """Every emitted record must re-validate to the same canonical code.

        Raises:
            InvariantViolation: a record reads back as a different class.
        """
        for c, record in zip(classes, GraphService.records(classes)):
            graph, marking = graph_from_interchange(record.model_dump_json())
            if canonical_code(graph, marking) != c.code:
                raise InvariantViolation("interchange-roundtrip", f"class of type {c.type} changed on reload")
        logger.info(f"Round-trip verified for {len(classes)} records")

    @staticmethod
    def render_csv(classes: List[MarkedGraphClass]) -> str:
        rows = []
        for k, c in enumerate(classes):
            rows.append(
                (
                    k,
                    c.type.label(),
                    c.aut_order,
                    c.graph.h,
                    " ".join(map(str, c.graph.sigma0)),
                    " ".join(map(str, c.graph.sigma1)),
                    " ".join(map(str, sorted(c.graph.boundary))),
                    " ".join(f"{r}:{color}" for r, color in c.marking.assignment),
                )
            )
        return to_csv(("index", "type", "aut_order", "half_edges", "sigma0", "sigma1", "boundary", "marking"), rows)

    @staticmethod
    def render_dot(classes: List[MarkedGraphClass]) -> str:
        return "".join(
            to_dot(c.graph, c.marking, f"{c.type.label()} #{k}", f"aut {c.aut_order}")
            for k, c in enumerate(classes)
        )

    @staticmethod
    def write_atlas(
        request: AtlasRequest, jobs: int = 1
    ) -> Tuple[Optional[List[AtlasEntry]], Optional[Dict[str, Any]]]:
        """Write one DOT file per class of a type.

        Returns:
            tuple: (entries, errors)
        """
        try:
            t = request.to_type()
            classes = generate_by_type(t, jobs=jobs)
            directory = Path(request.directory)
            directory.mkdir(parents=True, exist_ok=True)
            entries = []
            stem = f"type_{t.g}_{t.b}_{t.n}"
            for k, c in enumerate(classes):
                path = directory / f"{stem}_{k:03d}.dot"
                path.write_text(to_dot(c.graph, c.marking, f"{t.label()} #{k}", f"aut {c.aut_order}"))
                emit_event("atlas_written", {"path": str(path)})
                entries.append(AtlasEntry(path=str(path), aut_order=c.aut_order))
            logger.info(f"Atlas of {t}: {len(entries)} files in {directory}")
            return entries, None
        except Exception as e:
            logger.error(f"Atlas failed: {str(e)}")
            return None, error_payload(e)
