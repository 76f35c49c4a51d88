"""Shared plumbing for the command layer: error payloads, exit codes, writing results."""
import csv
import io
import json
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, Optional, Sequence, Type, TypeVar

import click
from pydantic import BaseModel, ValidationError

from src.errors import (
    BoundExceeded,
    IncompleteTable,
    InvalidGraph,
    InvalidProfile,
    NonIntegralGenus,
    RibbonError,
    UnstableType,
)

logger = logging.getLogger(__name__)

M = TypeVar("M", bound=BaseModel)

# input problems: exit 2 like any other usage error
USAGE_ERRORS = (
    InvalidGraph,
    InvalidProfile,
    UnstableType,
    NonIntegralGenus,
    BoundExceeded,
    IncompleteTable,
)


def error_payload(exc: Exception) -> Dict[str, Any]:
    """Describe a failure the way services report it to routes."""
    if isinstance(exc, ValidationError):
        return {"error": "ValidationError", "invariant": "input-record", "detail": str(exc), "usage": True}
    if isinstance(exc, RibbonError):
        return {
            "error": type(exc).__name__,
            "invariant": exc.invariant,
            "detail": str(exc),
            "usage": isinstance(exc, USAGE_ERRORS),
        }
    return {"error": type(exc).__name__, "invariant": "internal", "detail": str(exc), "usage": False}


def fail(errors: Dict[str, Any]):
    """Turn a service error payload into the matching click exit status.

    Raises:
        click.UsageError: bad input or bounds (exit 2)
        click.ClickException: a failed invariant (exit 1)
    """
    if errors.get("usage"):
        logger.warning(f"Rejected input: {errors['detail']}")
        raise click.UsageError(errors["detail"])
    logger.error(f"Invariant {errors['invariant']} failed: {errors['detail']}")
    raise click.ClickException(f"invariant {errors['invariant']} failed: {errors['detail']}")


def build_request(model: Type[M], **fields) -> M:
    """Validate command options into a request schema; invalid input exits 2."""
    try:
        return model(**fields)
    except ValidationError as e:
        fail(error_payload(e))


def reject_dot(output_format: str):
    """DOT only describes graphs; tables and numbers are JSON or CSV."""
    if output_format == "dot":
        raise click.UsageError("--format dot is only available for enumerate")


def to_json(payload: Any) -> str:
    if isinstance(payload, BaseModel):
        return payload.model_dump_json(indent=2)
    if isinstance(payload, list) and payload and isinstance(payload[0], BaseModel):
        return json.dumps([p.model_dump(mode="json", exclude_none=True) for p in payload], indent=2)
    return json.dumps(payload, indent=2)


def to_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def write_output(text: str, out: Optional[str]):
    """Write to the --out path, or stdout when none is given."""
    if not text.endswith("\n"):
        text += "\n"
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
        logger.info(f"Wrote {len(text)} bytes to {path}")
    else:
        click.echo(text, nl=False)
