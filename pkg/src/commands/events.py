import logging
from collections import Counter
from typing import Any, Dict

from src.events import PIPELINE_EVENTS, register_listener

logger = logging.getLogger(__name__)


class ProgressCounters:
    """Counts events per name; the only mutable state of a run."""

    def __init__(self):
        self.counts: Counter = Counter()

    def record(self, event_name: str, data: Dict[str, Any]):
        self.counts[event_name] += 1
        logger.debug(f"{event_name} #{self.counts[event_name]}: {data}")

    def summary(self) -> Dict[str, int]:
        return dict(sorted(self.counts.items()))


progress = ProgressCounters()
_registered = False


def register_progress_events():
    """Register the progress listeners for every event the pipeline emits."""
    global _registered
    if _registered:
        return
    _registered = True
    logger.debug("Registering progress event listeners")
    for name in PIPELINE_EVENTS:
        register_listener(name, _listener(name))
    register_listener("type_reduced", on_type_reduced)
    register_listener("atlas_written", on_atlas_written)


def _listener(name: str):
    def listener(data: Dict[str, Any]):
        progress.record(name, data)

    return listener


def on_type_reduced(data: Dict[str, Any]):
    """Log each reduced W table.

    Args:
        data: Event data including type, classes and terms
    """
    logger.info(f"W{data.get('type')}: {data.get('classes')} classes, {data.get('terms')} Laurent terms")


def on_atlas_written(data: Dict[str, Any]):
    """Log each DOT file written.

    Args:
        data: Event data including path
    """
    logger.info(f"Atlas file written: {data.get('path')}")
