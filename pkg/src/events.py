import logging
from typing import Any, Callable, Dict

from pyee import EventEmitter

logger = logging.getLogger(__name__)

# every event the pipeline emits, in pipeline order
PIPELINE_EVENTS = (
    "maps_generated",
    "classes_enumerated",
    "type_reduced",
    "free_energy_assembled",
    "profile_evaluated",
    "profile_compared",
    "volume_computed",
    "laplace_sampled",
    "atlas_written",
)

# listeners live in the process that registered them; pool workers emit into an empty bus
emitter = EventEmitter()


def init_event_listeners():
    """Attach the progress listeners. Called by the CLI group before a subcommand runs."""
    logger.debug("Initializing event listeners")
    from src.commands.events import register_progress_events

    register_progress_events()


def emit_event(event_name: str, data: Dict[str, Any]):
    """Publish a pipeline event.

    Args:
        event_name: One of PIPELINE_EVENTS
        data: Plain values describing the step (labels, counts)
    """
    if not emitter.listeners(event_name):
        return
    logger.debug(f"Event {event_name}: {data}")
    emitter.emit(event_name, data)


def register_listener(event_name: str, listener: Callable):
    """Subscribe to a pipeline event.

    Raises:
        ValueError: the name is not a pipeline event
    """
    if event_name not in PIPELINE_EVENTS:
        raise ValueError(f"unknown event {event_name}")
    logger.debug(f"Listening to {event_name} with {getattr(listener, '__name__', listener)}")
    emitter.on(event_name, listener)


def remove_listener(event_name: str, listener: Callable):
    """Unsubscribe a listener added with register_listener."""
    logger.debug(f"Removing listener from {event_name}")
    emitter.remove_listener(event_name, listener)
