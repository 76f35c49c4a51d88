import pytest

from src.events import emit_event, register_listener, remove_listener
from src.ribbon.types import GraphType
from src.amplitude import compute_W


def test_listener_sees_type_reduction():
    """compute_W publishes one type_reduced event per type."""
    seen = []
    register_listener("type_reduced", seen.append)
    try:
        compute_W(GraphType(0, 2, 1))
    finally:
        remove_listener("type_reduced", seen.append)
    assert seen == [{"type": "((0,2),1)", "classes": 1, "terms": 1}]


def test_removed_listener_is_silent():
    """After removal nothing is delivered."""
    seen = []
    register_listener("atlas_written", seen.append)
    remove_listener("atlas_written", seen.append)
    emit_event("atlas_written", {"path": "x.dot"})
    assert seen == []


def test_unknown_event_rejected():
    """Only pipeline events can be subscribed to."""
    with pytest.raises(ValueError):
        register_listener("item_created", print)
