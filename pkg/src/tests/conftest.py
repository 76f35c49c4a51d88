import logging

import pytest
from click.testing import CliRunner

from src.main import cli
from src.ribbon.graph import FaceMarking, RibbonGraph, validate

THETA_SIGMA0 = (1, 2, 0, 4, 5, 3)
DUMBBELL_SIGMA0 = (2, 3, 4, 5, 0, 1)
DUMBBELL_SIGMA1 = (2, 3, 0, 1, 5, 4)


def build(sigma0, sigma1, boundary=()):
    """Validated graph and its sequential marking."""
    graph = validate(RibbonGraph(tuple(sigma0), tuple(sigma1), frozenset(boundary)))
    return graph, FaceMarking.sequential(graph)


@pytest.fixture
def theta():
    """Planar theta graph: two trivalent vertices, three faces."""
    return build(THETA_SIGMA0, (3, 5, 4, 0, 2, 1))


@pytest.fixture
def genus_one_theta():
    """Theta graph on the torus: one face."""
    return build(THETA_SIGMA0, (3, 4, 5, 0, 1, 2))


@pytest.fixture
def boundary_dumbbell():
    """Dumbbell whose two loops are boundary cycles: type ((0,2),1)."""
    return build(DUMBBELL_SIGMA0, DUMBBELL_SIGMA1, (0, 1))


@pytest.fixture
def dumbbell_with_boundary_loop():
    """Dumbbell with one boundary loop: type ((0,1),2)."""
    return build(DUMBBELL_SIGMA0, DUMBBELL_SIGMA1, (0,))


@pytest.fixture
def chord_graph():
    """Theta graph with one boundary chord cycle."""
    return build(THETA_SIGMA0, (3, 5, 4, 0, 2, 1), (0, 5))


@pytest.fixture
def runner():
    """Click runner keeping stderr logs out of stdout."""
    return CliRunner(mix_stderr=False)


@pytest.fixture
def invoke(runner):
    """Invoke the CLI with arguments and return the result.

    The entry point reconfigures root logging onto the runner's stderr, so
    the previous handlers are restored afterwards.
    """
    root = logging.getLogger()

    def run(*args):
        handlers, level = list(root.handlers), root.level
        try:
            return runner.invoke(cli, [str(a) for a in args])
        finally:
            root.handlers[:] = handlers
            root.setLevel(level)

    return run
