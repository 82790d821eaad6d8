"""Packaged example graphs and arrangements used by tests and the CLI."""

from __future__ import annotations

from importlib import resources

from .formats import GraphDocument, parse_arrangement, parse_graph
from .planar import SuspendedGraph
from .stretching import PseudosegmentArrangement

GRAPHS = (
    "k4",
    "octahedron",
    "prism3",
    "cube",
    "prism5",
    "wheel5",
    "twisted_quad",
    "twisted_pentagon",
)
ARRANGEMENTS = ("chain", "pinwheel")

# Graphs whose faces are all triangles (empty assignment gives the drawing)
TRIANGULATIONS = ("k4", "octahedron")

# Graphs used for the primal-dual contact pipeline
SCHNYDER_GRAPHS = ("k4", "prism3", "cube", "prism5", "wheel5")


def fixture_text(name: str) -> str:
    suffix = ".arr" if name in ARRANGEMENTS else ".graph"
    return (
        resources.files("trirep").joinpath("fixtures", name + suffix).read_text()
    )


def load_document(name: str) -> GraphDocument:
    return parse_graph(fixture_text(name))


def load_graph(name: str) -> SuspendedGraph:
    return load_document(name).to_suspended_graph()


def load_arrangement(name: str) -> PseudosegmentArrangement:
    return parse_arrangement(fixture_text(name))


def fixtures_directory() -> str:
    return str(resources.files("trirep").joinpath("fixtures"))
