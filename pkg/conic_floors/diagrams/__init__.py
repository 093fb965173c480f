from conic_floors.diagrams.base import (
    FloorDiagram,
    InternalEdge,
    MarkedDiagram,
    MarkedSource,
    Source,
)
from conic_floors.diagrams.canonical import canonical_class
from conic_floors.diagrams.marking import degenerate_marked, enumerate_marked
from conic_floors.diagrams.skeleton import enumerate_diagrams, enumerate_skeletons


__all__ = [
    "FloorDiagram",
    "InternalEdge",
    "MarkedDiagram",
    "MarkedSource",
    "Source",
    "canonical_class",
    "degenerate_marked",
    "enumerate_diagrams",
    "enumerate_marked",
    "enumerate_skeletons",
]
