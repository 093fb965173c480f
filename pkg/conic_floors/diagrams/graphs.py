"""networkx view of marked diagrams, used as an independent equivalence oracle.

Each internal edge becomes a node of its own, so the marked diagram turns into
a simple directed graph whose node attributes carry every decoration.
"""
from typing import Dict, List, Mapping, Optional, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from conic_floors.diagrams.base import MarkedDiagram
from conic_floors.schema import SourceKind


def to_networkx(
    marked: MarkedDiagram,
    relabel: Optional[Mapping[int, int]] = None,
    reclass: Optional[Mapping[int, int]] = None,
) -> nx.DiGraph:
    relabel = relabel or {}
    reclass = reclass or {}
    graph = nx.DiGraph()
    for v, (deg, label) in enumerate(zip(marked.floors, marked.floor_labels)):
        tag = ("floor", deg, relabel.get(label, label) if label is not None else None)
        graph.add_node(("F", v), tag=tag)
    for k, (e, label) in enumerate(zip(marked.edges, marked.edge_labels)):
        graph.add_node(("E", k), tag=("edge", e.weight, relabel.get(label, label)))
        graph.add_edge(("F", e.tail), ("E", k))
        graph.add_edge(("E", k), ("F", e.head))
    for k, s in enumerate(marked.sources):
        if s.kind == SourceKind.EXCEPTIONAL:
            tag = ("source", s.kind.value, s.weight, reclass.get(s.exceptional, s.exceptional))
        else:
            tag = ("source", s.kind.value, s.weight, relabel.get(s.label, s.label))
        graph.add_node(("S", k), tag=tag)
        graph.add_edge(("S", k), ("F", s.floor))
    return graph


def _same_tag(a: dict, b: dict) -> bool:
    return a["tag"] == b["tag"]


def are_equivalent(first: MarkedDiagram, second: MarkedDiagram) -> bool:
    return nx.is_isomorphic(to_networkx(first), to_networkx(second), node_match=_same_tag)


def reality_witnesses(
    marked: MarkedDiagram, relabel: Mapping[int, int], reclass: Mapping[int, int]
) -> List[Dict[str, Tuple[int, ...]]]:
    """Every isomorphism from (D, m) to (D, m o rho), as floor, edge and source maps"""
    matcher = DiGraphMatcher(
        to_networkx(marked), to_networkx(marked, relabel, reclass), node_match=_same_tag
    )
    witnesses = []
    for mapping in matcher.isomorphisms_iter():
        witnesses.append(
            {
                "floors": tuple(mapping[("F", v)][1] for v in range(len(marked.floors))),
                "edges": tuple(mapping[("E", k)][1] for k in range(len(marked.edges))),
                "sources": tuple(mapping[("S", k)][1] for k in range(len(marked.sources))),
            }
        )
    return witnesses
