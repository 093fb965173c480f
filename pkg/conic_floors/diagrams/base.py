"""Floor diagrams and their markings.

Floors are numbered 0..F-1. A floor of degree 2 has divergence 4 and a floor
of degree 1 divergence 2; degree-1 floors are sinks, so every internal edge
starts at a degree-2 floor. Sources are stored per floor by the weight of the
edge joining them to it.
"""
from collections import Counter
from typing import Dict, FrozenSet, Iterator, Optional, Tuple

import networkx as nx
from pydantic import BaseModel

from conic_floors.homology import MultiSeq
from conic_floors.schema import ElementKind, SourceKind


class InternalEdge(BaseModel, frozen=True):
    tail: int
    head: int
    weight: int


class Source(BaseModel, frozen=True):
    floor: int
    weight: int
    kind: Optional[SourceKind] = None


class FloorDiagram(BaseModel, frozen=True):
    floors: Tuple[int, ...]
    edges: Tuple[InternalEdge, ...]
    sources: Tuple[Source, ...] = ()

    @property
    def degree(self) -> int:
        return sum(self.floors)

    @property
    def genus(self) -> int:
        return len(self.edges) - len(self.floors) + 1

    def incoming(self, v: int) -> int:
        return sum(e.weight for e in self.edges if e.head == v)

    def outgoing(self, v: int) -> int:
        return sum(e.weight for e in self.edges if e.tail == v)

    def source_budget(self, v: int) -> int:
        """Total weight the sources of floor v must supply"""
        return 2 * self.floors[v] + self.outgoing(v) - self.incoming(v)

    def source_weights(self, v: int) -> Tuple[int, ...]:
        return tuple(sorted(s.weight for s in self.sources if s.floor == v))

    def source_types(self, v: int) -> Tuple[Tuple[str, int], ...]:
        """(kind, weight) of the sources at v; the kind is empty when unknown"""
        return tuple(
            sorted((s.kind.value if s.kind else "", s.weight) for s in self.sources if s.floor == v)
        )

    def to_networkx(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        for v, deg in enumerate(self.floors):
            graph.add_node(v, degree=deg)
        for e in self.edges:
            graph.add_edge(e.tail, e.head, weight=e.weight)
        return graph

    def is_valid(self) -> bool:
        graph = self.to_networkx()
        if not self.floors or not nx.is_weakly_connected(graph):
            return False
        if not nx.is_directed_acyclic_graph(graph):
            return False
        if any(self.floors[e.tail] != 2 or e.weight < 1 for e in self.edges):
            return False
        return all(
            self.source_budget(v) == sum(self.source_weights(v))
            for v in range(len(self.floors))
        )


class MarkedSource(BaseModel, frozen=True):
    floor: int
    weight: int
    kind: SourceKind
    label: Optional[int] = None
    exceptional: Optional[int] = None


class MarkedDiagram(BaseModel, frozen=True):
    """A floor diagram together with a d-marking.

    ``floor_labels`` is None exactly on degree-1 floors. Every internal edge
    carries a label; alpha and beta sources carry their label, and a source of
    kind EXCEPTIONAL records the class index i of the set A_i it comes from.
    """

    floors: Tuple[int, ...]
    floor_labels: Tuple[Optional[int], ...]
    edges: Tuple[InternalEdge, ...]
    edge_labels: Tuple[int, ...]
    sources: Tuple[MarkedSource, ...]
    n: int

    @property
    def diagram(self) -> FloorDiagram:
        sources = sorted(
            (Source(floor=s.floor, weight=s.weight, kind=s.kind) for s in self.sources),
            key=lambda s: (s.floor, s.kind.value, s.weight),
        )
        return FloorDiagram(floors=self.floors, edges=self.edges, sources=tuple(sources))

    @property
    def genus(self) -> int:
        return len(self.edges) - len(self.floors) + 1

    @property
    def zeta(self) -> int:
        labelled = sum(1 for x in self.floor_labels if x is not None)
        return labelled + len(self.edges) + sum(1 for s in self.sources if s.label is not None)

    @property
    def alpha(self) -> MultiSeq:
        return MultiSeq.from_weights(s.weight for s in self.sources if s.kind == SourceKind.ALPHA)

    @property
    def beta(self) -> MultiSeq:
        return MultiSeq.from_weights(s.weight for s in self.sources if s.kind == SourceKind.BETA)

    def exceptional_set(self, v: int) -> FrozenSet[int]:
        return frozenset(
            s.exceptional
            for s in self.sources
            if s.kind == SourceKind.EXCEPTIONAL and s.floor == v
        )

    def exceptional_counts(self) -> Tuple[int, ...]:
        tally = Counter(s.exceptional for s in self.sources if s.kind == SourceKind.EXCEPTIONAL)
        return tuple(tally.get(i, 0) for i in range(1, self.n + 1))

    def labelled_elements(self) -> Dict[int, Tuple[ElementKind, int]]:
        """label -> (kind, index); the index is a floor, edge or source position"""
        elements: Dict[int, Tuple[ElementKind, int]] = {}
        for v, label in enumerate(self.floor_labels):
            if label is not None:
                elements[label] = (ElementKind.FLOOR, v)
        for k, label in enumerate(self.edge_labels):
            elements[label] = (ElementKind.EDGE, k)
        for k, s in enumerate(self.sources):
            if s.kind == SourceKind.ALPHA:
                elements[s.label] = (ElementKind.ALPHA, k)
            elif s.kind == SourceKind.BETA:
                elements[s.label] = (ElementKind.BETA, k)
        return elements

    def incident(self, first: Tuple[ElementKind, int], second: Tuple[ElementKind, int]) -> bool:
        """Whether a floor and an edge (internal or beta) meet"""
        pair = {first[0], second[0]}
        if ElementKind.FLOOR not in pair or len(pair) == 1:
            return False
        floor, other = (first, second) if first[0] == ElementKind.FLOOR else (second, first)
        v = floor[1]
        if other[0] == ElementKind.EDGE:
            e = self.edges[other[1]]
            return v in (e.tail, e.head)
        if other[0] == ElementKind.BETA:
            return self.sources[other[1]].floor == v
        return False

    def edges_at(self, v: int) -> Iterator[int]:
        for k, e in enumerate(self.edges):
            if v in (e.tail, e.head):
                yield k

    def sources_at(self, v: int) -> Iterator[int]:
        for k, s in enumerate(self.sources):
            if s.floor == v:
                yield k
