"""Unmarked floor diagrams up to isomorphism."""
from functools import lru_cache
from itertools import combinations_with_replacement, permutations, product
from typing import Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from conic_floors.combinatorics import compositions
from conic_floors.diagrams.base import FloorDiagram, InternalEdge, Source
from conic_floors.logger import logger
from conic_floors.schema import engine_stats


def _floor_permutations(floors: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    """Relabellings of the floors that keep every floor's degree"""
    doubles = [v for v, deg in enumerate(floors) if deg == 2]
    singles = [v for v, deg in enumerate(floors) if deg == 1]
    for pd in permutations(doubles):
        for ps in permutations(singles):
            image = [0] * len(floors)
            for old, new in zip(doubles, pd):
                image[old] = new
            for old, new in zip(singles, ps):
                image[old] = new
            yield tuple(image)


def diagram_key(diagram: FloorDiagram) -> tuple:
    """Isomorphism invariant of a diagram, sources and their kinds included"""
    best = None
    for image in _floor_permutations(diagram.floors):
        edges = tuple(sorted((image[e.tail], image[e.head], e.weight) for e in diagram.edges))
        sources = [()] * len(diagram.floors)
        for v in range(len(diagram.floors)):
            sources[image[v]] = diagram.source_types(v)
        candidate = (edges, tuple(sources))
        if best is None or candidate < best:
            best = candidate
    return (diagram.floors, best)


def _connected(n_floors: int, pairs: Sequence[Tuple[int, int]]) -> bool:
    graph = nx.Graph()
    graph.add_nodes_from(range(n_floors))
    graph.add_edges_from(pairs)
    return nx.is_connected(graph)


def _weightings(floors: Tuple[int, ...], pairs: Sequence[Tuple[int, int]]) -> Iterator[Tuple[int, ...]]:
    """Edge weights with in(v) <= 2 deg(v) + out(v), assigned from the last floor down"""
    weights = [0] * len(pairs)

    def assign(v: int) -> Iterator[Tuple[int, ...]]:
        if v < 0:
            yield tuple(weights)
            return
        incoming = [k for k, (_, head) in enumerate(pairs) if head == v]
        budget = 2 * floors[v] + sum(weights[k] for k, (tail, _) in enumerate(pairs) if tail == v)
        for total in range(len(incoming), budget + 1):
            for combo in compositions(total, len(incoming), minimum=1):
                for k, w in zip(incoming, combo):
                    weights[k] = w
                yield from assign(v - 1)

    yield from assign(len(floors) - 1)


@lru_cache(maxsize=64)
def enumerate_skeletons(degree: int, genus: int) -> Tuple[FloorDiagram, ...]:
    """Floors and weighted internal edges, without sources, up to isomorphism.

    Degree-2 floors come first. Internal edges go from a degree-2 floor to a
    floor of larger index, which fixes one topological order per diagram.
    """
    found = {}
    for f2 in range(degree // 2 + 1):
        f1 = degree - 2 * f2
        floors = (2,) * f2 + (1,) * f1
        n_edges = len(floors) - 1 + genus
        pairs = [(i, j) for i in range(f2) for j in range(i + 1, len(floors))]
        if n_edges < 0 or (n_edges and not pairs):
            continue
        for chosen in combinations_with_replacement(pairs, n_edges):
            if not _connected(len(floors), chosen):
                continue
            for weights in _weightings(floors, chosen):
                edges = tuple(
                    InternalEdge(tail=t, head=h, weight=w) for (t, h), w in zip(chosen, weights)
                )
                skeleton = FloorDiagram(floors=floors, edges=edges)
                found.setdefault(diagram_key(skeleton), skeleton)
    logger.debug(f"{len(found)} skeleton(s) of degree {degree}, genus {genus}")
    return tuple(found[k] for k in sorted(found))


def _partitions(total: int, largest: int) -> Iterator[Tuple[int, ...]]:
    """Partitions of ``total`` into parts <= largest, non-increasing"""
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def enumerate_diagrams(
    degree: int, genus: int, max_source_weight: Optional[int] = None
) -> List[FloorDiagram]:
    """All floor diagrams of the given degree and genus, sources included"""
    found = {}
    for skeleton in enumerate_skeletons(degree, genus):
        engine_stats.diagrams += 1
        budgets = [skeleton.source_budget(v) for v in range(len(skeleton.floors))]
        choices = [list(_partitions(b, max_source_weight or b)) for b in budgets]
        for split in product(*choices):
            sources = tuple(
                Source(floor=v, weight=w) for v, parts in enumerate(split) for w in parts
            )
            diagram = FloorDiagram(floors=skeleton.floors, edges=skeleton.edges, sources=sources)
            found.setdefault(diagram_key(diagram), diagram)
    return [found[k] for k in sorted(found)]
