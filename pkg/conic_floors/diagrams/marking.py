"""d-markings of floor diagrams.

A marking is built in two stages. First the A0 labels are placed: alpha
sources, beta edges, degree-2 floors and internal edges, increasing along
the diagram. A diagram labelled that way is rigid, so the second stage, which
spreads the sets A_i over the floors, never produces two equivalent results.
"""
from collections import Counter
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from conic_floors.combinatorics import sub_multisets
from conic_floors.diagrams.base import FloorDiagram, MarkedDiagram, MarkedSource
from conic_floors.diagrams.canonical import canonical_class
from conic_floors.diagrams.skeleton import enumerate_skeletons
from conic_floors.exceptions import DomainError, TypeMismatchError
from conic_floors.homology import MultiSeq, SurfaceClass, pair_E
from conic_floors.logger import logger
from conic_floors.schema import SourceKind, SurfaceKind, engine_stats


def _check_query(d: SurfaceClass, alpha: MultiSeq, beta: MultiSeq) -> None:
    if d.model.kind != SurfaceKind.TILDE_XN:
        raise DomainError(f"floor diagrams are defined on tX_n, not on {d.model}")
    if alpha.weighted + beta.weighted != pair_E(d):
        raise TypeMismatchError(
            f"I(alpha) + I(beta) = {alpha.weighted + beta.weighted} but d.E = {pair_E(d)}"
        )


def _distributions(
    skeleton: FloorDiagram, alpha: Counter, beta: Counter, exceptional: int, per_floor: int
) -> Iterator[Tuple[Tuple[Counter, Counter, int], ...]]:
    """Ways to split alpha, beta and the A-sources over the floors"""
    budgets = [skeleton.source_budget(v) for v in range(len(skeleton.floors))]

    def split(v: int, alpha_left: Counter, beta_left: Counter, exc_left: int):
        if v == len(budgets):
            if not +alpha_left and not +beta_left and exc_left == 0:
                yield ()
            return
        budget = budgets[v]
        for a_part in sub_multisets(alpha_left, budget):
            a_weight = sum(w * c for w, c in a_part.items())
            for b_part in sub_multisets(beta_left, budget - a_weight):
                slots = budget - a_weight - sum(w * c for w, c in b_part.items())
                if slots > per_floor or slots > exc_left:
                    continue
                for rest in split(v + 1, alpha_left - a_part, beta_left - b_part, exc_left - slots):
                    yield ((a_part, b_part, slots),) + rest

    yield from split(0, alpha, beta, exceptional)


def _alpha_labellings(
    placement: Sequence[Counter], order: Sequence[int]
) -> Iterator[List[Tuple[int, int, int]]]:
    """(floor, weight, label) lists placing labels 1..|alpha| on the alpha sources"""
    per_weight = []
    for w in sorted(set(order)):
        labels = [k + 1 for k, x in enumerate(order) if x == w]
        counts = [(v, part.get(w, 0)) for v, part in enumerate(placement) if part.get(w, 0)]
        per_weight.append((w, labels, counts))

    def place(w: int, labels: List[int], counts) -> Iterator[List[Tuple[int, int, int]]]:
        if not counts:
            yield []
            return
        (v, c), rest = counts[0], counts[1:]
        for chosen in combinations(labels, c):
            left = [x for x in labels if x not in chosen]
            for tail in place(w, left, rest):
                yield [(v, w, x) for x in chosen] + tail

    for parts in product(*(list(place(w, labels, counts)) for w, labels, counts in per_weight)):
        yield [item for part in parts for item in part]


def _linear_extensions(
    skeleton: FloorDiagram, beta_sources: Sequence[Tuple[int, int]], first_label: int
) -> Iterator[Dict[tuple, int]]:
    """Increasing labellings of beta edges, degree-2 floors and internal edges"""
    elements: List[tuple] = [("F", v) for v, deg in enumerate(skeleton.floors) if deg == 2]
    elements += [("E", k) for k in range(len(skeleton.edges))]
    elements += [("B", j) for j in range(len(beta_sources))]
    before: Dict[tuple, set] = {x: set() for x in elements}
    for k, e in enumerate(skeleton.edges):
        before[("E", k)].add(("F", e.tail))
        if skeleton.floors[e.head] == 2:
            before[("F", e.head)].add(("E", k))
    for j, (v, _) in enumerate(beta_sources):
        if skeleton.floors[v] == 2:
            before[("F", v)].add(("B", j))
    # interchangeable elements are labelled in a fixed order
    group_of: Dict[tuple, tuple] = {}
    for k, e in enumerate(skeleton.edges):
        group_of[("E", k)] = ("E", e.tail, e.head, e.weight)
    for j, (v, w) in enumerate(beta_sources):
        group_of[("B", j)] = ("B", v, w)
    for x in elements:
        earlier = [y for y in elements if y in group_of and group_of.get(y) == group_of.get(x) and y < x]
        if earlier:
            before[x].add(max(earlier))

    labels: Dict[tuple, int] = {}

    def extend(next_label: int) -> Iterator[Dict[tuple, int]]:
        if len(labels) == len(elements):
            yield dict(labels)
            return
        for x in elements:
            if x not in labels and before[x].issubset(labels):
                labels[x] = next_label
                yield from extend(next_label + 1)
                del labels[x]

    yield from extend(first_label)


def _shapes_of(
    skeleton: FloorDiagram, d: SurfaceClass, alpha: MultiSeq, beta: MultiSeq, order: Tuple[int, ...]
) -> Iterator[MarkedDiagram]:
    classes = sum(1 for m in d.mu if m > 0)
    alpha_tally = Counter(alpha.weights())
    beta_tally = Counter(beta.weights())
    for distribution in _distributions(skeleton, alpha_tally, beta_tally, sum(d.mu), classes):
        beta_sources = [
            (v, w) for v, (_, b_part, _) in enumerate(distribution) for w in sorted(b_part.elements())
        ]
        exceptional = [
            MarkedSource(floor=v, weight=1, kind=SourceKind.EXCEPTIONAL)
            for v, (_, _, slots) in enumerate(distribution)
            for _ in range(slots)
        ]
        for alpha_items in _alpha_labellings([a for a, _, _ in distribution], order):
            alpha_sources = [
                MarkedSource(floor=v, weight=w, kind=SourceKind.ALPHA, label=x)
                for v, w, x in sorted(alpha_items, key=lambda t: t[2])
            ]
            for labels in _linear_extensions(skeleton, beta_sources, alpha.size + 1):
                floor_labels = tuple(
                    labels.get(("F", v)) if deg == 2 else None
                    for v, deg in enumerate(skeleton.floors)
                )
                edge_labels = tuple(labels[("E", k)] for k in range(len(skeleton.edges)))
                beta_marked = [
                    MarkedSource(floor=v, weight=w, kind=SourceKind.BETA, label=labels[("B", j)])
                    for j, (v, w) in enumerate(beta_sources)
                ]
                yield MarkedDiagram(
                    floors=skeleton.floors,
                    floor_labels=floor_labels,
                    edges=skeleton.edges,
                    edge_labels=edge_labels,
                    sources=tuple(alpha_sources + beta_marked + exceptional),
                    n=d.model.n,
                )


def _resolve_order(alpha: MultiSeq, alpha_order: Optional[Sequence[int]]) -> Tuple[int, ...]:
    if alpha_order is None:
        return alpha.weights()
    order = tuple(alpha_order)
    if sorted(order) != list(alpha.weights()):
        raise DomainError(f"alpha_order {order} is not an ordering of alpha = {alpha}")
    return order


@lru_cache(maxsize=512)
def _shapes(
    d: SurfaceClass, genus: int, alpha: MultiSeq, beta: MultiSeq, order: Tuple[int, ...]
) -> Tuple[MarkedDiagram, ...]:
    found: Dict[bytes, MarkedDiagram] = {}
    for skeleton in enumerate_skeletons(d.degree, genus):
        engine_stats.diagrams += 1
        for shape in _shapes_of(skeleton, d, alpha, beta, order):
            found.setdefault(canonical_class(shape), shape)
    logger.debug(f"{len(found)} A0-labelled diagram(s) for {d}, genus {genus}")
    return tuple(found[k] for k in sorted(found))


def enumerate_shapes(
    d: SurfaceClass,
    genus: int,
    alpha: MultiSeq,
    beta: MultiSeq,
    *,
    alpha_order: Optional[Sequence[int]] = None,
) -> Tuple[MarkedDiagram, ...]:
    """Marked diagrams whose A-sources are placed but not yet assigned a class"""
    _check_query(d, alpha, beta)
    if d.degree < 1:
        raise DomainError("floor diagrams need d.D >= 1")
    if any(m < 0 for m in d.mu):
        return ()
    if d.degree - 1 + genus + alpha.size + beta.size <= 0:
        return ()
    return _shapes(d, genus, alpha, beta, _resolve_order(alpha, alpha_order))


def _assign_classes(shape: MarkedDiagram, mu: Tuple[int, ...]) -> Iterator[MarkedDiagram]:
    slots = Counter(s.floor for s in shape.sources if s.kind == SourceKind.EXCEPTIONAL)
    fixed = [s for s in shape.sources if s.kind != SourceKind.EXCEPTIONAL]
    floors = sorted(slots)

    def place(i: int, left: Counter) -> Iterator[List[Tuple[int, int]]]:
        if i > len(mu):
            if not +left:
                yield []
            return
        open_floors = [v for v in floors if left[v] > 0]
        for chosen in combinations(open_floors, mu[i - 1]):
            for rest in place(i + 1, left - Counter(chosen)):
                yield [(v, i) for v in chosen] + rest

    for assignment in place(1, slots):
        exceptional = [
            MarkedSource(floor=v, weight=1, kind=SourceKind.EXCEPTIONAL, exceptional=i)
            for v, i in sorted(assignment)
        ]
        yield shape.model_copy(update={"sources": tuple(fixed + exceptional)})


@lru_cache(maxsize=512)
def _marked(
    d: SurfaceClass, genus: int, alpha: MultiSeq, beta: MultiSeq, order: Tuple[int, ...]
) -> Tuple[MarkedDiagram, ...]:
    result = []
    for shape in _shapes(d, genus, alpha, beta, order):
        result.extend(_assign_classes(shape, d.mu))
    engine_stats.markings += len(result)
    return tuple(result)


def enumerate_marked(
    d: SurfaceClass,
    genus: int,
    alpha: MultiSeq,
    beta: MultiSeq,
    *,
    alpha_order: Optional[Sequence[int]] = None,
) -> List[MarkedDiagram]:
    """All d-marked floor diagrams of genus g and type (alpha, beta), up to equivalence"""
    _check_query(d, alpha, beta)
    if d.degree < 1:
        raise DomainError("floor diagrams need d.D >= 1")
    if any(m < 0 for m in d.mu):
        return []
    if d.degree - 1 + genus + alpha.size + beta.size <= 0:
        return []
    return list(_marked(d, genus, alpha, beta, _resolve_order(alpha, alpha_order)))


def degenerate_marked(d: SurfaceClass) -> MarkedDiagram:
    """The marked diagram of D - E_i - E_j: one degree-1 floor fed by A_i and A_j"""
    support = [i for i, m in enumerate(d.mu, start=1) if m]
    if d.degree != 1 or len(support) != 2 or any(d.e(i) != 1 for i in support):
        raise DomainError(f"{d} is not of the form D - E_i - E_j")
    sources = tuple(
        MarkedSource(floor=0, weight=1, kind=SourceKind.EXCEPTIONAL, exceptional=i)
        for i in support
    )
    return MarkedDiagram(
        floors=(1,),
        floor_labels=(None,),
        edges=(),
        edge_labels=(),
        sources=sources,
        n=d.model.n,
    )

