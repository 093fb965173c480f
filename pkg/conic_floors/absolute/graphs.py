"""Decorated graphs describing how curves of X_7 and X_8 break.

Under the degeneration of X_7 (resp. X_8) each limit curve has pieces on
tX_8 (resp. tX_{8,1}), recorded as vertices with a class, a genus and the
contact orders beta with E, and lines on the other component, recorded as
edges joining the two pieces they meet on E. A term of the absolute sum is
one such graph up to isomorphism.
"""
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import factorial
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher
from pydantic import BaseModel, Field

from conic_floors.combinatorics import binomial, compositions, multinomial_choose, pairings
from conic_floors.config import config
from conic_floors.exceptions import DomainError
from conic_floors.homology import (
    MultiSeq,
    SurfaceClass,
    SurfaceModel,
    arithmetic_genus,
    pair_E,
    pair_c1,
)
from conic_floors.logger import logger
from conic_floors.schema import SurfaceKind


class GraphVertex(BaseModel, frozen=True):
    d: SurfaceClass
    genus: int = Field(0, ge=0)
    beta: MultiSeq = MultiSeq()

    @property
    def beta1(self) -> int:
        return self.beta[1]

    @property
    def beta2(self) -> int:
        return self.beta[2]

    @property
    def points(self) -> int:
        """|U_v|; a piece through the point blown up off the conic needs one condition less"""
        off_conic = self.d.mu[8] if self.d.model.kind == SurfaceKind.TILDE_X81 else 0
        return self.d.degree - 1 + self.genus + self.beta.size - off_conic

    def twisted(self, swap: Dict[int, int]) -> "GraphVertex":
        mu = tuple(self.d.mu[swap.get(i, i) - 1] for i in range(1, self.d.model.n + 1))
        d = SurfaceClass(degree=self.d.degree, mu=mu, model=self.d.model)
        return self.model_copy(update={"d": d})

    def sort_key(self) -> tuple:
        return (-self.d.degree, self.d.mu, self.genus, self.beta.counts)

    def __str__(self) -> str:
        text = f"{self.d}|b={self.beta}"
        return text + (f"|g={self.genus}" if self.genus else "")


class GraphTerm(BaseModel, frozen=True):
    """One graph of the sum for a fixed k; ``adjacency[v][v]`` is twice the loops at v"""

    k: int
    vertices: Tuple[GraphVertex, ...]
    adjacency: Tuple[Tuple[int, ...], ...]
    points: int

    @property
    def size(self) -> int:
        return len(self.vertices)

    def lam(self, v: int, w: int) -> int:
        return self.adjacency[v][w]

    def valence(self, v: int) -> int:
        return sum(self.adjacency[v])

    @property
    def edge_count(self) -> int:
        off = sum(self.adjacency[v][w] for v in range(self.size) for w in range(v + 1, self.size))
        return off + sum(self.adjacency[v][v] // 2 for v in range(self.size))

    @property
    def beta(self) -> MultiSeq:
        total = MultiSeq()
        for vertex in self.vertices:
            total = total + vertex.beta
        return total

    @property
    def d(self) -> SurfaceClass:
        total = self.vertices[0].d
        for vertex in self.vertices[1:]:
            total = total + vertex.d
        return total

    @property
    def k_circ_circ(self) -> int:
        """Lines of the other component through no vertex of the graph"""
        return self.k - self.beta[2] - self.edge_count - sum(v.d.e(7) for v in self.vertices)

    @property
    def genus(self) -> int:
        return sum(v.genus for v in self.vertices) + self.edge_count - self.size + 1

    def to_networkx(self, twist: Optional[Dict[int, int]] = None) -> nx.Graph:
        graph = nx.Graph()
        for v, vertex in enumerate(self.vertices):
            atom = vertex.twisted(twist) if twist else vertex
            graph.add_node(v, atom=atom, loops=self.adjacency[v][v])
        for v in range(self.size):
            for w in range(v + 1, self.size):
                if self.adjacency[v][w]:
                    graph.add_edge(v, w, count=self.adjacency[v][w])
        return graph

    def automorphisms(self) -> int:
        graph = self.to_networkx()
        matcher = GraphMatcher(graph, graph, node_match=_same_node, edge_match=_same_edge)
        return sum(1 for _ in matcher.isomorphisms_iter())

    def partition_count(self) -> int:
        """Ways to split the point labels into the sets U_v"""
        return multinomial_choose(self.points, [v.points for v in self.vertices])

    def label(self) -> str:
        edges = [
            f"{v}-{w}" + (f"x{self.adjacency[v][w]}" if self.adjacency[v][w] > 1 else "")
            for v in range(self.size)
            for w in range(v, self.size)
            if self.adjacency[v][w] and v != w
        ]
        loops = [f"{v}o{self.adjacency[v][v] // 2}" for v in range(self.size) if self.adjacency[v][v]]
        vertices = " ".join(f"v{v}[{vertex}]" for v, vertex in enumerate(self.vertices))
        return f"k={self.k} {vertices} E({','.join(edges + loops)})"


def _same_node(a: dict, b: dict) -> bool:
    return a["atom"] == b["atom"] and a["loops"] == b["loops"]


def _same_edge(a: dict, b: dict) -> bool:
    return a["count"] == b["count"]


def vertex_model(target: SurfaceClass) -> SurfaceModel:
    if target.model == SurfaceModel.absolute(7):
        return SurfaceModel.tilde(8)
    if target.model == SurfaceModel.absolute(8):
        return SurfaceModel.tilde81()
    raise DomainError(f"graph sums are defined for X7 and X8, not {target.model}")


def _partitions(total: int, parts: int, largest: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Non-increasing tuples of ``parts`` positive integers summing to ``total``"""
    if parts == 0:
        if total == 0:
            yield ()
        return
    largest = total if largest is None else largest
    for first in range(min(total - parts + 1, largest), 0, -1):
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


def _plausible(d: SurfaceClass) -> bool:
    """Necessary conditions for an irreducible curve of class d to meet E properly"""
    a, mu = d.degree, d.mu
    if pair_E(d) < 0:
        return False
    off = d.model.kind == SurfaceKind.TILDE_X81
    if off and a >= 3 and mu[8] == a and not any(mu[:8]):
        return False
    others = range(9) if off else range(8)
    for i in range(8):
        for j in others:
            if j <= i:
                continue
            if mu[i] + mu[j] > a:
                line = a == 1 and mu[i] == mu[j] == 1 and sum(mu) == 2
                if not line:
                    return False
    return True


def _positive_classes(
    model: SurfaceModel,
    degrees: Tuple[int, ...],
    sums: Sequence[int],
    mu7_cap: int,
    mu78_cap: int,
    mu9: int,
) -> Iterator[Tuple[SurfaceClass, ...]]:
    off = model.kind == SurfaceKind.TILDE_X81

    def extend(idx: int, left: Tuple[int, ...], left7: int, left78: int, left9: int, previous):
        if idx == len(degrees):
            if not any(left) and not left9:
                yield ()
            return
        a = degrees[idx]
        last = idx == len(degrees) - 1
        if last:
            if any(x > a for x in left) or left9 > a:
                return
            heads = [left]
            nines = [left9]
        else:
            heads = product(*(range(min(a, x) + 1) for x in left))
            nines = range(min(a, left9) + 1)
        for head in heads:
            for mu7 in range(min(a, left7) + 1):
                for mu8 in range(min(a, left78 - mu7) + 1):
                    for nine in nines if off else [0]:
                        mu = head + (mu7, mu8) + ((nine,) if off else ())
                        if previous is not None and previous[0] == a and mu > previous[1]:
                            continue
                        d = SurfaceClass(degree=a, mu=mu, model=model)
                        if not _plausible(d):
                            continue
                        rest = tuple(x - h for x, h in zip(left, head))
                        for tail in extend(
                            idx + 1, rest, left7 - mu7, left78 - mu7 - mu8, left9 - nine, (a, mu)
                        ):
                            yield (d,) + tail

    yield from extend(0, tuple(sums), mu7_cap, mu78_cap, mu9, None)


def _class_multisets(
    model: SurfaceModel, total: int, sums: Sequence[int], k: int, m7: int, m9: int, limit: int
) -> Iterator[Tuple[SurfaceClass, ...]]:
    for size in range(1, limit + 1):
        for positives in range(size + 1):
            for degrees in _partitions(total, positives):
                for leaves in combinations_with_replacement(range(1, 7), size - positives):
                    shifted = list(sums)
                    for i in leaves:
                        shifted[i - 1] += 1
                    if min(shifted) < 0:
                        continue
                    leaf_classes = tuple(SurfaceClass.exceptional(model, i) for i in leaves)
                    for body in _positive_classes(model, degrees, shifted, k, m7, m9):
                        yield body + leaf_classes


def _beta_options(d: SurfaceClass) -> List[MultiSeq]:
    if d.exceptional_multiple() is not None:
        return [MultiSeq.unit(1)]
    e = pair_E(d)
    return [MultiSeq(counts=(e - 2 * b2, b2)) for b2 in range(e // 2 + 1)]


def _genus_splits(classes: Sequence[SurfaceClass], total: int) -> Iterator[Tuple[int, ...]]:
    caps = [
        0 if d.exceptional_multiple() is not None else max(arithmetic_genus(d), 0) for d in classes
    ]
    for split in compositions(total, len(classes)):
        if all(g <= c for g, c in zip(split, caps)):
            yield split


def _adjacencies(
    vertices: Tuple[GraphVertex, ...], edges: int, simple: bool
) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """Connected multigraphs with ``edges`` edges, valence at most beta_{v,1}, up to isomorphism"""
    size = len(vertices)
    slots = [(v, w) for v in range(size) for w in range(v, size) if not (simple and v == w)]
    found: List[nx.Graph] = []
    for counts in compositions(edges, len(slots)):
        if simple and any(c > 1 for c in counts):
            continue
        matrix = [[0] * size for _ in range(size)]
        for (v, w), c in zip(slots, counts):
            if v == w:
                matrix[v][v] += 2 * c
            else:
                matrix[v][w] += c
                matrix[w][v] += c
        if any(sum(matrix[v]) > vertices[v].beta1 for v in range(size)):
            continue
        adjacency = tuple(tuple(row) for row in matrix)
        candidate = GraphTerm(k=0, vertices=vertices, adjacency=adjacency, points=0).to_networkx()
        if not nx.is_connected(candidate):
            continue
        if any(
            nx.is_isomorphic(candidate, other, node_match=_same_node, edge_match=_same_edge)
            for other in found
        ):
            continue
        found.append(candidate)
        yield adjacency


def enumerate_graph_terms(
    target: SurfaceClass, genus: int = 0, k: int = 0, max_vertices: Optional[int] = None
) -> List[GraphTerm]:
    """Every graph of the sum for (d, g, k) whose binomial factor is non-zero.

    Vertex invariants are not consulted, so some returned terms may still
    have multiplicity zero.
    """
    model = vertex_model(target)
    if target.degree < 1:
        raise DomainError(f"{target} needs d.D >= 1")
    total = target.degree - 2 * k
    if total < 0 or k < 0:
        return []
    limit = min(k + 1, max_vertices or config.engine.max_graph_vertices)
    points = pair_c1(target) - 1 + genus
    m = target.mu
    sums = [m[i] - k for i in range(6)]
    m7 = m[6]
    m9 = m[7] if model.kind == SurfaceKind.TILDE_X81 else 0
    seen = set()
    terms: List[GraphTerm] = []
    for classes in _class_multisets(model, total, sums, k, m7, m9, limit):
        size = len(classes)
        mu7 = sum(d.e(7) for d in classes)
        mu78 = mu7 + sum(d.e(8) for d in classes)
        for betas in product(*(_beta_options(d) for d in classes)):
            b2 = sum(b[2] for b in betas)
            edges = m7 - b2 - mu78
            if edges < size - 1:
                continue
            free_lines = k - b2 - edges - mu7
            if free_lines < 0 or binomial(sum(b[1] for b in betas) - 2 * edges, free_lines) == 0:
                continue
            loops = edges - size + 1
            if loops > genus:
                continue
            for genera in _genus_splits(classes, genus - loops):
                vertices = tuple(
                    sorted(
                        (GraphVertex(d=d, genus=g, beta=b) for d, g, b in zip(classes, genera, betas)),
                        key=GraphVertex.sort_key,
                    )
                )
                if vertices in seen:
                    continue
                seen.add(vertices)
                if any(v.points < 0 for v in vertices) or sum(v.points for v in vertices) != points:
                    continue
                for adjacency in _adjacencies(vertices, edges, simple=genus == 0):
                    terms.append(GraphTerm(k=k, vertices=vertices, adjacency=adjacency, points=points))
    logger.debug(f"{len(terms)} graph terms for {target}, g={genus}, k={k}")
    return terms


def k_range(target: SurfaceClass) -> range:
    return range(target.degree // 2 + 1)


def _edge_factors(term: GraphTerm, v: int) -> Fraction:
    row = term.adjacency[v]
    weight = Fraction(pairings(row[v]) * multinomial_choose(term.vertices[v].beta1, row))
    for w in range(v + 1, term.size):
        weight *= factorial(row[w])
    return weight


def complex_term_multiplicity(term: GraphTerm, vertex_gw: Callable[[GraphVertex], int]) -> int:
    """mu^C of the graph, with the choice of point partition counted in"""
    free = binomial(term.beta[1] - 2 * term.edge_count, term.k_circ_circ)
    weight = Fraction(term.beta.product * free * term.partition_count(), term.automorphisms())
    for v in range(term.size):
        weight *= _edge_factors(term, v)
    if weight == 0:
        return 0
    values = [vertex_gw(vertex) for vertex in term.vertices]
    for value in values:
        weight *= value
    if weight.denominator != 1:
        raise ArithmeticError(f"non-integral multiplicity {weight} for {term.label()}")
    return int(weight)


def class_twist(kappa: int, epsilon: int) -> Dict[int, int]:
    """Coefficient swap of tau^epsilon_kappa: E_{2i-1} <-> E_{2i} for i <= kappa, and E_7 <-> E_8 if epsilon"""
    swap: Dict[int, int] = {}
    pairs = list(range(1, kappa + 1)) + ([4] if epsilon else [])
    for i in pairs:
        swap[2 * i - 1], swap[2 * i] = 2 * i, 2 * i - 1
    return swap


def shifted_class(d: SurfaceClass, kappa: int) -> SurfaceClass:
    """d^1: the coefficients of E_7, E_8 moved to E_{2kappa+1}, E_{2kappa+2}"""
    if 2 * kappa + 1 == 7:
        return d
    return d.swap_coefficients(2 * kappa + 1, 7).swap_coefficients(2 * kappa + 2, 8)


def involutions(term: GraphTerm, twist: Dict[int, int], s: int) -> Iterator[Tuple[int, ...]]:
    """Vertex involutions tau with d_{tau(v)} = twist(d_v) that are graph automorphisms.

    Without conjugate point pairs (s = 0) only the identity qualifies.
    """
    identity = tuple(range(term.size))
    graph = term.to_networkx()
    matcher = GraphMatcher(
        graph, term.to_networkx(twist), node_match=_same_node, edge_match=_same_edge
    )
    for mapping in matcher.isomorphisms_iter():
        tau = tuple(mapping[v] for v in range(term.size))
        if s == 0 and tau != identity:
            continue
        if all(tau[tau[v]] == v for v in range(term.size)):
            yield tau


def beta_splits(beta: MultiSeq) -> Iterator[Tuple[MultiSeq, MultiSeq]]:
    """All ways of writing beta = beta_re + 2 beta_im"""
    ranges = [range(c // 2 + 1) for c in beta.counts]
    for im in product(*ranges):
        imaginary = MultiSeq(counts=tuple(im))
        yield beta - imaginary.scaled(2), imaginary


class RealGraphTerm(BaseModel, frozen=True):
    """A graph term with a real involution and the real/imaginary split at fixed vertices"""

    term: GraphTerm
    tau: Tuple[int, ...]
    beta_re: Tuple[MultiSeq, ...]
    beta_im: Tuple[MultiSeq, ...]

    @property
    def fixed(self) -> List[int]:
        return [v for v, w in enumerate(self.tau) if v == w]

    @property
    def pairs(self) -> List[Tuple[int, int]]:
        return [(v, w) for v, w in enumerate(self.tau) if v < w]

    @property
    def real_edges(self) -> int:
        term, tau = self.term, self.tau
        count = sum(term.adjacency[v][v] // 2 for v in self.fixed)
        for v in range(term.size):
            for w in range(v + 1, term.size):
                if {tau[v], tau[w]} == {v, w}:
                    count += term.adjacency[v][w]
        return count

    @property
    def imaginary_edge_pairs(self) -> int:
        return (self.term.edge_count - self.real_edges) // 2

    def imaginary_edge_pairs_at(self, v: int) -> int:
        return sum(self.term.adjacency[v][w] for w in range(self.term.size) if self.tau[w] != w) // 2

    @property
    def beta_re_total(self) -> MultiSeq:
        total = MultiSeq()
        for v in self.fixed:
            total = total + self.beta_re[v]
        return total

    @property
    def beta_im_total(self) -> MultiSeq:
        total = MultiSeq()
        for v in self.fixed:
            total = total + self.beta_im[v]
        for v, _ in self.pairs:
            total = total + self.term.vertices[v].beta
        return total

    def real_multinomial(self, v: int) -> int:
        row = self.term.adjacency[v]
        re = multinomial_choose(self.beta_re[v][1], [row[w] for w in self.fixed])
        im = multinomial_choose(self.beta_im[v][1], [row[w] for w, _ in self.pairs])
        return re * im

    def point_distributions(self, s: int) -> Iterator[Tuple[Dict[int, int], int]]:
        """(s_v for every fixed vertex, number of compatible point partitions)"""
        term = self.term
        pair_points = [term.vertices[v].points for v, _ in self.pairs]
        spare = s - sum(pair_points)
        r = term.points - 2 * s
        if spare < 0 or r < 0:
            return
        fixed = self.fixed
        pair_factor = 1
        for t in pair_points:
            pair_factor *= 2**t
        for split in compositions(spare, len(fixed)):
            if any(2 * sv > term.vertices[v].points for v, sv in zip(fixed, split)):
                continue
            reals = [term.vertices[v].points - 2 * sv for v, sv in zip(fixed, split)]
            if sum(reals) != r:
                continue
            count = multinomial_choose(r, reals) * multinomial_choose(s, list(split) + pair_points)
            yield dict(zip(fixed, split)), count * pair_factor


def real_graph_terms(term: GraphTerm, twist: Dict[int, int], s: int) -> Iterator[RealGraphTerm]:
    for tau in involutions(term, twist, s):
        fixed = [v for v in range(term.size) if tau[v] == v]
        options = [list(beta_splits(term.vertices[v].beta)) for v in fixed]
        for choice in product(*options):
            beta_re = [MultiSeq()] * term.size
            beta_im = [MultiSeq()] * term.size
            for v, (re, im) in zip(fixed, choice):
                beta_re[v], beta_im[v] = re, im
            yield RealGraphTerm(
                term=term, tau=tau, beta_re=tuple(beta_re), beta_im=tuple(beta_im)
            )


def pair_multiplicity(
    real: RealGraphTerm, v: int, w: int, vertex_gw: Callable[[GraphVertex], int]
) -> int:
    """(-1)^{d_v.d_w} C(beta_{v,1}; lambda_v) GW(v) for a pair of conjugate pieces"""
    term = real.term
    vertex = term.vertices[v]
    # the intersection number may be negative
    sign = -1 if vertex.d.dot(term.vertices[w].d) % 2 else 1
    choose = multinomial_choose(vertex.beta1, term.adjacency[v])
    if not choose:
        return 0
    return sign * choose * vertex_gw(vertex)

