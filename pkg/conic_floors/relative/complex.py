"""Relative Gromov-Witten invariants of tX_n from floor diagrams."""
from collections import Counter
from math import prod
from typing import Dict, List, Tuple

from pydantic import BaseModel, Field

from conic_floors.cache import InvariantCache
from conic_floors.combinatorics import count_binary_matrices
from conic_floors.diagrams.base import FloorDiagram, MarkedDiagram
from conic_floors.diagrams.marking import enumerate_marked, enumerate_shapes
from conic_floors.diagrams.skeleton import diagram_key
from conic_floors.exceptions import DomainError, NonEnumerativeClassError, TypeMismatchError
from conic_floors.homology import MultiSeq, SurfaceClass, pair_E
from conic_floors.logger import logger
from conic_floors.schema import SourceKind, SurfaceKind


class InvariantQuery(BaseModel, frozen=True):
    """GW^{alpha,beta}_{tX_n}(d, g)"""

    d: SurfaceClass
    genus: int = Field(0, ge=0)
    alpha: MultiSeq = MultiSeq()
    beta: MultiSeq = MultiSeq()

    def normalized(self) -> "InvariantQuery":
        """All points of tX_n lie on the conic, so the mu_i may be permuted freely"""
        mu = tuple(sorted(self.d.mu, reverse=True))
        d = SurfaceClass(degree=self.d.degree, mu=mu, model=self.d.model)
        return self.model_copy(update={"d": d})

    def __str__(self) -> str:
        return f"{self.d.model}|{self.d}|g={self.genus}|a={self.alpha}|b={self.beta}"


def complex_multiplicity(marked: MarkedDiagram) -> int:
    """I^beta times the product of squared internal edge weights"""
    return marked.beta.product * prod(e.weight**2 for e in marked.edges)


def _check(q: InvariantQuery) -> None:
    if q.d.model.kind != SurfaceKind.TILDE_XN:
        raise DomainError(f"relative invariants are computed on tX_n, not on {q.d.model}")
    if q.alpha.weighted + q.beta.weighted != pair_E(q.d):
        raise TypeMismatchError(
            f"type ({q.alpha}, {q.beta}) has weight {q.alpha.weighted + q.beta.weighted}, "
            f"but d.E = {pair_E(q.d)}"
        )
    multiple = q.d.exceptional_multiple()
    if multiple is not None and multiple[1] >= 2:
        raise NonEnumerativeClassError(f"{q.d} is {multiple[1]} times E_{multiple[0]}")


def _initial_value(q: InvariantQuery) -> int:
    """Invariants with no point condition left: d.D - 1 + g + |beta| = 0"""
    d = q.d
    if d.exceptional_multiple() is not None:
        return int(q.genus == 0 and q.alpha.is_zero and q.beta == MultiSeq.unit(1))
    if d.degree == 1 and q.genus == 0 and q.beta.is_zero:
        return int(all(m in (0, 1) for m in d.mu) and sum(d.mu) <= 2)
    return 0


def _shape_weight(shape: MarkedDiagram, mu: Tuple[int, ...]) -> int:
    slots = Counter(s.floor for s in shape.sources if s.kind == SourceKind.EXCEPTIONAL)
    columns = [slots.get(v, 0) for v in range(len(shape.floors))]
    return complex_multiplicity(shape) * count_binary_matrices(mu, columns)


def _query_key(q: InvariantQuery) -> str:
    return str(q)


@InvariantCache("gw_rel", key=_query_key)
def _gw_normalized(q: InvariantQuery) -> int:
    if q.d.degree - 1 + q.genus + q.beta.size == 0:
        return _initial_value(q)
    if q.d.degree < 1 or any(m < 0 for m in q.d.mu):
        return 0
    shapes = enumerate_shapes(q.d, q.genus, q.alpha, q.beta)
    return sum(_shape_weight(shape, q.d.mu) for shape in shapes)


def gw_relative(q: InvariantQuery) -> int:
    _check(q)
    value = _gw_normalized(q.normalized())
    logger.debug(f"GW[{q}] = {value}")
    return value


def gw_relative_by_enumeration(q: InvariantQuery) -> int:
    """Same invariant, summed over fully marked diagrams instead of counted"""
    _check(q)
    if q.d.degree - 1 + q.genus + q.beta.size == 0:
        return _initial_value(q)
    if q.d.degree < 1:
        return 0
    return sum(
        complex_multiplicity(m) for m in enumerate_marked(q.d, q.genus, q.alpha, q.beta)
    )


def diagram_breakdown(q: InvariantQuery) -> List[Tuple[FloorDiagram, int]]:
    """Contribution of each underlying floor diagram to GW(q).

    Diagrams differing only in which sources are beta edges and which come
    from the A_i are reported separately.
    """
    _check(q)
    if q.d.degree < 1 or any(m < 0 for m in q.d.mu):
        return []
    totals: Dict[tuple, int] = {}
    diagrams: Dict[tuple, FloorDiagram] = {}
    for shape in enumerate_shapes(q.d, q.genus, q.alpha, q.beta):
        diagram = shape.diagram
        key = diagram_key(diagram)
        diagrams.setdefault(key, diagram)
        totals[key] = totals.get(key, 0) + _shape_weight(shape, q.d.mu)
    return [(diagrams[k], totals[k]) for k in sorted(totals) if totals[k]]
