"""Gromov-Witten and Welschinger invariants of X_8 from invariants of tX_{8,1}.

Real counts are restricted to s = 0: the point configuration then lies in
one component, every vertex of a real graph is real and every contact with
the conic is a real order-one point.
"""
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from conic_floors.absolute.graphs import (
    GraphTerm,
    GraphVertex,
    class_twist,
    complex_term_multiplicity,
    enumerate_graph_terms,
    k_range,
    shifted_class,
)
from conic_floors.absolute.provider import X81Provider, component_tag, kappa_tag
from conic_floors.combinatorics import binomial, multinomial_choose
from conic_floors.exceptions import DomainError, UnsupportedScopeError
from conic_floors.homology import MultiSeq, SurfaceClass, SurfaceModel
from conic_floors.logger import logger
from conic_floors.schema import Term, X8Structure

VertexW = Callable[[GraphVertex], int]


def _check_class(d: SurfaceClass) -> None:
    if d.model != SurfaceModel.absolute(8):
        raise DomainError(f"expected a class on X8, got one on {d.model}")
    if d.degree < 1:
        raise DomainError(f"{d} needs d.D >= 1")


def gw_x8_terms(
    d: SurfaceClass, genus: int = 0, provider: Optional[X81Provider] = None
) -> List[Term]:
    _check_class(d)
    provider = provider or X81Provider()

    def vertex_gw(vertex: GraphVertex) -> int:
        return provider.gw(vertex.d, vertex.genus, vertex.beta)

    terms = []
    for k in k_range(d):
        for term in enumerate_graph_terms(d, genus, k):
            value = complex_term_multiplicity(term, vertex_gw)
            if value:
                terms.append(Term(label=term.label(), value=value))
    provider.raise_missing()
    return terms


def gw_x8(d: SurfaceClass, genus: int = 0, provider: Optional[X81Provider] = None) -> int:
    value = sum(t.value for t in gw_x8_terms(d, genus, provider))
    logger.info(f"GW[X8]({d}, g={genus}) = {value}")
    return value


def _is_real(term: GraphTerm, twist: Dict[int, int]) -> bool:
    """Every piece is its own conjugate and meets the conic at order-one points only"""
    return all(v.beta2 == 0 and v.twisted(twist) == v for v in term.vertices)


def _term_value(term: GraphTerm, free_lines: int, vertex_w: VertexW) -> int:
    weight = Fraction(
        binomial(term.beta[1] - 2 * term.edge_count, free_lines) * term.partition_count(),
        term.automorphisms(),
    )
    for v, vertex in enumerate(term.vertices):
        weight *= multinomial_choose(vertex.beta1, term.adjacency[v])
        if not weight:
            return 0
    for vertex in term.vertices:
        weight *= vertex_w(vertex)
    if weight.denominator != 1:
        raise ArithmeticError(f"non-integral real multiplicity {weight} for {term.label()}")
    return int(weight)


def _real_terms(
    d: SurfaceClass, twist: Dict[int, int], shifted: bool, vertex_w: VertexW
) -> List[Term]:
    terms = []
    for k in k_range(d):
        for term in enumerate_graph_terms(d, 0, k):
            if not _is_real(term, twist):
                continue
            if shifted:
                if term.beta != MultiSeq.unit(1, 2 * term.edge_count) or term.k_circ_circ:
                    continue
                value = _term_value(term, 0, vertex_w)
            else:
                value = _term_value(term, term.k_circ_circ, vertex_w)
            if value:
                terms.append(Term(label=term.label(), value=value))
    return terms


def _kappa(d: SurfaceClass, kappa: int, epsilon: int, provider: X81Provider) -> List[Term]:
    if not 0 <= kappa <= 3:
        raise DomainError("the Kappa formula needs kappa <= 3")
    tag = kappa_tag(kappa)
    return _real_terms(d, class_twist(kappa, 0), False, lambda v: provider.w(v.d, tag))


def _kappa_plus_one(
    d: SurfaceClass, kappa: int, epsilon: int, provider: X81Provider
) -> List[Term]:
    if not 0 <= kappa <= 2:
        raise DomainError("the Kappa+1 formula needs kappa <= 2")
    tag = kappa_tag(kappa + 1)
    return _real_terms(
        d, class_twist(kappa, 1), True, lambda v: provider.w(shifted_class(v.d, kappa), tag)
    )


def _component(d: SurfaceClass, kappa: int, epsilon: int, provider: X81Provider) -> List[Term]:
    tag = component_tag(epsilon)
    return _real_terms(d, class_twist(3, 1), True, lambda v: provider.w(v.d, tag))


STRUCTURES: Dict[X8Structure, Callable[[SurfaceClass, int, int, X81Provider], List[Term]]] = {
    X8Structure.KAPPA: _kappa,
    X8Structure.KAPPA_PLUS_ONE: _kappa_plus_one,
    X8Structure.MINUS_L: _component,
    X8Structure.PLUS_L: _component,
}


def w_x8_terms(
    structure: X8Structure,
    d: SurfaceClass,
    kappa: int = 0,
    epsilon: int = 0,
    s: int = 0,
    provider: Optional[X81Provider] = None,
) -> List[Term]:
    """Summands of a Welschinger invariant of X_8 with all points real.

    MINUS_L counts curves in L_epsilon of X8-(4), PLUS_L those in
    L_{3 epsilon - 1} of X8+(4); the two numbers agree.
    """
    _check_class(d)
    if s != 0:
        raise UnsupportedScopeError("X8 real counts are only available for s = 0")
    if epsilon not in (0, 1):
        raise DomainError(f"epsilon must be 0 or 1, got {epsilon}")
    provider = provider or X81Provider()
    terms = STRUCTURES[structure](d, kappa, epsilon, provider)
    provider.raise_missing()
    return terms


def w_x8(
    structure: X8Structure,
    d: SurfaceClass,
    kappa: int = 0,
    epsilon: int = 0,
    s: int = 0,
    provider: Optional[X81Provider] = None,
) -> int:
    value = sum(t.value for t in w_x8_terms(structure, d, kappa, epsilon, s, provider))
    logger.info(f"W[X8 {structure.value}, kappa={kappa}, eps={epsilon}]({d}) = {value}")
    return value


def x8_congruence(d: SurfaceClass, provider: Optional[X81Provider] = None) -> bool:
    """W_{X8(0)}(d) and GW_{X8}(d, 0) agree modulo 4"""
    provider = provider or X81Provider()
    return (w_x8(X8Structure.KAPPA, d, provider=provider) - gw_x8(d, 0, provider)) % 4 == 0
