"""Gromov-Witten and Welschinger invariants of X_7 from invariants of tX_8."""
from fractions import Fraction
from typing import Callable, Dict, List

from conic_floors.absolute.graphs import (
    GraphTerm,
    GraphVertex,
    RealGraphTerm,
    class_twist,
    complex_term_multiplicity,
    enumerate_graph_terms,
    k_range,
    pair_multiplicity,
    real_graph_terms,
    shifted_class,
)
from conic_floors.combinatorics import binomial
from conic_floors.exceptions import DomainError
from conic_floors.homology import MultiSeq, SurfaceClass, SurfaceModel, pair_c1
from conic_floors.logger import logger
from conic_floors.relative.complex import InvariantQuery, gw_relative
from conic_floors.relative.real import RealType, fw
from conic_floors.schema import FwVariant, Term, X7Structure

VertexFw = Callable[[RealGraphTerm, int, int], int]


def _check_class(d: SurfaceClass) -> None:
    if d.model != SurfaceModel.absolute(7):
        raise DomainError(f"expected a class on X7, got one on {d.model}")
    if d.degree < 1:
        raise DomainError(f"{d} needs d.D >= 1")


def vertex_gw(vertex: GraphVertex) -> int:
    return gw_relative(InvariantQuery(d=vertex.d, genus=vertex.genus, beta=vertex.beta))


def gw_x7_terms(d: SurfaceClass, genus: int = 0) -> List[Term]:
    _check_class(d)
    terms = []
    for k in k_range(d):
        for term in enumerate_graph_terms(d, genus, k):
            value = complex_term_multiplicity(term, vertex_gw)
            if value:
                terms.append(Term(label=term.label(), value=value))
    return terms


def gw_x7(d: SurfaceClass, genus: int = 0) -> int:
    value = sum(t.value for t in gw_x7_terms(d, genus))
    logger.info(f"GW[X7]({d}, g={genus}) = {value}")
    return value


def _spread(real: RealGraphTerm, s: int, vertex_fw: VertexFw) -> int:
    """Product of the vertex and pair factors, summed over compatible point partitions"""
    constant = 1
    for v in real.fixed:
        constant *= 2 ** real.imaginary_edge_pairs_at(v) * real.real_multinomial(v)
    for v, w in real.pairs:
        constant *= pair_multiplicity(real, v, w, vertex_gw)
    if not constant:
        return 0
    total = 0
    for split, count in real.point_distributions(s):
        value = count
        for v in real.fixed:
            value *= vertex_fw(real, v, split[v])
            if not value:
                break
        total += value
    return constant * total


def _plain_fw(kappa: int) -> VertexFw:
    def evaluate(real: RealGraphTerm, v: int, s_v: int) -> int:
        rt = RealType(beta_re=real.beta_re[v], beta_im=real.beta_im[v], s=s_v, kappa=kappa)
        return fw(real.term.vertices[v].d, rt)

    return evaluate


def _shifted_fw(kappa: int) -> VertexFw:
    def evaluate(real: RealGraphTerm, v: int, s_v: int) -> int:
        rt = RealType(beta_re=real.beta_re[v], beta_im=real.beta_im[v], s=s_v, kappa=kappa + 1)
        return fw(shifted_class(real.term.vertices[v].d, kappa), rt)

    return evaluate


def _sided_fw(epsilon: int) -> VertexFw:
    def evaluate(real: RealGraphTerm, v: int, s_v: int) -> int:
        rt = RealType(beta_re=real.beta_re[v], beta_im=real.beta_im[v], s=s_v, kappa=4)
        return fw(real.term.vertices[v].d, rt, FwVariant.SIDED, epsilon)

    return evaluate


def _graph_total(term: GraphTerm, contributions: int) -> int:
    value = Fraction(contributions, term.automorphisms())
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral real multiplicity {value} for {term.label()}")
    return int(value)


def _real_terms(
    d: SurfaceClass, twist: Dict[int, int], s: int, weigh: Callable[[RealGraphTerm], int]
) -> List[Term]:
    terms = []
    for k in k_range(d):
        for term in enumerate_graph_terms(d, 0, k):
            contributions = sum(weigh(real) for real in real_graph_terms(term, twist, s))
            value = _graph_total(term, contributions)
            if value:
                terms.append(Term(label=term.label(), value=value))
    return terms


def _kappa(d: SurfaceClass, s: int, kappa: int, epsilon: int) -> List[Term]:
    if not 0 <= kappa <= 3:
        raise DomainError("the Kappa formula needs kappa <= 3")
    vertex_fw = _plain_fw(kappa)

    def weigh(real: RealGraphTerm) -> int:
        b_re, b_im = real.beta_re_total, real.beta_im_total
        if b_re[2]:
            return 0
        free_lines = real.term.k_circ_circ
        spare_re = b_re[1] - 2 * real.real_edges
        spare_im = b_im[1] - 2 * real.imaginary_edge_pairs
        free = sum(
            binomial(spare_re, free_lines - 2 * s2) * binomial(spare_im, s2)
            for s2 in range(free_lines // 2 + 1)
        )
        if not free:
            return 0
        sign = (-1) ** (real.imaginary_edge_pairs + b_im[2])
        return sign * b_im.product * free * _spread(real, s, vertex_fw)

    return _real_terms(d, class_twist(kappa, 0), s, weigh)


def _conjugate_points_weight(vertex_fw: VertexFw, s: int) -> Callable[[RealGraphTerm], int]:
    """Weight of graphs where p_7 and p_8 are complex conjugate"""

    def weigh(real: RealGraphTerm) -> int:
        b_re, b_im = real.beta_re_total, real.beta_im_total
        kim = real.imaginary_edge_pairs
        if b_re != MultiSeq.unit(1, 2 * real.real_edges):
            return 0
        lone = b_im.size - 2 * kim
        if real.term.k_circ_circ != b_im[1] - 2 * kim or lone < 0:
            return 0
        sign = (-1 if kim % 2 else 1) * (-2) ** lone
        return sign * _spread(real, s, vertex_fw)

    return weigh


def _kappa_plus_one(d: SurfaceClass, s: int, kappa: int, epsilon: int) -> List[Term]:
    if not 0 <= kappa <= 2:
        raise DomainError("the Kappa+1 formula needs kappa <= 2")
    weigh = _conjugate_points_weight(_shifted_fw(kappa), s)
    return _real_terms(d, class_twist(kappa, 1), s, weigh)


def _sided_total(d: SurfaceClass, s: int, kappa: int, epsilon: int) -> List[Term]:
    return _real_terms(d, class_twist(3, 1), s, _conjugate_points_weight(_sided_fw(epsilon), s))


def _one_vertex(d: SurfaceClass, s: int, epsilon: int, imaginary_only: bool) -> List[Term]:
    """Single-vertex graphs with no edge and no order-one contact, weighted by nu"""
    twist = class_twist(3, 1)
    terms = []
    for k in k_range(d):
        for term in enumerate_graph_terms(d, 0, k, max_vertices=1):
            if term.edge_count or term.beta[1] or term.k_circ_circ:
                continue
            value = 0
            for real in real_graph_terms(term, twist, s):
                re, im = real.beta_re[0], real.beta_im[0]
                if imaginary_only and re[2]:
                    continue
                factor = (-2) ** im[2] if imaginary_only else 2 ** (re[2] + im[2])
                rt = RealType(beta_re=re, beta_im=im, s=s, kappa=4)
                value += factor * fw(term.vertices[0].d, rt, FwVariant.SIDED_SIDED, epsilon)
            if value:
                terms.append(Term(label=term.label(), value=value))
    return terms


def _minus_l1_l1_nu1(d: SurfaceClass, s: int, kappa: int, epsilon: int) -> List[Term]:
    return _one_vertex(d, s, 1, imaginary_only=False)


def _minus_l1_l1_nu0(d: SurfaceClass, s: int, kappa: int, epsilon: int) -> List[Term]:
    return _one_vertex(d, s, 0, imaginary_only=True)


def _plus_l0_l0(d: SurfaceClass, s: int, kappa: int, epsilon: int) -> List[Term]:
    return _one_vertex(d, s, 0, imaginary_only=False)


def _plus_l2_l2(d: SurfaceClass, s: int, kappa: int, epsilon: int) -> List[Term]:
    return _one_vertex(d, s, 1, imaginary_only=True)


STRUCTURES: Dict[X7Structure, Callable[[SurfaceClass, int, int, int], List[Term]]] = {
    X7Structure.KAPPA: _kappa,
    X7Structure.KAPPA_PLUS_ONE: _kappa_plus_one,
    X7Structure.MINUS_RP2_TOTAL: _sided_total,
    X7Structure.PLUS_L_TOTAL: _sided_total,
    X7Structure.MINUS_L1_L1_NU1: _minus_l1_l1_nu1,
    X7Structure.MINUS_L1_L1_NU0: _minus_l1_l1_nu0,
    X7Structure.PLUS_L0_L0: _plus_l0_l0,
    X7Structure.PLUS_L2_L2: _plus_l2_l2,
}


def w_x7_terms(
    structure: X7Structure, d: SurfaceClass, s: int = 0, kappa: int = 0, epsilon: int = 0
) -> List[Term]:
    """Summands of a Welschinger invariant of X_7.

    KAPPA and KAPPA_PLUS_ONE give W_{X7(kappa)} and W_{X7(kappa+1)}. For the
    two structures with two real components, PLUS_L_TOTAL counts curves
    through L_{2 epsilon} of X7+(4) and MINUS_RP2_TOTAL through a real
    projective plane of X7-(4); the last four weigh curves by their mass in
    a single component.
    """
    _check_class(d)
    if epsilon not in (0, 1):
        raise DomainError(f"epsilon must be 0 or 1, got {epsilon}")
    if s < 0 or pair_c1(d) - 1 - 2 * s < 0:
        raise DomainError(f"c1.d - 1 = {pair_c1(d) - 1} cannot host s = {s} pairs")
    return STRUCTURES[structure](d, s, kappa, epsilon)


def w_x7(
    structure: X7Structure, d: SurfaceClass, s: int = 0, kappa: int = 0, epsilon: int = 0
) -> int:
    value = sum(t.value for t in w_x7_terms(structure, d, s, kappa, epsilon))
    logger.info(f"W[X7 {structure.value}, kappa={kappa}, eps={epsilon}]({d}, s={s}) = {value}")
    return value


def x7_vanishing_equalities(d: SurfaceClass, s: int = 0) -> bool:
    """The three sided totals agree, and vanish once r >= 2"""
    values = {
        w_x7(X7Structure.PLUS_L_TOTAL, d, s, epsilon=0),
        w_x7(X7Structure.PLUS_L_TOTAL, d, s, epsilon=1),
        w_x7(X7Structure.MINUS_RP2_TOTAL, d, s, epsilon=1),
    }
    if len(values) != 1:
        return False
    r = pair_c1(d) - 1 - 2 * s
    return r < 2 or values == {0}
