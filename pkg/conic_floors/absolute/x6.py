"""Absolute invariants of X_6 from the degeneration to tX_6 and a quadric.

A curve of class d on X_6 splits into a curve of class d - kE on tX_6 and k
fibres of the quadric, so every formula sums relative invariants of d - kE
with all contacts with E of order one.
"""
from typing import Callable, Dict, Iterator, List, Tuple

from conic_floors.combinatorics import binomial
from conic_floors.exceptions import DomainError, NonEnumerativeClassError
from conic_floors.homology import (
    MultiSeq,
    SurfaceClass,
    SurfaceModel,
    conic_class,
    pair_E,
    pair_c1,
)
from conic_floors.logger import logger
from conic_floors.relative.complex import InvariantQuery, gw_relative
from conic_floors.relative.real import RealType, fw
from conic_floors.schema import FwVariant, Term, X6Structure


def _check_class(d: SurfaceClass) -> None:
    if d.model != SurfaceModel.absolute(6):
        raise DomainError(f"expected a class on X6, got one on {d.model}")
    if d.degree < 1:
        raise DomainError(f"{d} needs d.D >= 1")


def degenerations(d: SurfaceClass) -> Iterator[Tuple[int, SurfaceClass]]:
    """(k, d - kE) on tX_6 for every k leaving a class of non-negative degree"""
    tilde = d.with_model(SurfaceModel.tilde(6))
    conic = conic_class(tilde.model)
    k = 0
    while d.degree - 2 * k >= 0:
        yield k, tilde - k * conic
        k += 1


def gw_x6_terms(d: SurfaceClass, genus: int = 0) -> List[Term]:
    _check_class(d)
    terms = []
    for k, dk in degenerations(d):
        contacts = pair_E(dk)
        q = InvariantQuery(d=dk, genus=genus, beta=MultiSeq.unit(1, contacts))
        try:
            relative = gw_relative(q)
        except NonEnumerativeClassError:
            logger.debug(f"skipping the non-enumerative class {dk}")
            continue
        terms.append(Term(label=f"k={k}", value=binomial(contacts, k) * relative))
    return terms


def gw_x6(d: SurfaceClass, genus: int = 0) -> int:
    value = sum(t.value for t in gw_x6_terms(d, genus))
    logger.info(f"GW[X6]({d}, g={genus}) = {value}")
    return value


def _safe_fw(dk: SurfaceClass, rt: RealType, variant: FwVariant, epsilon: int) -> int:
    try:
        return fw(dk, rt, variant, epsilon)
    except NonEnumerativeClassError:
        logger.debug(f"skipping the non-enumerative class {dk}")
        return 0


def _kappa(d: SurfaceClass, s: int, kappa: int, epsilon: int) -> List[Term]:
    if kappa > 3:
        raise DomainError("the Kappa formula needs kappa <= 3")
    terms = []
    for k, dk in degenerations(d):
        contacts = pair_E(dk)
        value = 0
        for b in range(contacts // 2 + 1):
            a = contacts - 2 * b
            weight = sum(binomial(a, k - 2 * s2) * binomial(b, s2) for s2 in range(k // 2 + 1))
            if not weight:
                continue
            rt = RealType(
                beta_re=MultiSeq.unit(1, a), beta_im=MultiSeq.unit(1, b), s=s, kappa=kappa
            )
            value += weight * _safe_fw(dk, rt, FwVariant.PLAIN, 0)
        terms.append(Term(label=f"k={k}", value=value))
    return terms


def _imaginary_conic(
    d: SurfaceClass, s: int, kappa: int, variant: FwVariant, epsilon: int
) -> List[Term]:
    terms = []
    for k, dk in degenerations(d):
        contacts = pair_E(dk)
        if contacts % 2:
            continue
        rt = RealType(beta_im=MultiSeq.unit(1, contacts // 2), s=s, kappa=kappa)
        terms.append(Term(label=f"k={k}", value=(-2) ** k * _safe_fw(dk, rt, variant, epsilon)))
    return terms


def _kappa_plus_one(d: SurfaceClass, s: int, kappa: int, epsilon: int) -> List[Term]:
    if kappa > 2:
        raise DomainError("the Kappa+1 formula needs kappa <= 2")
    return _imaginary_conic(d, s, kappa, FwVariant.PLAIN, 0)


def _l_total(d: SurfaceClass, s: int, kappa: int, epsilon: int) -> List[Term]:
    return _imaginary_conic(d, s, 3, FwVariant.SIDED, epsilon)


def _l_mass(d: SurfaceClass, s: int, kappa: int, epsilon: int) -> List[Term]:
    """Curves of tX_6 with no contact with E; any other class gives 0"""
    tilde = d.with_model(SurfaceModel.tilde(6))
    rt = RealType(s=s, kappa=3)
    return [Term(label="k=0", value=_safe_fw(tilde, rt, FwVariant.SIDED_SIDED, epsilon))]


STRUCTURES: Dict[X6Structure, Callable[[SurfaceClass, int, int, int], List[Term]]] = {
    X6Structure.KAPPA: _kappa,
    X6Structure.KAPPA_PLUS_ONE: _kappa_plus_one,
    X6Structure.L_TOTAL: _l_total,
    X6Structure.L_MASS: _l_mass,
}


def w_x6_terms(
    structure: X6Structure, d: SurfaceClass, s: int = 0, kappa: int = 0, epsilon: int = 0
) -> List[Term]:
    """Summands of a Welschinger invariant of X_6.

    KAPPA gives W_{X6(kappa)}, KAPPA_PLUS_ONE gives W_{X6(kappa+1)}, and for
    the structure with four real spheres L_TOTAL gives the count through the
    component L_{1+epsilon} while L_MASS weighs curves by their mass in it.
    """
    _check_class(d)
    if epsilon not in (0, 1):
        raise DomainError(f"epsilon must be 0 or 1, got {epsilon}")
    r = pair_c1(d) - 1 - 2 * s
    if s < 0 or r < 0:
        raise DomainError(f"c1.d - 1 = {pair_c1(d) - 1} cannot host s = {s} pairs")
    return STRUCTURES[structure](d, s, kappa, epsilon)


def w_x6(
    structure: X6Structure, d: SurfaceClass, s: int = 0, kappa: int = 0, epsilon: int = 0
) -> int:
    value = sum(t.value for t in w_x6_terms(structure, d, s, kappa, epsilon))
    logger.info(f"W[X6 {structure.value}, kappa={kappa}, eps={epsilon}]({d}, s={s}) = {value}")
    return value


def x6_sided_divisibility(d: SurfaceClass) -> bool:
    """W_{L1,L1}(d, 0) >= W_{L2,L2}(d, 0) >= 0, both divisible by 4^(floor(d.D/2) - 1)"""
    first = w_x6(X6Structure.L_MASS, d, 0, 3, 0)
    second = w_x6(X6Structure.L_MASS, d, 0, 3, 1)
    power = d.degree // 2 - 1
    divisor = 4**power if power > 0 else 1
    return first >= second >= 0 and first % divisor == 0 and second % divisor == 0
