"""Invariants of X_n for n <= 5, where all points may be put on a conic."""
from typing import List

from conic_floors.exceptions import DomainError
from conic_floors.homology import MultiSeq, SurfaceClass, SurfaceModel, pair_E
from conic_floors.logger import logger
from conic_floors.relative.complex import InvariantQuery, gw_relative
from conic_floors.relative.real import RealType, fw
from conic_floors.schema import SurfaceKind, Term


def _to_tilde(d: SurfaceClass) -> SurfaceClass:
    if d.model.kind != SurfaceKind.XN or d.model.n > 5:
        raise DomainError(f"plane formulas apply to X_n with n <= 5, got {d.model}")
    if d.degree < 1:
        raise DomainError(f"{d} needs d.D >= 1")
    return d.with_model(SurfaceModel.tilde(d.model.n))


def gw_plane(d: SurfaceClass, genus: int = 0) -> int:
    """GW_{X_n}(d, g) as the relative invariant with every contact free"""
    tilde = _to_tilde(d)
    value = gw_relative(
        InvariantQuery(d=tilde, genus=genus, beta=MultiSeq.unit(1, pair_E(tilde)))
    )
    logger.info(f"GW[{d.model}]({d}, g={genus}) = {value}")
    return value


def w_plane_terms(d: SurfaceClass, s: int = 0, kappa: int = 0) -> List[Term]:
    """One term per number b of conjugate pairs of contact points with E"""
    tilde = _to_tilde(d)
    de = pair_E(tilde)
    terms = []
    for b in range(de // 2 + 1):
        rt = RealType(
            beta_re=MultiSeq.unit(1, de - 2 * b), beta_im=MultiSeq.unit(1, b), s=s, kappa=kappa
        )
        terms.append(Term(label=f"b={b}", value=fw(tilde, rt)))
    return terms


def w_plane(d: SurfaceClass, s: int = 0, kappa: int = 0) -> int:
    value = sum(t.value for t in w_plane_terms(d, s, kappa))
    logger.info(f"W[{d.model}({kappa})]({d}, s={s}) = {value}")
    return value
