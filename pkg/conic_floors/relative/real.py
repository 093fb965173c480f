"""Real relative invariants FW of tX_n(kappa) from real marked floor diagrams.

Labels of A0 come in this order: the |alpha_re| real fixed contacts, the
|alpha_im| pairs of conjugate fixed contacts, the s pairs of conjugate
points, then the r real points. The involution on labels swaps the pairs
whose two elements are not a floor and an edge at that floor; on the
exceptional classes it swaps E_{2i-1} and E_{2i} for i <= kappa.
"""
from collections import Counter
from math import prod
from typing import Callable, Dict, FrozenSet, List, Optional, Tuple

from pydantic import BaseModel, Field

from conic_floors.cache import InvariantCache
from conic_floors.config import config
from conic_floors.diagrams.base import FloorDiagram, MarkedDiagram
from conic_floors.diagrams.canonical import canonical_class, floor_names
from conic_floors.diagrams.graphs import reality_witnesses
from conic_floors.diagrams.marking import degenerate_marked, enumerate_marked
from conic_floors.diagrams.skeleton import diagram_key
from conic_floors.exceptions import (
    DomainError,
    NonEnumerativeClassError,
    UnsupportedScopeError,
    WitnessMismatchError,
)
from conic_floors.homology import MultiSeq, SurfaceClass, pair_E
from conic_floors.logger import logger
from conic_floors.schema import FwVariant, SourceKind, SurfaceKind


class RealType(BaseModel, frozen=True):
    alpha_re: MultiSeq = MultiSeq()
    beta_re: MultiSeq = MultiSeq()
    alpha_im: MultiSeq = MultiSeq()
    beta_im: MultiSeq = MultiSeq()
    s: int = Field(0, ge=0, description="Pairs of complex conjugate points")
    kappa: int = Field(0, ge=0, description="Pairs of exchanged exceptional classes")

    @property
    def alpha(self) -> MultiSeq:
        return self.alpha_re + self.alpha_im.scaled(2)

    @property
    def beta(self) -> MultiSeq:
        return self.beta_re + self.beta_im.scaled(2)

    @property
    def weighted(self) -> int:
        return self.alpha.weighted + self.beta.weighted

    @property
    def alpha_order(self) -> Tuple[int, ...]:
        return self.alpha_re.weights() + tuple(w for w in self.alpha_im.weights() for _ in (0, 1))

    @property
    def beta_re_even(self) -> int:
        return sum(c for j, c in enumerate(self.beta_re.counts, start=1) if j % 2 == 0)

    def zeta(self, d: SurfaceClass) -> int:
        return d.degree - 1 + self.alpha.size + self.beta.size

    def r(self, d: SurfaceClass) -> int:
        return self.zeta(d) - 2 * self.s - self.alpha_re.size - 2 * self.alpha_im.size

    def label_pairs(self) -> List[Tuple[int, int]]:
        """Candidate conjugate label pairs: alpha_im pairs first, then the s point pairs"""
        start = self.alpha_re.size
        count = self.alpha_im.size + self.s
        return [(start + 2 * k - 1, start + 2 * k) for k in range(1, count + 1)]

    def class_swap(self) -> Dict[int, int]:
        swap = {}
        for i in range(1, self.kappa + 1):
            swap[2 * i - 1], swap[2 * i] = 2 * i, 2 * i - 1
        return swap

    def __str__(self) -> str:
        return (
            f"re=({self.alpha_re};{self.beta_re})|im=({self.alpha_im};{self.beta_im})"
            f"|s={self.s}|kappa={self.kappa}"
        )


class RealSymmetry(BaseModel, frozen=True):
    """A marked diagram together with the involution that makes it real"""

    marked: MarkedDiagram
    real_type: RealType
    zeta: int
    r: int
    imaginary_labels: FrozenSet[int]
    floor_map: Tuple[int, ...]
    edge_map: Tuple[int, ...]
    source_map: Tuple[int, ...]

    @property
    def vert_im(self) -> List[Tuple[int, int]]:
        return [(v, w) for v, w in enumerate(self.floor_map) if v < w]

    def vert_im_of_degree(self, degree: int) -> List[Tuple[int, int]]:
        return [(v, w) for v, w in self.vert_im if self.marked.floors[v] == degree]

    def edge_is_real(self, k: int) -> bool:
        return self.edge_map[k] == k

    def source_is_real(self, k: int) -> bool:
        return self.source_map[k] == k

    def o(self, v: int) -> int:
        """Degree of v plus the A-source edges at v from classes beyond 2 kappa"""
        bound = 2 * self.real_type.kappa
        return self.marked.floors[v] + sum(
            1
            for s in self.marked.sources
            if s.floor == v and s.kind == SourceKind.EXCEPTIONAL and s.exceptional > bound
        )

    def o_prime(self, v: int) -> int:
        """Edges at v of weight 2 mod 4"""
        weights = [self.marked.edges[k].weight for k in self.marked.edges_at(v)]
        weights += [self.marked.sources[k].weight for k in self.marked.sources_at(v)]
        return sum(1 for w in weights if w % 4 == 2)

    @property
    def point_labels_start(self) -> int:
        return self.zeta - self.r

    @property
    def r_m(self) -> int:
        return sum(1 for x in self.marked.edge_labels if x > self.point_labels_start)

    @property
    def r_prime_m(self) -> int:
        return sum(
            1
            for k, x in enumerate(self.marked.edge_labels)
            if x <= self.point_labels_start and self.edge_is_real(k)
        )

    @property
    def e_d(self) -> List[int]:
        """Internal edges labelled before the real points"""
        return [k for k, x in enumerate(self.marked.edge_labels) if x <= self.point_labels_start]

    def matches_type(self) -> bool:
        """Exactly 2 beta_im_j conjugate beta edges of each weight j"""
        tally = Counter(
            s.weight
            for s in self.marked.sources
            if s.kind == SourceKind.BETA and s.label in self.imaginary_labels
        )
        beta_im = self.real_type.beta_im
        top = max(list(tally) + [len(beta_im.counts)], default=0)
        return all(tally.get(j, 0) == 2 * beta_im[j] for j in range(1, top + 1))

    def fingerprint(self) -> tuple:
        return (
            tuple(self.vert_im),
            tuple(k for k in range(len(self.edge_map)) if self.edge_is_real(k)),
            tuple(k for k in range(len(self.source_map)) if self.source_is_real(k)),
        )


def _induced_maps(
    marked: MarkedDiagram, relabel: Dict[int, int], swap: Dict[int, int]
) -> Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]:
    original = floor_names(marked, {})
    moved = floor_names(marked, relabel)
    index_of = {name: w for w, name in enumerate(moved)}
    floor_map = tuple(index_of[name] for name in original)

    edge_by_label = {x: k for k, x in enumerate(marked.edge_labels)}
    edge_map = tuple(edge_by_label[relabel.get(x, x)] for x in marked.edge_labels)

    source_by_label = {s.label: k for k, s in enumerate(marked.sources) if s.label is not None}
    source_by_class = {
        (s.floor, s.exceptional): k
        for k, s in enumerate(marked.sources)
        if s.kind == SourceKind.EXCEPTIONAL
    }
    source_map = []
    for s in marked.sources:
        if s.kind == SourceKind.EXCEPTIONAL:
            i = swap.get(s.exceptional, s.exceptional)
            source_map.append(source_by_class[(floor_map[s.floor], i)])
        else:
            source_map.append(source_by_label[relabel.get(s.label, s.label)])
    return floor_map, edge_map, tuple(source_map)


def _check_witnesses(sym: RealSymmetry, relabel: Dict[int, int], swap: Dict[int, int]) -> None:
    expected = sym.fingerprint()
    witnesses = reality_witnesses(sym.marked, relabel, swap)
    if not witnesses:
        raise WitnessMismatchError("canonical forms agree but no isomorphism was found")
    for witness in witnesses:
        other = sym.model_copy(
            update={
                "floor_map": witness["floors"],
                "edge_map": witness["edges"],
                "source_map": witness["sources"],
            }
        )
        if other.fingerprint() != expected or real_multiplicity_mu(other) != real_multiplicity_mu(sym):
            raise WitnessMismatchError(f"two witnesses disagree on {expected} vs {other.fingerprint()}")


def is_real(
    marked: MarkedDiagram, real_type: RealType, verify: Optional[bool] = None
) -> Optional[RealSymmetry]:
    """The real structure of (D, m) for (s, kappa), or None when it is not real"""
    if marked.genus > 0:
        raise UnsupportedScopeError("real multiplicities are defined in genus 0 only")
    kappa = real_type.kappa
    if 2 * kappa > marked.n:
        raise DomainError(f"kappa = {kappa} needs at least {2 * kappa} exceptional classes")
    counts = marked.exceptional_counts()
    if any(counts[2 * i - 2] != counts[2 * i - 1] for i in range(1, kappa + 1)):
        return None
    zeta = marked.zeta
    r = zeta - 2 * real_type.s - real_type.alpha_re.size - 2 * real_type.alpha_im.size
    if r < 0:
        raise DomainError(f"s = {real_type.s} leaves r = {r} real points")

    elements = marked.labelled_elements()
    imaginary = set()
    relabel: Dict[int, int] = {}
    for a, b in real_type.label_pairs():
        if not marked.incident(elements[a], elements[b]):
            imaginary.update((a, b))
            relabel[a], relabel[b] = b, a
    swap = real_type.class_swap()
    if canonical_class(marked) != canonical_class(marked, relabel, swap):
        return None

    floor_map, edge_map, source_map = _induced_maps(marked, relabel, swap)
    sym = RealSymmetry(
        marked=marked,
        real_type=real_type,
        zeta=zeta,
        r=r,
        imaginary_labels=frozenset(imaginary),
        floor_map=floor_map,
        edge_map=edge_map,
        source_map=source_map,
    )
    if verify if verify is not None else config.engine.verify_witnesses:
        _check_witnesses(sym, relabel, swap)
    return sym


def real_multiplicity_mu(sym: RealSymmetry) -> int:
    marked = sym.marked
    for k, e in enumerate(marked.edges):
        if e.weight % 2 == 0 and marked.edge_labels[k] not in sym.imaginary_labels:
            return 0
    sign = (-1) ** sum(sym.o(v) for v, _ in sym.vert_im)
    weights = prod(marked.edges[k].weight for k in sym.e_d)
    return 2 ** sym.real_type.beta_re_even * sym.real_type.beta_im.product * sign * weights


def is_epsilon_sided(sym: RealSymmetry, epsilon: int) -> bool:
    marked = sym.marked
    if any(e.weight % 2 for k, e in enumerate(marked.edges) if sym.edge_is_real(k)):
        return False
    if any(s.weight % 2 for k, s in enumerate(marked.sources) if sym.source_is_real(k)):
        return False
    if epsilon == 1:
        paired = {v for pair in sym.vert_im for v in pair}
        if any(deg == 1 and v not in paired for v, deg in enumerate(marked.floors)):
            return False
    return True


def is_significant(sym: RealSymmetry) -> bool:
    marked = sym.marked
    for k, e in enumerate(marked.edges):
        if sym.edge_is_real(k):
            if e.weight % 4 != 2:
                return False
        elif e.weight % 2:
            return False
    for k, s in enumerate(marked.sources):
        if s.kind != SourceKind.EXCEPTIONAL and not sym.source_is_real(k) and s.weight % 2:
            return False
    return all(marked.exceptional_set(v) == marked.exceptional_set(w) for v, w in sym.vert_im)


def real_multiplicity_nu(sym: RealSymmetry, epsilon: int) -> int:
    marked = sym.marked
    if marked.n != 2 * sym.real_type.kappa:
        raise DomainError("nu multiplicities need every exceptional class paired (n = 2 kappa)")
    if not is_epsilon_sided(sym, epsilon) or not is_significant(sym):
        return 0
    sign = (-1) ** (epsilon * len(sym.vert_im_of_degree(1)))
    sign *= (-1) ** sum(sym.o_prime(v) for v, _ in sym.vert_im_of_degree(2))
    # r'_m does not enter: the real edges before the points already carry their weight in E(D)
    power = 2 * sym.r_m + sym.real_type.beta_re_even
    weights = prod(marked.edges[k].weight for k in sym.e_d)
    return sign * 2**power * sym.real_type.beta_im.product * weights


def _plain(sym: RealSymmetry, epsilon: int) -> int:
    return real_multiplicity_mu(sym)


def _sided(sym: RealSymmetry, epsilon: int) -> int:
    return real_multiplicity_mu(sym) if is_epsilon_sided(sym, epsilon) else 0


def _sided_sided(sym: RealSymmetry, epsilon: int) -> int:
    return real_multiplicity_nu(sym, epsilon)


VARIANTS: Dict[FwVariant, Callable[[RealSymmetry, int], int]] = {
    FwVariant.PLAIN: _plain,
    FwVariant.SIDED: _sided,
    FwVariant.SIDED_SIDED: _sided_sided,
}


def _candidates(d: SurfaceClass, rt: RealType) -> List[MarkedDiagram]:
    if rt.zeta(d) == 0:
        if rt.alpha.is_zero and rt.beta.is_zero and d.degree == 1:
            return [degenerate_marked(d)]
        return []
    return enumerate_marked(d, 0, rt.alpha, rt.beta, alpha_order=rt.alpha_order)


def _fw_key(d: SurfaceClass, rt: RealType, variant: FwVariant, epsilon: int) -> str:
    return f"{d.model}|{d}|{rt}|{variant.value}|{epsilon}"


@InvariantCache("fw", key=_fw_key)
def _fw(d: SurfaceClass, rt: RealType, variant: FwVariant, epsilon: int) -> int:
    multiple = d.exceptional_multiple()
    if d.degree == 0:
        base = RealType(beta_re=MultiSeq.unit(1), kappa=rt.kappa)
        return int(multiple is not None and rt == base and multiple[0] > 2 * rt.kappa)
    if any(m < 0 for m in d.mu):
        return 0
    total = 0
    evaluate = VARIANTS[variant]
    for marked in _candidates(d, rt):
        sym = is_real(marked, rt)
        if sym is None or not sym.matches_type():
            continue
        total += evaluate(sym, epsilon)
    return total


def _check_fw(d: SurfaceClass, rt: RealType, variant: FwVariant, epsilon: int) -> None:
    if d.model.kind != SurfaceKind.TILDE_XN:
        raise DomainError(f"FW is computed on tX_n, not on {d.model}")
    if 2 * rt.kappa > d.model.n:
        raise DomainError(f"kappa = {rt.kappa} is too large for {d.model}")
    if variant != FwVariant.PLAIN and d.model.n != 2 * rt.kappa:
        raise DomainError("sided counts need n = 2 kappa")
    if epsilon not in (0, 1):
        raise DomainError(f"epsilon must be 0 or 1, got {epsilon}")
    multiple = d.exceptional_multiple()
    if multiple is not None and multiple[1] >= 2:
        raise NonEnumerativeClassError(f"{d} is {multiple[1]} times E_{multiple[0]}")


def fw(
    d: SurfaceClass, rt: RealType, variant: FwVariant = FwVariant.PLAIN, epsilon: int = 0
) -> int:
    """FW^{alpha_re, beta_re, alpha_im, beta_im}_{tX_n(kappa)}(d, s) and its sided versions"""
    _check_fw(d, rt, variant, epsilon)
    if rt.weighted != pair_E(d):
        return 0
    if d.degree >= 1 and rt.r(d) < 0:
        raise DomainError(f"s = {rt.s} exceeds the available points for {d}")
    value = _fw(d, rt, variant, epsilon)
    logger.debug(f"FW[{d}, {rt}, {variant.value}, eps={epsilon}] = {value}")
    return value


def real_breakdown(
    d: SurfaceClass, rt: RealType, variant: FwVariant = FwVariant.PLAIN, epsilon: int = 0
) -> List[Tuple[FloorDiagram, int]]:
    """Contribution of each underlying floor diagram to FW"""
    _check_fw(d, rt, variant, epsilon)
    if rt.weighted != pair_E(d) or d.degree < 1 or any(m < 0 for m in d.mu):
        return []
    totals: Dict[tuple, int] = {}
    diagrams: Dict[tuple, FloorDiagram] = {}
    evaluate = VARIANTS[variant]
    for marked in _candidates(d, rt):
        sym = is_real(marked, rt)
        if sym is None or not sym.matches_type():
            continue
        key = diagram_key(marked.diagram)
        diagrams.setdefault(key, marked.diagram)
        totals[key] = totals.get(key, 0) + evaluate(sym, epsilon)
    return [(diagrams[k], totals[k]) for k in sorted(totals)]
