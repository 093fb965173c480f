"""Invariants of tX_{8,1}, the blow-up of tX_8 at one point off the conic.

Floor diagrams only see points on the conic, so the X_8 formulas read the
invariants of curves through the ninth point from a table. A few classes
are still answered directly: pieces meeting the ninth exceptional curve
at most once reduce to tX_8, the double line 2(D - E_9) is counted by
hand, and classes pairing negatively with a (-1)-curve other than
themselves carry no irreducible curve.
"""
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Set

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from conic_floors.config import config
from conic_floors.exceptions import MissingProviderKeysError, ParseError
from conic_floors.homology import (
    MultiSeq,
    SurfaceClass,
    SurfaceModel,
    arithmetic_genus,
)
from conic_floors.logger import logger
from conic_floors.relative.complex import InvariantQuery, gw_relative


class ProviderRow(BaseModel):
    """One line of a provider table.

    Complex rows carry ``genus`` and ``beta``; real rows carry ``real``,
    either ``kappa=K`` or ``component=L-1`` / ``component=L1``.
    """

    model_config = ConfigDict(populate_by_name=True)

    class_: str = Field(..., alias="class")
    genus: int = Field(0, ge=0)
    beta: str = "0"
    real: Optional[str] = None
    value: int


def complex_key(d: SurfaceClass, genus: int, beta: MultiSeq) -> str:
    # the eight conic points are interchangeable for complex counts
    mu = tuple(sorted(d.mu[:8], reverse=True)) + d.mu[8:]
    canonical = SurfaceClass(degree=d.degree, mu=mu, model=d.model)
    return f"gw|{canonical}|g={genus}|b={beta}"


def real_key(d: SurfaceClass, tag: str) -> str:
    return f"w|{d}|{tag}"


def kappa_tag(kappa: int) -> str:
    return f"kappa={kappa}"


def component_tag(epsilon: int) -> str:
    """Tag of the component of R tX81(4) minus RE with Euler characteristic 2 epsilon - 1"""
    return f"component=L{2 * epsilon - 1}"


class ProviderTable(BaseModel):
    entries: Dict[str, int] = Field(default_factory=dict)
    source: Optional[str] = None

    @classmethod
    def load(cls, path: Path) -> "ProviderTable":
        model = SurfaceModel.tilde81()
        entries: Dict[str, int] = {}
        try:
            lines = path.read_text().splitlines()
        except OSError as e:
            raise ParseError(f"cannot read provider table {path}: {e}") from e
        for number, line in enumerate(lines, start=1):
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            try:
                row = ProviderRow.model_validate_json(line)
            except ValidationError as e:
                raise ParseError(f"{path}:{number}: {e}") from e
            d = SurfaceClass.parse(row.class_, model)
            if row.real is None:
                key = complex_key(d, row.genus, MultiSeq.parse(row.beta))
            else:
                key = real_key(d, row.real)
            entries[key] = row.value
        logger.debug(f"provider table {path}: {len(entries)} entries")
        return cls(entries=entries, source=str(path))

    @classmethod
    def default(cls) -> "ProviderTable":
        path = config.provider_table_path
        if not path.exists():
            logger.warning(f"provider table {path} not found, starting empty")
            return cls()
        return cls.load(path)


def _minus_one_curves(model: SurfaceModel) -> Iterator[SurfaceClass]:
    for i in range(1, 10):
        yield SurfaceClass.exceptional(model, i)
    for i in range(1, 9):
        for j in range(i + 1, 10):
            mu = [0] * 9
            mu[i - 1] = mu[j - 1] = 1
            yield SurfaceClass(degree=1, mu=tuple(mu), model=model)


def _is_double_line(d: SurfaceClass) -> bool:
    """d = 2(D - E_9)"""
    return d.degree == 2 and d.mu == (0,) * 8 + (2,)


class X81Provider:
    """Answers GW and W queries on tX81, remembering the keys it could not answer"""

    def __init__(self, table: Optional[ProviderTable] = None):
        self.table = table if table is not None else ProviderTable.default()
        self.missing: Set[str] = set()
        self._curves: List[SurfaceClass] = list(_minus_one_curves(SurfaceModel.tilde81()))

    def _obstructed(self, d: SurfaceClass, genus: int) -> bool:
        if arithmetic_genus(d) < genus and d.exceptional_multiple() is None:
            return True
        return any(d != curve and d.dot(curve) < 0 for curve in self._curves)

    def gw(self, d: SurfaceClass, genus: int = 0, beta: MultiSeq = MultiSeq()) -> int:
        key = complex_key(d, genus, beta)
        if key in self.table.entries:
            return self.table.entries[key]
        if d.mu[8] in (0, 1):
            on_conic = SurfaceClass(degree=d.degree, mu=d.mu[:8], model=SurfaceModel.tilde(8))
            return gw_relative(InvariantQuery(d=on_conic, genus=genus, beta=beta))
        if _is_double_line(d):
            # a double cover of the line through the ninth point and one more point,
            # branched where the line meets E
            return int(genus == 0 and beta == MultiSeq.unit(2, 2))
        if self._obstructed(d, genus):
            return 0
        logger.debug(f"provider miss: {key}")
        self.missing.add(key)
        return 0

    def w(self, d: SurfaceClass, tag: str) -> int:
        key = real_key(d, tag)
        if key in self.table.entries:
            return self.table.entries[key]
        if _is_double_line(d):
            return 0
        if self._obstructed(d, 0):
            return 0
        if tag.startswith("kappa=") and arithmetic_genus(d) == 0:
            beta = MultiSeq.unit(1, 2 * d.degree - sum(d.mu[:8]))
            if self.gw(d, 0, beta) == 1:
                return 1
        logger.debug(f"provider miss: {key}")
        self.missing.add(key)
        return 0

    def raise_missing(self) -> None:
        if self.missing:
            keys, self.missing = self.missing, set()
            raise MissingProviderKeysError(keys)
