from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field


class SurfaceKind(str, Enum):
    """Surface models the engine knows about"""

    TILDE_XN = "tX"  # blow-up of CP2 at n points of a conic, n <= 8
    TILDE_X81 = "tX81"  # tX8 blown up once more at a point off the conic
    XN = "X"  # blow-up of CP2 at n generic points


class ElementKind(str, Enum):
    """Kinds of diagram elements that can carry an A0 label"""

    FLOOR = "floor"
    EDGE = "edge"
    ALPHA = "alpha"
    BETA = "beta"


class SourceKind(str, Enum):
    """What a source vertex of a marked diagram stands for"""

    ALPHA = "alpha"
    BETA = "beta"
    EXCEPTIONAL = "exceptional"


class FwVariant(str, Enum):
    """Which real count the FW evaluator returns"""

    PLAIN = "plain"
    SIDED = "sided"
    SIDED_SIDED = "sided-sided"


class X6Structure(str, Enum):
    KAPPA = "kappa"
    KAPPA_PLUS_ONE = "kappa+1"
    L_TOTAL = "l-total"
    L_MASS = "l-mass"


class X7Structure(str, Enum):
    KAPPA = "kappa"
    KAPPA_PLUS_ONE = "kappa+1"
    MINUS_RP2_TOTAL = "minus-rp2-total"
    PLUS_L_TOTAL = "plus-l-total"
    MINUS_L1_L1_NU1 = "minus-l1-l1-nu1"
    MINUS_L1_L1_NU0 = "minus-l1-l1-nu0"
    PLUS_L0_L0 = "plus-l0-l0"
    PLUS_L2_L2 = "plus-l2-l2"


class X8Structure(str, Enum):
    KAPPA = "kappa"
    KAPPA_PLUS_ONE = "kappa+1"
    MINUS_L = "minus-l"
    PLUS_L = "plus-l"


class Command(str, Enum):
    GW_REL = "gw-rel"
    FW = "fw"
    GW_PLANE = "gw-plane"
    W_PLANE = "w-plane"
    GW_X6 = "gw-x6"
    W_X6 = "w-x6"
    GW_X7 = "gw-x7"
    W_X7 = "w-x7"
    GW_X8 = "gw-x8"
    W_X8 = "w-x8"
    DIAGRAMS = "diagrams"


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"
    DOT = "dot"


class Term(BaseModel):
    """One summand of an invariant, e.g. one floor diagram or one graph family"""

    label: str
    value: int


class Stats(BaseModel):
    """Work counters reported with --stats"""

    diagrams: int = Field(0, description="Unmarked floor diagrams visited")
    markings: int = Field(0, description="Marked diagram classes produced")
    cache_hits: int = Field(0, description="Invariants answered from the cache")

    def reset(self) -> None:
        self.diagrams = 0
        self.markings = 0
        self.cache_hits = 0

    def snapshot(self) -> "Stats":
        return self.model_copy()


class QueryResult(BaseModel):
    query: str
    value: int
    terms: Optional[List[Term]] = Field(default=None)
    stats: Optional[Stats] = Field(default=None)


engine_stats = Stats()
