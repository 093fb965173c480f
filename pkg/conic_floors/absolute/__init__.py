from conic_floors.absolute.plane import gw_plane, w_plane, w_plane_terms
from conic_floors.absolute.provider import ProviderTable, X81Provider
from conic_floors.absolute.x6 import gw_x6, gw_x6_terms, w_x6, w_x6_terms, x6_sided_divisibility
from conic_floors.absolute.x7 import gw_x7, gw_x7_terms, w_x7, w_x7_terms, x7_vanishing_equalities
from conic_floors.absolute.x8 import gw_x8, gw_x8_terms, w_x8, w_x8_terms, x8_congruence


__all__ = [
    "ProviderTable",
    "X81Provider",
    "gw_plane",
    "gw_x6",
    "gw_x6_terms",
    "gw_x7",
    "gw_x7_terms",
    "gw_x8",
    "gw_x8_terms",
    "w_plane",
    "w_plane_terms",
    "w_x6",
    "w_x6_terms",
    "w_x7",
    "w_x7_terms",
    "w_x8",
    "w_x8_terms",
    "x6_sided_divisibility",
    "x7_vanishing_equalities",
    "x8_congruence",
]
