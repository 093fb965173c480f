from conic_floors.relative.complex import (
    InvariantQuery,
    complex_multiplicity,
    diagram_breakdown,
    gw_relative,
)
from conic_floors.relative.real import (
    RealSymmetry,
    RealType,
    fw,
    is_real,
    real_breakdown,
    real_multiplicity_mu,
    real_multiplicity_nu,
)


__all__ = [
    "InvariantQuery",
    "RealSymmetry",
    "RealType",
    "complex_multiplicity",
    "diagram_breakdown",
    "fw",
    "gw_relative",
    "is_real",
    "real_breakdown",
    "real_multiplicity_mu",
    "real_multiplicity_nu",
]
