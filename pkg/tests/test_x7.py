import pytest

from conic_floors.absolute import gw_x7, w_x7, x7_vanishing_equalities
from conic_floors.absolute.x7 import gw_x7_terms
from conic_floors.exceptions import DomainError
from conic_floors.schema import X7Structure

pytestmark = pytest.mark.slow


@pytest.fixture
def two_c1(absolute):
    return absolute("6:2,2,2,2,2,2,2", 7)


@pytest.mark.parametrize("genus, expected", [(0, 576), (1, 204), (2, 26), (3, 1)])
def test_gw(two_c1, genus, expected):
    assert gw_x7(two_c1, genus) == expected


def test_gw_terms_are_labelled_graphs(two_c1):
    terms = gw_x7_terms(two_c1)
    assert all(t.label.startswith("k=") for t in terms)
    assert len({t.label for t in terms}) == len(terms)


@pytest.mark.parametrize("s, row", [(0, [224, 128, 64, 24]), (1, [132, 68, 28, 4])])
def test_w_kappa(two_c1, s, row):
    assert [w_x7(X7Structure.KAPPA, two_c1, s, kappa) for kappa in range(4)] == row
    shifted = [w_x7(X7Structure.KAPPA_PLUS_ONE, two_c1, s, kappa) for kappa in range(3)]
    assert shifted == row[1:]


@pytest.mark.parametrize("s, expected", [(0, 0), (1, -12)])
def test_w_two_component_structures(two_c1, s, expected):
    assert w_x7(X7Structure.PLUS_L_TOTAL, two_c1, s, epsilon=0) == expected
    assert w_x7(X7Structure.PLUS_L_TOTAL, two_c1, s, epsilon=1) == expected
    assert w_x7(X7Structure.MINUS_RP2_TOTAL, two_c1, s, epsilon=1) == expected


@pytest.mark.parametrize(
    "structure, values",
    [
        (X7Structure.MINUS_L1_L1_NU1, (32, 12)),
        (X7Structure.MINUS_L1_L1_NU0, (32, 12)),
        (X7Structure.PLUS_L0_L0, (48, 20)),
        (X7Structure.PLUS_L2_L2, (16, 4)),
    ],
)
def test_w_mass_in_one_component(two_c1, structure, values):
    assert tuple(w_x7(structure, two_c1, s) for s in (0, 1)) == values


@pytest.mark.parametrize("s", [0, 1])
def test_vanishing_equalities(two_c1, s):
    assert x7_vanishing_equalities(two_c1, s)


def test_kappa_out_of_range(two_c1):
    with pytest.raises(DomainError):
        w_x7(X7Structure.KAPPA, two_c1, 0, 4)
    with pytest.raises(DomainError):
        w_x7(X7Structure.KAPPA_PLUS_ONE, two_c1, 0, 3)
