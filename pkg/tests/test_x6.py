import pytest

from conic_floors.absolute import gw_x6, gw_x6_terms, w_x6, x6_sided_divisibility
from conic_floors.absolute.x6 import degenerations
from conic_floors.exceptions import DomainError
from conic_floors.schema import X6Structure

TWO_C1 = "6:2,2,2,2,2,2"


@pytest.fixture
def two_c1(absolute):
    return absolute(TWO_C1, 6)


def test_degenerations(two_c1):
    steps = list(degenerations(two_c1))
    assert [k for k, _ in steps] == [0, 1, 2, 3]
    assert str(steps[1][1]) == "4:1,1,1,1,1,1"
    assert str(steps[3][1]) == "0:-1,-1,-1,-1,-1,-1"


@pytest.mark.slow
def test_gw_terms(two_c1):
    assert [t.value for t in gw_x6_terms(two_c1)] == [2002, 2 * 616, 6, 0]


@pytest.mark.slow
@pytest.mark.parametrize("genus, expected", [(0, 3240), (1, 1740), (2, 369), (3, 33), (4, 1)])
def test_gw(two_c1, genus, expected):
    assert gw_x6(two_c1, genus) == expected


@pytest.mark.slow
@pytest.mark.parametrize(
    "s, row",
    [(0, [1000, 522, 236, 78]), (1, [552, 266, 108, 30]), (2, [288, 130, 52, 22])],
)
def test_w_kappa(two_c1, s, row):
    assert [w_x6(X6Structure.KAPPA, two_c1, s, kappa) for kappa in range(4)] == row
    shifted = [w_x6(X6Structure.KAPPA_PLUS_ONE, two_c1, s, kappa) for kappa in range(3)]
    assert shifted == row[1:]


@pytest.mark.slow
@pytest.mark.parametrize("s, expected", [(0, 0), (1, 0), (2, 24)])
def test_w_through_one_sphere(two_c1, s, expected):
    for epsilon in (0, 1):
        assert w_x6(X6Structure.L_TOTAL, two_c1, s, epsilon=epsilon) == expected


@pytest.mark.slow
@pytest.mark.parametrize("s, pair", [(0, (160, 96)), (1, (64, 32)), (2, (24, 8))])
def test_w_mass_in_one_sphere(two_c1, s, pair):
    values = tuple(w_x6(X6Structure.L_MASS, two_c1, s, epsilon=e) for e in (0, 1))
    assert values == pair


@pytest.mark.parametrize("epsilon", [0, 1])
def test_w_mass_needs_no_contact_with_the_conic(absolute, epsilon):
    quartic = absolute("4:1,1,1,1,1,1", 6)
    assert w_x6(X6Structure.L_MASS, quartic, 0, epsilon=epsilon) == 0
    assert w_x6(X6Structure.L_MASS, quartic, 2, epsilon=epsilon) == 0


@pytest.mark.slow
def test_sided_divisibility(two_c1):
    assert x6_sided_divisibility(two_c1)


def test_kappa_out_of_range(two_c1):
    with pytest.raises(DomainError):
        w_x6(X6Structure.KAPPA, two_c1, 0, 4)
    with pytest.raises(DomainError):
        w_x6(X6Structure.KAPPA_PLUS_ONE, two_c1, 0, 3)


def test_too_many_pairs(two_c1):
    with pytest.raises(DomainError):
        w_x6(X6Structure.KAPPA, two_c1, 3)


def test_wrong_surface(tilde, absolute):
    with pytest.raises(DomainError):
        gw_x6(tilde(TWO_C1, 6))
    with pytest.raises(DomainError):
        gw_x6(absolute("6:2,2,2,2,2,2,2", 7))
