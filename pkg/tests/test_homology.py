import pytest
from pydantic import ValidationError

from conic_floors.exceptions import DomainError, ParseError
from conic_floors.homology import (
    MultiSeq,
    SurfaceClass,
    SurfaceModel,
    arithmetic_genus,
    conic_class,
    pair_E,
    pair_c1,
    seq_functionals,
)


def test_class_literal_round_trip(tilde):
    d = tilde("4:1,1,1,1,1,1", 6)
    assert d.degree == 4
    assert d.mu == (1,) * 6
    assert str(d) == "4:1,1,1,1,1,1"


@pytest.mark.parametrize("text", ["4:1,1", "x:1,1,1,1,1,1", "4;1,1,1,1,1,1", "4:1,,1,1,1,1"])
def test_malformed_class_literals(text):
    with pytest.raises(ParseError):
        SurfaceClass.parse(text, SurfaceModel.tilde(6))


def test_plane_literals_without_coefficients():
    model = SurfaceModel.tilde(0)
    assert SurfaceClass.parse("3", model) == SurfaceClass.parse("3:", model)


def test_pairings_with_conic_and_anticanonical(tilde):
    d = tilde("4:1,1,1,1,1,1", 6)
    assert pair_E(d) == 2
    assert pair_c1(d) == 6
    assert pair_E(conic_class(d.model)) == -2


def test_intersection_form(tilde):
    line = tilde("1:1,0,0,0,0,0", 6)
    assert line.dot(line) == 0
    assert arithmetic_genus(tilde("3:0,0,0,0,0,0", 6)) == 1
    assert arithmetic_genus(line) == 0
    assert arithmetic_genus(SurfaceClass.exceptional(line.model, 2)) == 0


def test_class_arithmetic(tilde):
    d = tilde("6:2,2,2,2,2,2", 6)
    conic = conic_class(d.model)
    assert d - conic == tilde("4:1,1,1,1,1,1", 6)
    assert 2 * conic == conic + conic
    assert (-d).degree == -6


def test_exceptional_multiple(tilde):
    model = SurfaceModel.tilde(6)
    assert SurfaceClass.exceptional(model, 2).exceptional_multiple() == (2, 1)
    assert SurfaceClass.exceptional(model, 3, 2).exceptional_multiple() == (3, 2)
    assert tilde("1:1,0,0,0,0,0", 6).exceptional_multiple() is None


def test_swap_coefficients(tilde):
    assert tilde("3:2,1,0,0,0,0", 6).swap_coefficients(1, 3) == tilde("3:0,1,2,0,0,0", 6)


def test_models_mixing_is_rejected(tilde):
    with pytest.raises(DomainError):
        tilde("1:0,0,0,0,0,0", 6) + tilde("1:0,0,0,0", 4)


def test_conic_points():
    assert SurfaceModel.tilde(6).conic_points == 6
    assert SurfaceModel.tilde81().conic_points == 8
    with pytest.raises(DomainError):
        SurfaceModel.absolute(6).conic_points


def test_model_bounds():
    with pytest.raises(ValidationError):
        SurfaceModel.tilde(9)


def test_sequence_literals():
    a = MultiSeq.parse("1^2,2^1")
    assert a == MultiSeq(counts=(2, 1))
    assert seq_functionals(a) == (3, 4, 2)
    assert str(a) == "1^2,2^1"
    assert MultiSeq.parse("") == MultiSeq.parse("0") == MultiSeq.zero()
    assert MultiSeq.parse("3") == MultiSeq.unit(3)
    assert MultiSeq.unit(1, 0).is_zero


def test_sequence_arithmetic():
    a = MultiSeq.parse("1^2,2^1")
    b = MultiSeq.unit(2)
    assert a - b == MultiSeq.unit(1, 2)
    assert b.scaled(3) == MultiSeq.unit(2, 3)
    assert a.weights() == (1, 1, 2)
    assert b.is_sub(a)
    assert not a.is_sub(b)
    assert MultiSeq.from_weights([2, 1, 1]) == a


@pytest.mark.parametrize("text", ["a^1", "0^2", "1^-1", "1^x"])
def test_malformed_sequences(text):
    with pytest.raises(ParseError):
        MultiSeq.parse(text)
