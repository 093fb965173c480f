import pytest

from conic_floors.absolute.graphs import (
    GraphTerm,
    GraphVertex,
    RealGraphTerm,
    beta_splits,
    class_twist,
    enumerate_graph_terms,
    involutions,
    k_range,
    pair_multiplicity,
    real_graph_terms,
    shifted_class,
)
from conic_floors.exceptions import DomainError
from conic_floors.homology import MultiSeq


def test_class_twist():
    assert class_twist(0, 0) == {}
    assert class_twist(2, 1) == {1: 2, 2: 1, 3: 4, 4: 3, 7: 8, 8: 7}


def test_shifted_class(tilde):
    d = tilde("3:1,0,0,0,2,0,1,0", 8)
    assert str(shifted_class(d, 2)) == "3:1,0,0,0,1,0,2,0"
    assert shifted_class(d, 3) == d
    other = tilde("3:2,0,0,0,0,0,1,0", 8)
    assert str(shifted_class(other, 0)) == "3:1,0,0,0,0,0,2,0"


def test_vertex_points_count_the_extra_point(tilde81):
    on_conic = GraphVertex(d=tilde81("4:1,1,1,1,1,1,1,1,2"))
    assert on_conic.points == 1
    through_nothing = GraphVertex(d=tilde81("1:0,0,0,0,0,0,0,0,1"), beta=MultiSeq.unit(1, 2))
    assert through_nothing.points == 1


def _pair(tilde, first: str, second: str) -> GraphTerm:
    vertices = tuple(
        GraphVertex(d=tilde(text, 8), beta=MultiSeq.unit(1, 2)) for text in (first, second)
    )
    return GraphTerm(k=1, vertices=vertices, adjacency=((0, 1), (1, 0)), points=2)


def test_automorphisms(tilde):
    assert _pair(tilde, "1:1,0,0,0,0,0,0,0", "1:0,1,0,0,0,0,0,0").automorphisms() == 1
    assert _pair(tilde, "1:1,0,0,0,0,0,0,0", "1:1,0,0,0,0,0,0,0").automorphisms() == 2


def test_involutions_follow_the_twist(tilde):
    term = _pair(tilde, "1:1,0,0,0,0,0,0,0", "1:0,1,0,0,0,0,0,0")
    assert list(involutions(term, class_twist(1, 0), 1)) == [(1, 0)]
    assert list(involutions(term, class_twist(0, 0), 1)) == [(0, 1)]


def test_only_the_identity_without_conjugate_points(tilde):
    swapped = _pair(tilde, "1:1,0,0,0,0,0,0,0", "1:0,1,0,0,0,0,0,0")
    assert list(involutions(swapped, class_twist(1, 0), 0)) == []
    twins = _pair(tilde, "1:1,0,0,0,0,0,0,0", "1:1,0,0,0,0,0,0,0")
    assert sorted(involutions(twins, class_twist(0, 0), 1)) == [(0, 1), (1, 0)]
    assert list(involutions(twins, class_twist(0, 0), 0)) == [(0, 1)]


def test_no_swapped_pieces_for_real_points_only(absolute):
    d = absolute("6:2,2,2,2,2,2,2", 7)
    for kappa in range(4):
        twist = class_twist(kappa, 0)
        for k in k_range(d):
            for term in enumerate_graph_terms(d, 0, k):
                assert all(not real.pairs for real in real_graph_terms(term, twist, 0))


def test_pair_sign_is_an_integer_for_negative_intersections(tilde):
    vertex = GraphVertex(d=tilde("0:-1,0,0,0,0,0,0,0", 8), beta=MultiSeq.unit(1))
    term = GraphTerm(k=0, vertices=(vertex, vertex), adjacency=((0, 0), (0, 0)), points=0)
    real = RealGraphTerm(
        term=term, tau=(1, 0), beta_re=(MultiSeq(), MultiSeq()), beta_im=(MultiSeq(), MultiSeq())
    )
    value = pair_multiplicity(real, 0, 1, lambda v: 1)
    assert value == -1
    assert type(value) is int


def test_beta_splits():
    splits = set(beta_splits(MultiSeq.parse("1^2,2^1")))
    assert splits == {
        (MultiSeq.parse("1^2,2^1"), MultiSeq()),
        (MultiSeq.parse("2"), MultiSeq.unit(1)),
    }


def test_graph_terms_of_two_c1(absolute):
    d = absolute("6:2,2,2,2,2,2,2", 7)
    assert list(k_range(d)) == [0, 1, 2, 3]
    terms = [t for k in k_range(d) for t in enumerate_graph_terms(d, 0, k)]
    assert terms
    assert all(t.vertices[0].d.model.n == 8 for t in terms)
    assert all(t.genus == 0 for k in k_range(d) for t in enumerate_graph_terms(d, 0, k))


def test_graph_terms_need_x7_or_x8(absolute):
    with pytest.raises(DomainError):
        enumerate_graph_terms(absolute("6:2,2,2,2,2,2", 6))
