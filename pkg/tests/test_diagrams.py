from itertools import combinations

import pytest

from conic_floors.diagrams import (
    canonical_class,
    degenerate_marked,
    enumerate_diagrams,
    enumerate_marked,
    enumerate_skeletons,
)
from conic_floors.diagrams.dot import to_dot
from conic_floors.diagrams.graphs import are_equivalent
from conic_floors.exceptions import DomainError, TypeMismatchError
from conic_floors.homology import MultiSeq, SurfaceClass, SurfaceModel
from conic_floors.schema import SourceKind


@pytest.mark.parametrize("degree, genus, count", [(1, 0, 1), (2, 0, 1), (3, 0, 2), (3, 1, 1)])
def test_skeleton_counts(degree, genus, count):
    skeletons = enumerate_skeletons(degree, genus)
    assert len(skeletons) == count
    assert all(s.degree == degree and s.genus == genus for s in skeletons)


def test_degree_one_floors_are_sinks():
    for skeleton in enumerate_skeletons(4, 0):
        assert all(skeleton.floors[e.tail] == 2 for e in skeleton.edges)


def test_enumerated_diagrams_are_valid():
    diagrams = enumerate_diagrams(3, 0)
    assert diagrams
    for diagram in diagrams:
        assert diagram.is_valid()
        total = sum(s.weight for s in diagram.sources)
        assert total == 2 * diagram.degree


def test_max_source_weight_limits_sources():
    for diagram in enumerate_diagrams(2, 0, max_source_weight=1):
        assert all(s.weight == 1 for s in diagram.sources)


def test_canonical_form_agrees_with_isomorphism_oracle(tilde):
    d = tilde("3:1,1", 2)
    marked = enumerate_marked(d, 0, MultiSeq(), MultiSeq.unit(1, 4))
    assert marked
    for first, second in combinations(marked, 2):
        same = canonical_class(first) == canonical_class(second)
        assert same == are_equivalent(first, second)
    for m in marked:
        assert are_equivalent(m, m)


def test_marking_respects_the_type(tilde):
    d = tilde("2:1,1,0", 3)
    beta = MultiSeq.parse("1^2")
    for m in enumerate_marked(d, 0, MultiSeq(), beta):
        assert m.beta == beta
        assert m.alpha.is_zero
        assert m.exceptional_counts() == (1, 1, 0)
        assert m.zeta == d.degree - 1 + beta.size


def test_alpha_labels_come_first(tilde):
    d = tilde("2:0,0", 2)
    alpha = MultiSeq.parse("1^2")
    beta = MultiSeq.parse("1^2")
    for m in enumerate_marked(d, 0, alpha, beta):
        labels = sorted(s.label for s in m.sources if s.kind == SourceKind.ALPHA)
        assert labels == [1, 2]


def test_marking_type_mismatch(tilde):
    with pytest.raises(TypeMismatchError):
        enumerate_marked(tilde("2:0,0", 2), 0, MultiSeq(), MultiSeq.unit(1))


def test_marking_needs_a_conic_model():
    d = SurfaceClass.parse("2:0,0", SurfaceModel.absolute(2))
    with pytest.raises(DomainError):
        enumerate_marked(d, 0, MultiSeq(), MultiSeq.unit(1, 4))


def test_degenerate_marked(tilde):
    m = degenerate_marked(tilde("1:1,1,0,0,0,0", 6))
    assert m.floors == (1,)
    assert m.zeta == 0
    assert m.exceptional_counts() == (1, 1, 0, 0, 0, 0)
    with pytest.raises(DomainError):
        degenerate_marked(tilde("2:1,1,0,0,0,0", 6))


def test_dot_export():
    diagram = next(
        d for d in enumerate_diagrams(3, 0) if any(e.weight == 2 for e in d.edges)
    )
    text = to_dot(diagram, name="cubic")
    assert text.startswith('digraph "cubic" {')
    assert "w=2" in text
    assert "fillcolor=white" in text and "fillcolor=grey" in text
