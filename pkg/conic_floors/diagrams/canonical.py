from typing import Mapping, Optional, Tuple

from conic_floors.diagrams.base import MarkedDiagram
from conic_floors.schema import SourceKind


def floor_names(marked: MarkedDiagram, relabel: Mapping[int, int]) -> Tuple[tuple, ...]:
    incoming = [[] for _ in marked.floors]
    for e, label in zip(marked.edges, marked.edge_labels):
        incoming[e.head].append(relabel.get(label, label))
    for s in marked.sources:
        if s.label is not None:
            incoming[s.floor].append(relabel.get(s.label, s.label))
    names = []
    for v, label in enumerate(marked.floor_labels):
        if label is not None:
            names.append(("L", relabel.get(label, label)))
        else:
            names.append(("U", tuple(sorted(incoming[v]))))
    return tuple(names)


def canonical_class(
    marked: MarkedDiagram,
    relabel: Optional[Mapping[int, int]] = None,
    reclass: Optional[Mapping[int, int]] = None,
) -> bytes:
    """Byte string equal for two marked diagrams iff they are equivalent.

    Labelled elements are named by their label and a degree-1 floor by the
    labels entering it, so the string does not depend on floor numbering.
    ``relabel`` and ``reclass`` apply a label involution and a permutation of
    the exceptional classes before naming, which is how reality is tested.
    Exceptional sources whose class is not assigned yet count as class 0.
    """
    relabel = relabel or {}
    reclass = reclass or {}
    names = floor_names(marked, relabel)
    items = []
    for e, label in zip(marked.edges, marked.edge_labels):
        items.append(("E", relabel.get(label, label), names[e.tail], names[e.head], e.weight))
    classes = [[] for _ in marked.floors]
    for s in marked.sources:
        if s.kind == SourceKind.EXCEPTIONAL:
            i = s.exceptional or 0
            classes[s.floor].append(reclass.get(i, i))
        else:
            tag = "A" if s.kind == SourceKind.ALPHA else "B"
            items.append((tag, relabel.get(s.label, s.label), names[s.floor], s.weight))
    for v, deg in enumerate(marked.floors):
        items.append(("F", names[v], deg, tuple(sorted(classes[v]))))
    return repr(tuple(sorted(items, key=repr))).encode()
