from typing import Union

from conic_floors.diagrams.base import FloorDiagram, MarkedDiagram


def to_dot(diagram: Union[FloorDiagram, MarkedDiagram], name: str = "D") -> str:
    """Graphviz text for a diagram; sources are left out.

    Degree-2 floors are white ellipses, degree-1 floors grey ones. Edges show
    their weight when it is at least 2 and, for marked diagrams, their label.
    """
    marked = diagram if isinstance(diagram, MarkedDiagram) else None
    lines = [f'digraph "{name}" {{', "  rankdir=BT;"]
    for v, deg in enumerate(diagram.floors):
        fill = "white" if deg == 2 else "grey"
        label = ""
        if marked is not None and marked.floor_labels[v] is not None:
            label = str(marked.floor_labels[v])
        lines.append(f'  f{v} [shape=ellipse, style=filled, fillcolor={fill}, label="{label}"];')
    for k, e in enumerate(diagram.edges):
        parts = []
        if marked is not None:
            parts.append(str(marked.edge_labels[k]))
        if e.weight >= 2:
            parts.append(f"w={e.weight}")
        attr = f' [label="{" ".join(parts)}"]' if parts else ""
        lines.append(f"  f{e.tail} -> f{e.head}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
