from typing import Optional

from src.ribbon.graph import FaceMarking, RibbonGraph


def to_dot(graph: RibbonGraph, marking: FaceMarking, name: str = "G", caption: Optional[str] = None) -> str:
    """Graphviz text for one graph.

    Vertices are named by their minimal half-edge. Each edge is labeled with
    the face colors on its two sides; boundary edges are dashed and their
    boundary side is labeled "b".
    """
    colors = marking.half_edge_colors(graph)
    vertex_of = {}
    for vertex in graph.vertices:
        for x in vertex:
            vertex_of[x] = f"v{vertex[0]}"

    lines = [f'graph "{name}" {{', "  node [shape=point];"]
    if caption:
        lines.append(f'  label="{caption}";')
    for vertex in graph.vertices:
        lines.append(f"  v{vertex[0]};")
    for x, y in graph.edges:
        sides = "|".join("b" if h in graph.boundary else str(colors[h]) for h in (x, y))
        style = ", style=dashed" if graph.is_boundary_edge((x, y)) else ""
        lines.append(f'  {vertex_of[x]} -- {vertex_of[y]} [label="{sides}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
