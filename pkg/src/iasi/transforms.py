"""Derived-graph constructions and the labelings they inherit.

Each transform returns a TransformResult bundling the new graph, a
provenance map from every new vertex back to its origin, and, when a source
labeling was supplied, the induced labeling together with a fresh
VerificationReport. Induced labelings are re-verified, never trusted: the
attached report is the ground truth, and an invalid induced labeling is a
recorded outcome rather than an error.

New-vertex naming is fixed: an edge-origin vertex is ``e:<u>-<v>`` (canonical
endpoint order) and a contraction merge is ``m:<u>+<v>``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphError
from .graph import EdgeId, Graph, edge_id, edge_text
from .labeling import SetLabeling, VerificationReport, sumset, verify

Origin = tuple[str, ...]  # ("vertex", v) | ("edge", u, v) | ("merged", u, v)


@dataclass(frozen=True)
class TransformResult:
    graph: Graph
    provenance: dict[str, Origin]
    induced_labeling: SetLabeling | None = None
    report: VerificationReport | None = None


def format_provenance(provenance: dict[str, Origin]) -> str:
    """One ``<new-name>: <kind> <names...>`` line per vertex, sidecar format."""
    lines = [f"{name}: {' '.join(origin)}" for name, origin in provenance.items()]
    return "\n".join(lines) + ("\n" if lines else "")


def _edge_vertex_name(e: EdgeId) -> str:
    return f"e:{e[0]}-{e[1]}"


def line_graph(g: Graph, f: SetLabeling | None = None) -> TransformResult:
    """Vertices are g's edges; adjacency is sharing an endpoint in g.

    An edgeless g yields the empty line graph. With f, each new vertex gets
    the label of the edge it represents.
    """
    vertices = [_edge_vertex_name(e) for e in g.edges]
    if len(set(vertices)) != len(vertices) or any(g.has_vertex(v) for v in vertices):
        raise GraphError("derived vertex names collide; rename source vertices")
    edges = [
        (_edge_vertex_name(e1), _edge_vertex_name(e2)) for e1, e2 in g.adjacent_edge_pairs()
    ]
    lg = Graph(vertices, edges)
    provenance: dict[str, Origin] = {
        _edge_vertex_name(e): ("edge", e[0], e[1]) for e in g.edges
    }
    labeling = None
    report = None
    if f is not None:
        labeling = induce_line_labeling(g, f)
        report = verify(lg, labeling)
    return TransformResult(graph=lg, provenance=provenance, induced_labeling=labeling, report=report)


def induce_line_labeling(g: Graph, f: SetLabeling) -> SetLabeling:
    """Label each line-graph vertex with its source edge's label f(u) + f(v)."""
    f.require_cover(g)
    return SetLabeling(
        {_edge_vertex_name(e): sumset(f[e[0]], f[e[1]]) for e in g.edges}
    )


def total_graph(g: Graph, f: SetLabeling | None = None) -> TransformResult:
    """Vertices are g's vertices and edges; adjacency is adjacency or incidence."""
    edge_names = {e: _edge_vertex_name(e) for e in g.edges}
    if any(g.has_vertex(name) for name in edge_names.values()):
        raise GraphError("derived vertex names collide; rename source vertices")
    vertices = list(g.vertices) + [edge_names[e] for e in g.edges]
    edges: list[tuple[str, str]] = []
    edges.extend(g.edges)
    edges.extend((edge_names[e1], edge_names[e2]) for e1, e2 in g.adjacent_edge_pairs())
    for e in g.edges:
        edges.append((e[0], edge_names[e]))
        edges.append((e[1], edge_names[e]))
    tg = Graph(vertices, edges)
    provenance: dict[str, Origin] = {v: ("vertex", v) for v in g.vertices}
    for e in g.edges:
        provenance[edge_names[e]] = ("edge", e[0], e[1])
    labeling = None
    report = None
    if f is not None:
        labeling = induce_total_labeling(g, f)
        report = verify(tg, labeling)
    return TransformResult(graph=tg, provenance=provenance, induced_labeling=labeling, report=report)


def induce_total_labeling(g: Graph, f: SetLabeling) -> SetLabeling:
    """Copy f on vertex-origin vertices, edge labels on edge-origin vertices."""
    f.require_cover(g)
    assignments = {v: f[v] for v in g.vertices}
    for e in g.edges:
        assignments[_edge_vertex_name(e)] = sumset(f[e[0]], f[e[1]])
    return SetLabeling(assignments)


def contract_edge(g: Graph, e: tuple[str, str], f: SetLabeling | None = None) -> TransformResult:
    """Merge the endpoints of e; coalesce parallel edges, drop loops.

    The merged vertex is named ``m:<u>+<v>`` and, when f is given, carries
    the deleted edge's label f(u) + f(v); all other vertices keep f.
    """
    e = edge_id(*e)
    if e not in set(g.edges):
        raise GraphError(f"unknown edge {edge_text(e)}")
    u, v = e
    merged = f"m:{u}+{v}"
    if g.has_vertex(merged):
        raise GraphError(f"merged vertex name {merged!r} collides; rename source vertices")

    def rename(x: str) -> str:
        return merged if x in (u, v) else x

    vertices: list[str] = []
    for x in g.vertices:
        nx = rename(x)
        if nx not in vertices:
            vertices.append(nx)
    new_edges: set[EdgeId] = set()
    for a, b in g.edges:
        na, nb = rename(a), rename(b)
        if na == nb:
            continue
        new_edges.add(edge_id(na, nb))
    cg = Graph(vertices, sorted(new_edges))
    provenance: dict[str, Origin] = {
        x: (("merged", u, v) if x == merged else ("vertex", x)) for x in vertices
    }
    labeling = None
    report = None
    if f is not None:
        f.require_cover(g)
        assignments = {merged: sumset(f[u], f[v])}
        for x in g.vertices:
            if x not in (u, v):
                assignments[x] = f[x]
        labeling = SetLabeling({x: assignments[x] for x in vertices})
        report = verify(cg, labeling)
    return TransformResult(graph=cg, provenance=provenance, induced_labeling=labeling, report=report)


def topological_reduction(g: Graph, v: str, f: SetLabeling | None = None) -> TransformResult:
    """Remove a degree-2 vertex with non-adjacent neighbors, join the neighbors.

    The surviving vertices keep their labels; the new edge's label comes out
    as f(u) + f(w) in the re-verification.
    """
    if g.degree(v) != 2:
        raise GraphError(f"vertex {v!r} has degree {g.degree(v)}, need exactly 2")
    u, w = g.neighbors(v)
    if g.has_edge(u, w):
        raise GraphError(f"neighbors {u!r} and {w!r} are already adjacent")
    vertices = [x for x in g.vertices if x != v]
    edges = [e for e in g.edges if v not in e]
    edges.append(edge_id(u, w))
    rg = Graph(vertices, edges)
    provenance: dict[str, Origin] = {x: ("vertex", x) for x in vertices}
    labeling = None
    report = None
    if f is not None:
        f.require_cover(g)
        labeling = f.restrict_to(vertices)
        report = verify(rg, labeling)
    return TransformResult(graph=rg, provenance=provenance, induced_labeling=labeling, report=report)
