"""Finite simple undirected graphs with named vertices.

Vertices keep their first-mention order; that order is the determinism
anchor for everything downstream (reports, corpus enumeration, DOT output).
Edges are canonical (min-name, max-name) pairs by lexicographic order.

Edge-list file format (UTF-8 text):
    - one edge per line: ``<u> <v>`` separated by whitespace
    - ``vertex <u>`` declares a vertex without edges (isolated or ordering)
    - ``#`` starts a comment, anywhere in a line
Loops, duplicate edges and blank vertex names are parse errors.
"""

from __future__ import annotations

from itertools import combinations
from typing import TYPE_CHECKING, Iterable

from .errors import GraphError, ParseError

if TYPE_CHECKING:  # pragma: no cover
    from .labeling import SetLabeling

EdgeId = tuple[str, str]


def edge_id(u: str, v: str) -> EdgeId:
    """Canonical unordered edge: endpoints sorted lexicographically."""
    if u == v:
        raise GraphError(f"loop edge at vertex {u!r}")
    return (u, v) if u < v else (v, u)


def edge_text(e: EdgeId) -> str:
    return f"{e[0]}-{e[1]}"


def _check_name(name: str) -> str:
    if not name or name != name.strip() or any(c.isspace() for c in name):
        raise GraphError(f"bad vertex name {name!r}")
    if "#" in name:
        raise GraphError(f"vertex name {name!r} may not contain '#'")
    if name == "vertex":
        # reserved as the edge-list declaration keyword; a vertex with this
        # name could not round-trip through the file format
        raise GraphError("the name 'vertex' is reserved")
    return name


class Graph:
    """Immutable simple graph: ordered distinct vertex names, canonical edges."""

    __slots__ = ("_vertices", "_vertex_set", "_edges", "_adj")

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable[tuple[str, str]] = ()):
        vlist: list[str] = []
        vset: set[str] = set()
        for name in vertices:
            _check_name(name)
            if name in vset:
                raise GraphError(f"duplicate vertex {name!r}")
            vlist.append(name)
            vset.add(name)
        eset: set[EdgeId] = set()
        for u, v in edges:
            if u not in vset or v not in vset:
                missing = u if u not in vset else v
                raise GraphError(f"edge endpoint {missing!r} is not a vertex")
            e = edge_id(u, v)
            if e in eset:
                raise GraphError(f"duplicate edge {edge_text(e)}")
            eset.add(e)
        adj: dict[str, list[str]] = {v: [] for v in vlist}
        for u, v in eset:
            adj[u].append(v)
            adj[v].append(u)
        self._vertices = tuple(vlist)
        self._vertex_set = frozenset(vset)
        self._edges = tuple(sorted(eset))
        self._adj = {v: tuple(sorted(ns)) for v, ns in adj.items()}

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[EdgeId, ...]:
        """Edges in sorted canonical order."""
        return self._edges

    @property
    def num_vertices(self) -> int:
        return len(self._vertices)

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def has_vertex(self, v: str) -> bool:
        return v in self._vertex_set

    def has_edge(self, u: str, v: str) -> bool:
        return u != v and v in self._adj.get(u, ())

    def _require_vertex(self, v: str) -> None:
        if v not in self._vertex_set:
            raise GraphError(f"unknown vertex {v!r}")

    def degree(self, v: str) -> int:
        self._require_vertex(v)
        return len(self._adj[v])

    def neighbors(self, v: str) -> tuple[str, ...]:
        self._require_vertex(v)
        return self._adj[v]

    def isolated_vertices(self) -> tuple[str, ...]:
        return tuple(v for v in self._vertices if not self._adj[v])

    def adjacent_edge_pairs(self) -> list[tuple[EdgeId, EdgeId]]:
        """Each unordered pair of distinct edges sharing a vertex, once, sorted."""
        pairs: set[tuple[EdgeId, EdgeId]] = set()
        for v in self._vertices:
            incident = sorted(edge_id(v, u) for u in self._adj[v])
            for e1, e2 in combinations(incident, 2):
                pairs.add((e1, e2))
        return sorted(pairs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, self._edges))

    def __repr__(self) -> str:
        return f"Graph(vertices={len(self._vertices)}, edges={len(self._edges)})"


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format. Vertices appear in first-mention order."""
    vertices: list[str] = []
    seen: set[str] = set()
    edges: list[EdgeId] = []
    edge_set: set[EdgeId] = set()

    def mention(name: str, line_no: int) -> None:
        if not name:
            raise ParseError("blank vertex name", line_no)
        if name not in seen:
            try:
                _check_name(name)
            except GraphError as exc:
                raise ParseError(str(exc), line_no) from exc
            seen.add(name)
            vertices.append(name)

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "vertex":
            if len(tokens) != 2:
                raise ParseError("vertex declaration takes exactly one name", line_no)
            mention(tokens[1], line_no)
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected two vertex names, got {len(tokens)}", line_no)
        u, v = tokens
        if u == v:
            raise ParseError(f"loop at vertex {u!r}", line_no)
        mention(u, line_no)
        mention(v, line_no)
        e = edge_id(u, v)
        if e in edge_set:
            raise ParseError(f"duplicate edge {edge_text(e)}", line_no)
        edge_set.add(e)
        edges.append(e)
    return Graph(vertices, edges)


def format_graph(g: Graph) -> str:
    """Serialize to the edge-list format, round-trippably.

    Every vertex is declared explicitly so first-mention order survives
    re-parsing; edges follow in canonical sorted order.
    """
    lines = [f"vertex {v}" for v in g.vertices]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + ("\n" if lines else "")


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(g: Graph, labels: "SetLabeling | None" = None) -> str:
    """Render as a DOT document; set literals become label attributes."""
    if labels is not None:
        labels.require_cover(g)
    out = ["graph G {"]
    for v in g.vertices:
        if labels is not None:
            out.append(f"  {_dot_quote(v)} [label={_dot_quote(v + ': ' + labels[v].to_literal())}];")
        else:
            out.append(f"  {_dot_quote(v)};")
    for u, v in g.edges:
        if labels is not None:
            lit = (labels[u] + labels[v]).to_literal()
            out.append(f"  {_dot_quote(u)} -- {_dot_quote(v)} [label={_dot_quote(lit)}];")
        else:
            out.append(f"  {_dot_quote(u)} -- {_dot_quote(v)};")
    out.append("}")
    return "\n".join(out) + "\n"


def path_graph(n: int, prefix: str = "v") -> Graph:
    names = [f"{prefix}{i}" for i in range(n)]
    return Graph(names, [(names[i], names[i + 1]) for i in range(n - 1)])


def cycle_graph(n: int, prefix: str = "v") -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    names = [f"{prefix}{i}" for i in range(n)]
    edges = [(names[i], names[(i + 1) % n]) for i in range(n)]
    return Graph(names, edges)


def star_graph(leaves: int, prefix: str = "v") -> Graph:
    names = [f"{prefix}{i}" for i in range(leaves + 1)]
    return Graph(names, [(names[0], names[i]) for i in range(1, leaves + 1)])


def complete_graph(n: int, prefix: str = "v") -> Graph:
    names = [f"{prefix}{i}" for i in range(n)]
    return Graph(names, list(combinations(names, 2)))
