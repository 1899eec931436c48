"""Set-labelings of graphs: validation, classification, certificates.

A labeling maps every vertex to a non-empty IntSet; each edge uv inherits
the sumset f(u) + f(v). The labeling is a valid set-indexer when both the
vertex map and the induced edge map are injective. verify() produces a full
VerificationReport with concrete witnesses for every failed check.

Per-edge classification compares the edge label's size s against the
endpoint sizes m, n:
    weak    s == max(m, n)
    strong  s == m * n
    both    both hold (forces min(m, n) == 1 and a full sumset)
    neither otherwise
The graph-level class is weak/strong when every edge is weak/strong (or
both), both when the two coincide, neither otherwise. Edgeless graphs class
as both, vacuously.

Labeling file format: one line per vertex, ``<v>: {a,b,c}``; ``#`` starts a
comment. The name is everything before the last ``:``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import BoundExceededError, CoverageError, EmptySetError, GraphError, ParseError
from .graph import EdgeId, Graph, edge_text
from .setcore import DEFAULT_UNIVERSE_BOUND, IntSet, parse_int_set, sumset

GRAPH_CLASS_WEAK = "weak"
GRAPH_CLASS_STRONG = "strong"
GRAPH_CLASS_BOTH = "both"
GRAPH_CLASS_NEITHER = "neither"


class SetLabeling:
    """Immutable map vertex name -> non-empty IntSet, in insertion order."""

    __slots__ = ("_assignments",)

    def __init__(self, assignments: Mapping[str, IntSet]):
        store: dict[str, IntSet] = {}
        for v, s in assignments.items():
            if not isinstance(s, IntSet):
                raise TypeError(f"label for {v!r} must be an IntSet, got {s!r}")
            if len(s) == 0:
                raise EmptySetError(f"label for {v!r} is empty; labels must be non-empty")
            store[v] = s
        self._assignments = store

    def __getitem__(self, v: str) -> IntSet:
        try:
            return self._assignments[v]
        except KeyError:
            raise CoverageError(f"no label assigned to vertex {v!r}") from None

    def __contains__(self, v: str) -> bool:
        return v in self._assignments

    def __len__(self) -> int:
        return len(self._assignments)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SetLabeling):
            return NotImplemented
        return self._assignments == other._assignments

    def __hash__(self) -> int:
        return hash(frozenset(self._assignments.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{v}: {s}" for v, s in self._assignments.items())
        return f"SetLabeling({{{inner}}})"

    def vertices(self) -> tuple[str, ...]:
        return tuple(self._assignments)

    def items(self) -> Iterable[tuple[str, IntSet]]:
        return self._assignments.items()

    def require_cover(self, g: Graph) -> None:
        """Raise CoverageError unless the labeled vertices are exactly V(g)."""
        have = set(self._assignments)
        want = set(g.vertices)
        if have != want:
            missing = sorted(want - have)
            extra = sorted(have - want)
            parts = []
            if missing:
                parts.append(f"unlabeled vertices: {', '.join(missing)}")
            if extra:
                parts.append(f"labels for unknown vertices: {', '.join(extra)}")
            raise CoverageError("; ".join(parts))

    def restrict_to(self, names: Iterable[str]) -> "SetLabeling":
        return SetLabeling({v: self[v] for v in names})


def parse_labeling(text: str, universe_bound: int = DEFAULT_UNIVERSE_BOUND) -> SetLabeling:
    """Parse the ``<v>: {a,b,c}`` per-line labeling format."""
    assignments: dict[str, IntSet] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError("expected '<vertex>: {a,b,c}'", line_no)
        name, _, literal = line.rpartition(":")
        name = name.strip()
        if not name:
            raise ParseError("blank vertex name", line_no)
        if name in assignments:
            raise ParseError(f"duplicate label for vertex {name!r}", line_no)
        try:
            assignments[name] = parse_int_set(literal, universe_bound)
        except (ParseError, BoundExceededError) as exc:
            raise ParseError(str(exc), line_no) from exc
    return SetLabeling(assignments)


def format_labeling(f: SetLabeling, g: Graph | None = None) -> str:
    """Serialize; vertex order follows the graph when one is given."""
    order = g.vertices if g is not None else f.vertices()
    lines = [f"{v}: {f[v].to_literal()}" for v in order]
    return "\n".join(lines) + ("\n" if lines else "")


def induced_edge_labels(g: Graph, f: SetLabeling) -> dict[EdgeId, IntSet]:
    """Map every edge uv to sumset(f(u), f(v)), in sorted edge order."""
    f.require_cover(g)
    return {e: sumset(f[e[0]], f[e[1]]) for e in g.edges}


@dataclass(frozen=True)
class EdgeReport:
    label: IntSet
    size: int
    edge_class: str


@dataclass(frozen=True)
class VerificationReport:
    """Machine-checkable certificate for one (graph, labeling) pair.

    Witnesses are the lexicographically first clashing pair; listings follow
    the graph's vertex order (vertices) and sorted edge order (edges).
    """

    vertex_injective: bool
    vertex_witness: tuple[str, str] | None
    edge_injective: bool
    edge_witness: tuple[EdgeId, EdgeId] | None
    is_iasi: bool
    per_edge: dict[EdgeId, EdgeReport]
    graph_class: str
    uniformity: int | None
    mono_indexed_vertices: tuple[str, ...]
    mono_indexed_edges: tuple[EdgeId, ...]
    isolated_vertices: tuple[str, ...]

    @property
    def is_weak_iasi(self) -> bool:
        return self.is_iasi and self.graph_class in (GRAPH_CLASS_WEAK, GRAPH_CLASS_BOTH)

    @property
    def is_strong_iasi(self) -> bool:
        return self.is_iasi and self.graph_class in (GRAPH_CLASS_STRONG, GRAPH_CLASS_BOTH)

    def to_text(self) -> str:
        def fmt_list(items) -> str:
            items = list(items)
            return ", ".join(items) if items else "-"

        lines = [
            f"is_iasi: {_bool(self.is_iasi)}",
            f"vertex_injective: {_bool(self.vertex_injective)}",
            "vertex_witness: " + (" ".join(self.vertex_witness) if self.vertex_witness else "-"),
            f"edge_injective: {_bool(self.edge_injective)}",
            "edge_witness: "
            + (" ".join(edge_text(e) for e in self.edge_witness) if self.edge_witness else "-"),
            f"graph_class: {self.graph_class}",
            f"uniformity: {self.uniformity if self.uniformity is not None else '-'}",
            f"mono_indexed_vertices: {fmt_list(self.mono_indexed_vertices)}",
            f"mono_indexed_edges: {fmt_list(edge_text(e) for e in self.mono_indexed_edges)}",
            f"isolated_vertices: {fmt_list(self.isolated_vertices)}",
            f"edges: {len(self.per_edge)}",
        ]
        for e, er in self.per_edge.items():
            lines.append(
                f"edge {edge_text(e)}: label={er.label.to_literal()} size={er.size} class={er.edge_class}"
            )
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "vertex_injective": self.vertex_injective,
            "vertex_witness": list(self.vertex_witness) if self.vertex_witness else None,
            "edge_injective": self.edge_injective,
            "edge_witness": [list(e) for e in self.edge_witness] if self.edge_witness else None,
            "is_iasi": self.is_iasi,
            "graph_class": self.graph_class,
            "uniformity": self.uniformity,
            "mono_indexed_vertices": list(self.mono_indexed_vertices),
            "mono_indexed_edges": [list(e) for e in self.mono_indexed_edges],
            "isolated_vertices": list(self.isolated_vertices),
            "per_edge": [
                {
                    "edge": list(e),
                    "label": list(er.label.elements),
                    "size": er.size,
                    "class": er.edge_class,
                }
                for e, er in self.per_edge.items()
            ],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "VerificationReport":
        per_edge = {}
        for item in d["per_edge"]:
            e = (item["edge"][0], item["edge"][1])
            per_edge[e] = EdgeReport(
                label=IntSet(item["label"]),
                size=item["size"],
                edge_class=item["class"],
            )
        return cls(
            vertex_injective=d["vertex_injective"],
            vertex_witness=tuple(d["vertex_witness"]) if d["vertex_witness"] else None,
            edge_injective=d["edge_injective"],
            edge_witness=(
                tuple(tuple(e) for e in d["edge_witness"]) if d["edge_witness"] else None
            ),
            is_iasi=d["is_iasi"],
            per_edge=per_edge,
            graph_class=d["graph_class"],
            uniformity=d["uniformity"],
            mono_indexed_vertices=tuple(d["mono_indexed_vertices"]),
            mono_indexed_edges=tuple(tuple(e) for e in d["mono_indexed_edges"]),
            isolated_vertices=tuple(d["isolated_vertices"]),
        )


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _classify_edge(m: int, n: int, s: int) -> str:
    weak = s == max(m, n)
    strong = s == m * n
    if weak and strong:
        return GRAPH_CLASS_BOTH
    if weak:
        return GRAPH_CLASS_WEAK
    if strong:
        return GRAPH_CLASS_STRONG
    return GRAPH_CLASS_NEITHER


def verify(g: Graph, f: SetLabeling) -> VerificationReport:
    """Check injectivity of f and of its induced edge map, and classify.

    A labeling that fails is a valid negative result, reported with
    witnesses; only a graph/labeling coverage mismatch raises.
    """
    f.require_cover(g)
    edge_labels = induced_edge_labels(g, f)

    vertex_witness = None
    names = sorted(g.vertices)
    for i, u in enumerate(names):
        if vertex_witness is not None:
            break
        for v in names[i + 1 :]:
            if f[u] == f[v]:
                vertex_witness = (u, v)
                break
    vertex_injective = vertex_witness is None

    edge_witness = None
    sorted_edges = sorted(edge_labels)
    for i, e1 in enumerate(sorted_edges):
        if edge_witness is not None:
            break
        for e2 in sorted_edges[i + 1 :]:
            if edge_labels[e1] == edge_labels[e2]:
                edge_witness = (e1, e2)
                break
    edge_injective = edge_witness is None

    per_edge: dict[EdgeId, EdgeReport] = {}
    for e in g.edges:
        lab = edge_labels[e]
        per_edge[e] = EdgeReport(
            label=lab,
            size=len(lab),
            edge_class=_classify_edge(len(f[e[0]]), len(f[e[1]]), len(lab)),
        )

    all_weak = all(er.edge_class in (GRAPH_CLASS_WEAK, GRAPH_CLASS_BOTH) for er in per_edge.values())
    all_strong = all(
        er.edge_class in (GRAPH_CLASS_STRONG, GRAPH_CLASS_BOTH) for er in per_edge.values()
    )
    if all_weak and all_strong:
        graph_class = GRAPH_CLASS_BOTH
    elif all_weak:
        graph_class = GRAPH_CLASS_WEAK
    elif all_strong:
        graph_class = GRAPH_CLASS_STRONG
    else:
        graph_class = GRAPH_CLASS_NEITHER

    sizes = {er.size for er in per_edge.values()}
    uniformity = sizes.pop() if len(sizes) == 1 else None

    return VerificationReport(
        vertex_injective=vertex_injective,
        vertex_witness=vertex_witness,
        edge_injective=edge_injective,
        edge_witness=edge_witness,
        is_iasi=vertex_injective and edge_injective,
        per_edge=per_edge,
        graph_class=graph_class,
        uniformity=uniformity,
        mono_indexed_vertices=tuple(v for v in g.vertices if len(f[v]) == 1),
        mono_indexed_edges=tuple(e for e in g.edges if per_edge[e].size == 1),
        isolated_vertices=g.isolated_vertices(),
    )


def is_k_uniform(report: VerificationReport, k: int) -> bool:
    """True iff every edge label has size k (vacuously true when edgeless)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return all(er.size == k for er in report.per_edge.values())


def is_l_uniformly_set_indexed(g: Graph, f: SetLabeling, l: int) -> bool:
    """True iff every vertex label has size l."""
    if l < 1:
        raise ValueError(f"l must be >= 1, got {l}")
    f.require_cover(g)
    return all(len(f[v]) == l for v in g.vertices)


def mono_indexed_elements(report: VerificationReport) -> tuple[tuple[str, ...], tuple[EdgeId, ...]]:
    """The singleton-labeled vertices and edges recorded in the report."""
    return report.mono_indexed_vertices, report.mono_indexed_edges


def canonical_iasi(g: Graph, universe_bound: int = DEFAULT_UNIVERSE_BOUND) -> SetLabeling:
    """Assign f(v_i) = {2^i} in vertex order.

    Distinct singletons whose pairwise sums 2^i + 2^j are distinct across
    distinct unordered index pairs (uniqueness of binary expansion), so the
    result always verifies; every element is mono-indexed.
    """
    n = g.num_vertices
    if n >= 2 and 2 ** (n - 1) + 2 ** (n - 2) > universe_bound:
        raise BoundExceededError(
            f"canonical labeling of {n} vertices needs sums up to "
            f"{2 ** (n - 1) + 2 ** (n - 2)}, above universe bound {universe_bound}"
        )
    if n >= 1 and 2 ** (n - 1) > universe_bound:
        raise BoundExceededError(
            f"canonical labeling of {n} vertices needs elements up to "
            f"{2 ** (n - 1)}, above universe bound {universe_bound}"
        )
    return SetLabeling(
        {v: IntSet((1 << i,), universe_bound) for i, v in enumerate(g.vertices)}
    )


def restrict(g: Graph, f: SetLabeling, h: Graph) -> SetLabeling:
    """Restrict f to the subgraph h; raises unless h really is a subgraph of g."""
    f.require_cover(g)
    for v in h.vertices:
        if not g.has_vertex(v):
            raise GraphError(f"vertex {v!r} of the subgraph is not in the host graph")
    host_edges = set(g.edges)
    for e in h.edges:
        if e not in host_edges:
            raise GraphError(f"edge {edge_text(e)} of the subgraph is not in the host graph")
    return f.restrict_to(h.vertices)
