from itertools import combinations
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from iasi.errors import CoverageError, GraphError, ParseError
from iasi.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    edge_id,
    emit_dot,
    format_graph,
    parse_graph,
    path_graph,
    star_graph,
)
from iasi.labeling import SetLabeling
from iasi.setcore import IntSet


@st.composite
def graphs(draw, max_n=6):
    n = draw(st.integers(min_value=0, max_value=max_n))
    names = [f"v{i}" for i in range(n)]
    if n < 2:
        return Graph(names, [])
    pairs = list(combinations(names, 2))
    chosen = draw(st.sets(st.sampled_from(pairs)))
    return Graph(names, chosen)


class TestConstruction:
    def test_vertex_order_is_insertion_order(self):
        g = Graph(["c", "a", "b"], [("a", "b")])
        assert g.vertices == ("c", "a", "b")

    def test_edges_canonical_and_sorted(self):
        g = Graph(["b", "a", "c"], [("c", "a"), ("b", "a")])
        assert g.edges == (("a", "b"), ("a", "c"))

    def test_loop_rejected(self):
        with pytest.raises(GraphError):
            Graph(["a"], [("a", "a")])

    def test_duplicate_edge_rejected(self):
        with pytest.raises(GraphError):
            Graph(["a", "b"], [("a", "b"), ("b", "a")])

    def test_duplicate_vertex_rejected(self):
        with pytest.raises(GraphError):
            Graph(["a", "a"], [])

    def test_unknown_endpoint_rejected(self):
        with pytest.raises(GraphError):
            Graph(["a"], [("a", "b")])

    def test_bad_names_rejected(self):
        for bad in ["", "a b", "x#y", " a"]:
            with pytest.raises(GraphError):
                Graph([bad], [])

    def test_reserved_keyword_name_rejected(self):
        # an edge line "vertex x" would re-parse as a declaration, so the
        # name cannot be allowed to exist at all
        with pytest.raises(GraphError):
            Graph(["vertex", "x"], [("vertex", "x")])
        with pytest.raises(ParseError):
            parse_graph("a vertex")


class TestParse:
    def test_path(self):
        g = parse_graph("a b\nb c")
        assert g.vertices == ("a", "b", "c")
        assert g.edges == (("a", "b"), ("b", "c"))

    def test_duplicate_edge_line_number(self):
        with pytest.raises(ParseError) as exc:
            parse_graph("a b\na b")
        assert exc.value.line == 2

    def test_reversed_duplicate_detected(self):
        with pytest.raises(ParseError):
            parse_graph("a b\nb a")

    def test_loop_line_number(self):
        with pytest.raises(ParseError) as exc:
            parse_graph("a a")
        assert exc.value.line == 1

    def test_comments_and_blanks(self):
        g = parse_graph("# header\n\na b  # trailing\nvertex z\n")
        assert g.vertices == ("a", "b", "z")
        assert g.isolated_vertices() == ("z",)

    def test_vertex_declaration_arity(self):
        with pytest.raises(ParseError):
            parse_graph("vertex a b")

    def test_wrong_token_count(self):
        with pytest.raises(ParseError):
            parse_graph("a b c")

    @given(graphs())
    def test_round_trip(self, g):
        assert parse_graph(format_graph(g)) == g

    def test_round_trip_preserves_mention_order(self):
        g = parse_graph("b a\nvertex z\na c")
        again = parse_graph(format_graph(g))
        assert again.vertices == ("b", "a", "z", "c")
        assert again == g


class TestQueries:
    def test_degree_and_neighbors(self):
        g = parse_graph("a b\nb c")
        assert g.degree("b") == 2
        assert g.neighbors("b") == ("a", "c")
        assert g.degree("a") == 1

    def test_unknown_vertex(self):
        g = parse_graph("a b")
        with pytest.raises(GraphError):
            g.degree("zz")
        with pytest.raises(GraphError):
            g.neighbors("zz")

    def test_adjacent_edge_pairs_path(self):
        g = parse_graph("a b\nb c")
        assert g.adjacent_edge_pairs() == [(("a", "b"), ("b", "c"))]

    def test_adjacent_edge_pairs_triangle(self):
        g = complete_graph(3)
        assert len(g.adjacent_edge_pairs()) == 3

    @given(graphs())
    def test_adjacent_edge_pairs_against_double_loop(self, g):
        brute = sorted(
            (e1, e2)
            for e1, e2 in combinations(g.edges, 2)
            if set(e1) & set(e2)
        )
        assert g.adjacent_edge_pairs() == brute
        assert len(brute) == sum(comb(g.degree(v), 2) for v in g.vertices)


class TestEmitDot:
    def test_plain_k2(self):
        out = emit_dot(parse_graph("a b"))
        assert '"a" -- "b";' in out
        assert out.startswith("graph G {")

    def test_labeled_k2_edge_annotation(self):
        g = parse_graph("a b")
        f = SetLabeling({"a": IntSet([1]), "b": IntSet([2])})
        out = emit_dot(g, f)
        assert "{3}" in out
        assert "{1}" in out and "{2}" in out

    def test_empty_graph(self):
        assert emit_dot(Graph()) == "graph G {\n}\n"

    def test_coverage_mismatch(self):
        g = parse_graph("a b")
        with pytest.raises(CoverageError):
            emit_dot(g, SetLabeling({"a": IntSet([1])}))


class TestFamilies:
    def test_path(self):
        g = path_graph(4)
        assert g.num_vertices == 4 and g.num_edges == 3

    def test_cycle(self):
        g = cycle_graph(4)
        assert all(g.degree(v) == 2 for v in g.vertices)

    def test_star(self):
        g = star_graph(3)
        assert g.degree("v0") == 3 and g.num_edges == 3

    def test_complete(self):
        g = complete_graph(5)
        assert g.num_edges == 10

    def test_cycle_too_small(self):
        with pytest.raises(GraphError):
            cycle_graph(2)


def test_edge_id_canonical():
    assert edge_id("b", "a") == ("a", "b")
    with pytest.raises(GraphError):
        edge_id("a", "a")
