"""Corpus generation and the desk-scale claim-adjudication suite.

The corpus holds one representative of every connected graph with 2..n_max
vertices (augment each smaller representative by one vertex joined to every
non-empty subset, dedupe by minimum adjacency form over all permutations),
optionally extended by named families above n_max. Each graph carries a
bundle of labelings: the canonical power-of-two labeling, whatever bounded
search finds per mode, and a few seeded random labelings. Enumeration is
seed-independent; the seed only drives the random labeling sampling.

run_suite evaluates thirteen checks, T1..T13, about how labelings behave on
subgraphs, contractions, reductions, line and total graphs, and finite
ground sets. Claims whose general statement fails on an instance are
reported with the minimal counterexample found, not hidden: the suite's
output is an adjudication record. Every counterexample is serializable and
replays to the identical observation. Nothing in the report depends on
wall-clock time, so identical inputs give byte-identical reports.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations

from .graph import (
    Graph,
    complete_graph,
    cycle_graph,
    edge_id,
    format_graph,
    parse_graph,
    path_graph,
    star_graph,
)
from .labeling import (
    SetLabeling,
    VerificationReport,
    canonical_iasi,
    format_labeling,
    parse_labeling,
    restrict,
    verify,
)
from .search import (
    MODES,
    SearchSpec,
    find_labeling,
    ground_set_lower_bound,
    prefix_ground,
    uniform_ground_set_lower_bound,
)
from .setcore import IntSet
from .transforms import contract_edge, line_graph, topological_reduction, total_graph

MAX_CORPUS_N = 6
MAX_FAMILY_CAP = 12  # canonical power-of-two labels overflow the default bound past this
CORPUS_SEARCH_GROUND = 3  # bounded-search ladder rung used for corpus labelings
SEARCH_VERTEX_CAP = 6  # search-based claims only run on derived graphs this small
RANDOM_LABELINGS_PER_GRAPH = 3


# ---------------------------------------------------------------------------
# Small-graph enumeration


def _canonical_edges(n: int, edges: tuple[tuple[int, int], ...]) -> tuple[tuple[int, int], ...]:
    """Minimum edge tuple over all vertex permutations; isomorphism invariant."""
    best = None
    for perm in permutations(range(n)):
        mapped = tuple(
            sorted((perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u]) for u, v in edges)
        )
        if best is None or mapped < best:
            best = mapped
    return best


@lru_cache(maxsize=None)
def _connected_representatives(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Canonical edge tuples of all connected graphs on n vertices.

    Every connected graph arises by attaching one vertex to a non-empty
    neighbor subset of some smaller connected graph (remove a non-cut
    vertex), so augmenting the (n-1)-representatives covers everything up to
    isomorphism.
    """
    if n < 1 or n > MAX_CORPUS_N + 2:
        raise ValueError(f"enumeration supports 1..{MAX_CORPUS_N + 2} vertices, got {n}")
    if n == 1:
        return ((),)
    if n == 2:
        return (((0, 1),),)
    seen: set[tuple[tuple[int, int], ...]] = set()
    for smaller in _connected_representatives(n - 1):
        for r in range(1, n):
            for subset in combinations(range(n - 1), r):
                edges = tuple(smaller) + tuple((s, n - 1) for s in subset)
                seen.add(_canonical_edges(n, edges))
    return tuple(sorted(seen, key=lambda e: (len(e), e)))


def connected_graph_representatives(n: int) -> list[Graph]:
    """One named Graph per isomorphism class of connected graphs on n vertices."""
    out = []
    for edges in _connected_representatives(n):
        names = [f"v{i}" for i in range(n)]
        out.append(Graph(names, [(names[u], names[v]) for u, v in edges]))
    return out


# ---------------------------------------------------------------------------
# Corpus


@dataclass(frozen=True)
class CorpusLabeling:
    graph_name: str
    kind: str
    labeling: SetLabeling
    report: VerificationReport


@dataclass(frozen=True)
class Corpus:
    n_max: int
    seed: int
    family_cap: int
    graphs: tuple[tuple[str, Graph], ...]
    labelings: dict[str, tuple[CorpusLabeling, ...]]

    def graph(self, name: str) -> Graph:
        for gname, g in self.graphs:
            if gname == name:
                return g
        raise KeyError(name)

    def iasi_labelings(self) -> list[CorpusLabeling]:
        return [cl for bundle in self.labelings.values() for cl in bundle if cl.report.is_iasi]

    def labeling_count(self) -> int:
        return sum(len(bundle) for bundle in self.labelings.values())


def _family_graphs(n_max: int, family_cap: int) -> list[tuple[str, Graph]]:
    """Named path/cycle/star/complete families strictly above the enumeration.

    Sizes up to n_max are already present (up to isomorphism) in the
    enumerated representatives, so only larger members are added.
    """
    out: list[tuple[str, Graph]] = []
    for k in range(n_max + 1, family_cap + 1):
        out.append((f"P{k}", path_graph(k)))
        out.append((f"C{k}", cycle_graph(k)))
        out.append((f"K1_{k - 1}", star_graph(k - 1)))
        out.append((f"K{k}", complete_graph(k)))
    return out


def _sample_labeling(g: Graph, rng: random.Random) -> SetLabeling:
    assignments = {}
    for v in g.vertices:
        size = rng.randint(1, 3)
        assignments[v] = IntSet(sorted(rng.sample(range(6), size)))
    return SetLabeling(assignments)


def generate_corpus(n_max: int = 5, seed: int = 0, family_cap: int | None = None) -> Corpus:
    """Deterministic corpus of graphs and labelings.

    family_cap defaults to n_max (no extra families); raise it to append
    paths, cycles, stars and complete graphs up to that many vertices.
    """
    if not 2 <= n_max <= MAX_CORPUS_N:
        raise ValueError(f"n_max must be in 2..{MAX_CORPUS_N}, got {n_max}")
    if family_cap is None:
        family_cap = n_max
    if not n_max <= family_cap <= MAX_FAMILY_CAP:
        raise ValueError(f"family_cap must be in {n_max}..{MAX_FAMILY_CAP}, got {family_cap}")

    graphs: list[tuple[str, Graph]] = []
    for n in range(2, n_max + 1):
        for i, g in enumerate(connected_graph_representatives(n), start=1):
            graphs.append((f"g{n}.{i}", g))
    graphs.extend(_family_graphs(n_max, family_cap))

    rng = random.Random(seed)
    labelings: dict[str, tuple[CorpusLabeling, ...]] = {}
    for name, g in graphs:
        bundle: list[CorpusLabeling] = []

        def add(kind: str, lab: SetLabeling) -> None:
            bundle.append(CorpusLabeling(name, kind, lab, verify(g, lab)))

        add("canonical", canonical_iasi(g))
        for mode in MODES:
            spec = SearchSpec(mode=mode, ground=prefix_ground(CORPUS_SEARCH_GROUND))
            outcome = find_labeling(g, spec)
            if outcome.found:
                add(f"search-{mode}", outcome.labeling)
        for i in range(RANDOM_LABELINGS_PER_GRAPH):
            add(f"random{i}", _sample_labeling(g, rng))
        labelings[name] = tuple(bundle)
    return Corpus(
        n_max=n_max, seed=seed, family_cap=family_cap, graphs=tuple(graphs), labelings=labelings
    )


# ---------------------------------------------------------------------------
# Claim evaluators
#
# Every evaluator is a pure function (graph, source labeling or None, params)
# -> JSON-able observation dict with an "ok" key. Counterexample replay
# re-runs the evaluator on the serialized instance and must reproduce the
# observation exactly.


def _obs(ok: bool, **extra) -> dict:
    d = {"ok": bool(ok)}
    d.update(extra)
    return d


def _eval_canonical(g: Graph, f, params) -> dict:
    report = verify(g, canonical_iasi(g))
    return _obs(report.is_iasi, is_iasi=report.is_iasi)


def _eval_restriction(g: Graph, f: SetLabeling, params) -> dict:
    if "delete_edge" in params:
        u, v = params["delete_edge"].split()
        e = edge_id(u, v)
        h = Graph(g.vertices, [x for x in g.edges if x != e])
    else:
        v = params["delete_vertex"]
        h = Graph([x for x in g.vertices if x != v], [e for e in g.edges if v not in e])
    report = verify(h, restrict(g, f, h))
    return _obs(report.is_iasi, is_iasi=report.is_iasi)


def _eval_contraction(g: Graph, f: SetLabeling, params) -> dict:
    u, v = params["edge"].split()
    result = contract_edge(g, (u, v), f)
    r = result.report
    return _obs(
        r.is_iasi,
        is_iasi=r.is_iasi,
        vertex_injective=r.vertex_injective,
        edge_injective=r.edge_injective,
    )


def _eval_reduction(g: Graph, f: SetLabeling, params) -> dict:
    result = topological_reduction(g, params["vertex"], f)
    r = result.report
    return _obs(
        r.is_iasi,
        is_iasi=r.is_iasi,
        vertex_injective=r.vertex_injective,
        edge_injective=r.edge_injective,
    )


def _eval_line_vertex_injective(g: Graph, f: SetLabeling, params) -> dict:
    r = line_graph(g, f).report
    return _obs(r.vertex_injective, vertex_injective=r.vertex_injective)


def _eval_line_iasi(g: Graph, f: SetLabeling, params) -> dict:
    r = line_graph(g, f).report
    return _obs(
        r.is_iasi,
        is_iasi=r.is_iasi,
        vertex_injective=r.vertex_injective,
        edge_injective=r.edge_injective,
    )


def _eval_total_vertex_injective(g: Graph, f: SetLabeling, params) -> dict:
    r = total_graph(g, f).report
    return _obs(r.vertex_injective, vertex_injective=r.vertex_injective)


def _eval_total_iasi(g: Graph, f: SetLabeling, params) -> dict:
    r = total_graph(g, f).report
    return _obs(
        r.is_iasi,
        is_iasi=r.is_iasi,
        vertex_injective=r.vertex_injective,
        edge_injective=r.edge_injective,
    )


def _reduction_sides(g: Graph, f: SetLabeling, v: str) -> tuple[bool, bool, bool]:
    """(reduced labeling is weak, v mono-indexed, an edge at v mono-indexed)."""
    source = verify(g, f)
    lhs = topological_reduction(g, v, f).report.is_weak_iasi
    v_mono = len(f[v]) == 1
    u, w = g.neighbors(v)
    mono_edges = set(source.mono_indexed_edges)
    edge_mono = edge_id(v, u) in mono_edges or edge_id(v, w) in mono_edges
    return lhs, v_mono, edge_mono


def _eval_t7_disjunction(g: Graph, f: SetLabeling, params) -> dict:
    lhs, v_mono, edge_mono = _reduction_sides(g, f, params["vertex"])
    rhs = (not v_mono) or edge_mono
    return _obs(lhs == rhs, lhs_weak=lhs, v_mono=v_mono, incident_edge_mono=edge_mono, rhs=rhs)


def _eval_t7_v_not_mono(g: Graph, f: SetLabeling, params) -> dict:
    lhs, v_mono, edge_mono = _reduction_sides(g, f, params["vertex"])
    rhs = not v_mono
    return _obs(lhs == rhs, lhs_weak=lhs, v_mono=v_mono, incident_edge_mono=edge_mono, rhs=rhs)


def _eval_t7_edge_mono(g: Graph, f: SetLabeling, params) -> dict:
    lhs, v_mono, edge_mono = _reduction_sides(g, f, params["vertex"])
    rhs = edge_mono
    return _obs(lhs == rhs, lhs_weak=lhs, v_mono=v_mono, incident_edge_mono=edge_mono, rhs=rhs)


def _adjacent_pairs_mono(g: Graph, report: VerificationReport) -> bool:
    mono = set(report.mono_indexed_edges)
    return all(e1 in mono or e2 in mono for e1, e2 in g.adjacent_edge_pairs())


@lru_cache(maxsize=None)
def _bounded_search_found(g: Graph, mode: str, ground_size: int) -> bool:
    outcome = find_labeling(g, SearchSpec(mode=mode, ground=prefix_ground(ground_size)))
    return outcome.found


def _eval_t8_induced(g: Graph, f: SetLabeling, params) -> dict:
    lhs = line_graph(g, f).report.is_weak_iasi
    rhs = _adjacent_pairs_mono(g, verify(g, f))
    return _obs(lhs == rhs, induced_weak=lhs, adjacent_pairs_mono=rhs)


def _eval_t8_search(g: Graph, f: SetLabeling, params) -> dict:
    lhs = _bounded_search_found(line_graph(g).graph, "weak", int(params["ground"]))
    rhs = _adjacent_pairs_mono(g, verify(g, f))
    return _obs(lhs == rhs, search_found_weak=lhs, adjacent_pairs_mono=rhs)


def _eval_t9_induced(g: Graph, f: SetLabeling, params) -> dict:
    lhs = total_graph(g, f).report.is_weak_iasi
    rhs = verify(g, f).uniformity == 1
    return _obs(lhs == rhs, induced_weak=lhs, source_1_uniform=rhs)


def _eval_t9_search(g: Graph, f: SetLabeling, params) -> dict:
    lhs = _bounded_search_found(total_graph(g).graph, "weak", int(params["ground"]))
    rhs = verify(g, f).uniformity == 1
    return _obs(lhs == rhs, search_found_weak=lhs, source_1_uniform=rhs)


def _eval_t10_induced(g: Graph, f: SetLabeling, params) -> dict:
    r = line_graph(g, f).report
    return _obs(not r.is_strong_iasi, induced_strong=r.is_strong_iasi, is_iasi=r.is_iasi)


def _eval_t10_search(g: Graph, f: SetLabeling, params) -> dict:
    found = _bounded_search_found(line_graph(g).graph, "strong", int(params["ground"]))
    return _obs(not found, search_found_strong=found)


def _eval_t11_induced(g: Graph, f: SetLabeling, params) -> dict:
    r = total_graph(g, f).report
    return _obs(not r.is_strong_iasi, induced_strong=r.is_strong_iasi, is_iasi=r.is_iasi)


def _eval_t11_search(g: Graph, f: SetLabeling, params) -> dict:
    found = _bounded_search_found(total_graph(g).graph, "strong", int(params["ground"]))
    return _obs(not found, search_found_strong=found)


def _eval_t12(g: Graph, f, params) -> dict:
    m = int(params["ground"])
    outcome = find_labeling(g, SearchSpec(mode="iasi", ground=prefix_ground(m)))
    return _obs(
        outcome.status == "exhausted", status=outcome.status, nodes=outcome.nodes_expanded
    )


def _eval_t13(g: Graph, f, params) -> dict:
    m = int(params["ground"])
    l = int(params["uniform"])
    outcome = find_labeling(
        g, SearchSpec(mode="iasi", ground=prefix_ground(m), uniform_vertex_size=l)
    )
    return _obs(
        outcome.status == "exhausted", status=outcome.status, nodes=outcome.nodes_expanded
    )


_EVALUATORS = {
    ("T1", "canonical-verifies"): _eval_canonical,
    ("T2", "restriction-verifies"): _eval_restriction,
    ("T3", "contraction-verifies"): _eval_contraction,
    ("T4", "reduction-verifies"): _eval_reduction,
    ("T5", "vertex-injective"): _eval_line_vertex_injective,
    ("T5", "iasi"): _eval_line_iasi,
    ("T6", "vertex-injective"): _eval_total_vertex_injective,
    ("T6", "iasi"): _eval_total_iasi,
    ("T7", "iff-disjunction"): _eval_t7_disjunction,
    ("T7", "iff-vertex-not-mono"): _eval_t7_v_not_mono,
    ("T7", "iff-incident-edge-mono"): _eval_t7_edge_mono,
    ("T8", "induced-iff"): _eval_t8_induced,
    ("T8", "search-iff"): _eval_t8_search,
    ("T9", "induced-iff"): _eval_t9_induced,
    ("T9", "search-iff"): _eval_t9_search,
    ("T10", "induced-never-strong"): _eval_t10_induced,
    ("T10", "search-never-strong"): _eval_t10_search,
    ("T11", "induced-never-strong"): _eval_t11_induced,
    ("T11", "search-never-strong"): _eval_t11_search,
    ("T12", "prefix-below-floor-exhausts"): _eval_t12,
    ("T13", "uniform-below-floor-exhausts"): _eval_t13,
}

THEOREM_DESCRIPTIONS = {
    "T1": "the power-of-two canonical labeling verifies on every corpus graph",
    "T2": "restrictions to one-edge- and one-vertex-deleted subgraphs stay valid",
    "T3": "contracting an edge and labeling the merge with that edge's label stays valid",
    "T4": "removing a degree-2 vertex with non-adjacent neighbors and joining them stays valid",
    "T5": "the line graph inherits a valid labeling from the edge labels",
    "T6": "the total graph inherits a valid labeling from the vertex and edge labels",
    "T7": "degree-2 reduction keeps weakness iff the removed vertex is not mono-indexed "
    "or an incident edge is",
    "T8": "the line graph is weakly labelable iff every adjacent edge pair has a "
    "mono-indexed member",
    "T9": "the total graph is weakly labelable iff every source edge label is a singleton",
    "T10": "a line graph derived from a strong labeling admits no strong labeling",
    "T11": "a total graph derived from a strong labeling admits no strong labeling",
    "T12": "no labeling exists on a ground prefix below the log2 floor",
    "T13": "no uniform-size vertex labeling exists below the binomial floor",
}

THEOREM_IDS = tuple(f"T{i}" for i in range(1, 14))


# ---------------------------------------------------------------------------
# Suite plumbing


@dataclass(frozen=True)
class Counterexample:
    theorem: str
    claim: str
    graph_name: str
    labeling_kind: str | None
    graph_text: str
    labeling_text: str | None
    params: dict[str, str]
    observed: dict

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "claim": self.claim,
            "graph_name": self.graph_name,
            "labeling_kind": self.labeling_kind,
            "graph": self.graph_text,
            "labeling": self.labeling_text,
            "params": dict(self.params),
            "observed": dict(self.observed),
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "Counterexample":
        return cls(
            theorem=d["theorem"],
            claim=d["claim"],
            graph_name=d["graph_name"],
            labeling_kind=d["labeling_kind"],
            graph_text=d["graph"],
            labeling_text=d["labeling"],
            params=dict(d["params"]),
            observed=dict(d["observed"]),
        )


def replay_counterexample(ce: Counterexample) -> dict:
    """Re-run the claim on the serialized instance; returns a fresh observation."""
    g = parse_graph(ce.graph_text)
    f = parse_labeling(ce.labeling_text) if ce.labeling_text is not None else None
    evaluator = _EVALUATORS[(ce.theorem, ce.claim)]
    return evaluator(g, f, ce.params)


@dataclass
class ClaimResult:
    claim: str
    note: str = ""
    checked: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    counterexample: Counterexample | None = None
    _minimal_key: tuple = field(default=(), repr=False)

    @property
    def verdict(self) -> str:
        if self.failed:
            return "counterexample"
        if self.checked:
            return "holds-on-corpus"
        return "inconclusive"

    def record(self, ce: Counterexample | None, g: Graph, ok: bool) -> None:
        self.checked += 1
        if ok:
            self.passed += 1
            return
        self.failed += 1
        key = (
            g.num_vertices,
            g.num_edges,
            ce.graph_text,
            ce.labeling_text or "",
            tuple(sorted(ce.params.items())),
        )
        if self.counterexample is None or key < self._minimal_key:
            self.counterexample = ce
            self._minimal_key = key

    def to_json_dict(self) -> dict:
        return {
            "claim": self.claim,
            "note": self.note,
            "checked": self.checked,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "verdict": self.verdict,
            "counterexample": self.counterexample.to_json_dict() if self.counterexample else None,
        }


@dataclass
class TheoremResult:
    theorem: str
    description: str
    claims: list[ClaimResult]
    errors: list[str] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "id": self.theorem,
            "description": self.description,
            "claims": [c.to_json_dict() for c in self.claims],
            "errors": list(self.errors),
        }


@dataclass
class SuiteReport:
    n_max: int
    seed: int
    family_cap: int
    graph_count: int
    labeling_count: int
    theorems: list[TheoremResult]

    @property
    def errored(self) -> bool:
        return any(t.errors for t in self.theorems)

    def counterexamples(self) -> list[Counterexample]:
        return [c.counterexample for t in self.theorems for c in t.claims if c.counterexample]

    def to_json_dict(self) -> dict:
        return {
            "corpus": {
                "n_max": self.n_max,
                "seed": self.seed,
                "family_cap": self.family_cap,
                "graphs": self.graph_count,
                "labelings": self.labeling_count,
            },
            "theorems": [t.to_json_dict() for t in self.theorems],
        }

    def to_json_text(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = [
            f"adjudication suite: n_max={self.n_max} seed={self.seed} "
            f"family_cap={self.family_cap} graphs={self.graph_count} "
            f"labelings={self.labeling_count}"
        ]
        for t in self.theorems:
            lines.append(f"{t.theorem}: {t.description}")
            for c in t.claims:
                line = (
                    f"  {c.claim}: {c.verdict} "
                    f"(checked={c.checked} passed={c.passed} failed={c.failed} skipped={c.skipped})"
                )
                lines.append(line)
                if c.counterexample is not None:
                    ce = c.counterexample
                    where = ce.graph_name + (f"/{ce.labeling_kind}" if ce.labeling_kind else "")
                    params = " ".join(f"{k}={v}" for k, v in sorted(ce.params.items()))
                    lines.append(f"    minimal counterexample: {where} {params}".rstrip())
            for err in t.errors:
                lines.append(f"  error: {err}")
        return "\n".join(lines) + "\n"


class _Runner:
    """Shared instance-evaluation machinery for one suite run."""

    def __init__(self, corpus: Corpus):
        self.corpus = corpus

    def instance(
        self,
        result: TheoremResult,
        claim: ClaimResult,
        theorem: str,
        name: str,
        g: Graph,
        kind: str | None,
        f: SetLabeling | None,
        params: dict[str, str],
    ) -> None:
        evaluator = _EVALUATORS[(theorem, claim.claim)]
        try:
            observed = evaluator(g, f, params)
        except Exception as exc:  # noqa: BLE001 - adjudication must not abort
            result.errors.append(f"{claim.claim}: {name}/{kind or '-'}: {exc}")
            return
        ce = None
        if not observed["ok"]:
            ce = Counterexample(
                theorem=theorem,
                claim=claim.claim,
                graph_name=name,
                labeling_kind=kind,
                graph_text=format_graph(g),
                labeling_text=format_labeling(f, g) if f is not None else None,
                params=params,
                observed=observed,
            )
        claim.record(ce, g, observed["ok"])

    def iasi_instances(self):
        for name, g in self.corpus.graphs:
            for cl in self.corpus.labelings[name]:
                if cl.report.is_iasi:
                    yield name, g, cl

    def weak_instances(self):
        for name, g, cl in self.iasi_instances():
            if cl.report.is_weak_iasi:
                yield name, g, cl

    def strong_instances(self):
        for name, g, cl in self.iasi_instances():
            if cl.report.is_strong_iasi:
                yield name, g, cl

    def reduction_spots(self, g: Graph):
        """Degree-2 vertices whose two neighbors are non-adjacent."""
        for v in g.vertices:
            if g.degree(v) == 2:
                u, w = g.neighbors(v)
                if not g.has_edge(u, w):
                    yield v


def run_suite(
    corpus: Corpus,
    theorems: tuple[str, ...] | None = None,
    search_vertex_cap: int = SEARCH_VERTEX_CAP,
) -> SuiteReport:
    """Evaluate the claim suite over the corpus, one verdict per theorem."""
    wanted = THEOREM_IDS if theorems is None else tuple(theorems)
    for t in wanted:
        if t not in THEOREM_IDS:
            raise ValueError(f"unknown theorem id {t!r}")
    runner = _Runner(corpus)
    results: list[TheoremResult] = []
    ground = str(CORPUS_SEARCH_GROUND)
    for tid in THEOREM_IDS:
        if tid not in wanted:
            continue
        result = TheoremResult(tid, THEOREM_DESCRIPTIONS[tid], [])
        results.append(result)

        if tid == "T1":
            claim = ClaimResult("canonical-verifies")
            result.claims.append(claim)
            for name, g in corpus.graphs:
                runner.instance(result, claim, tid, name, g, None, None, {})

        elif tid == "T2":
            claim = ClaimResult("restriction-verifies")
            result.claims.append(claim)
            for name, g, cl in runner.iasi_instances():
                for e in g.edges:
                    runner.instance(
                        result, claim, tid, name, g, cl.kind, cl.labeling,
                        {"delete_edge": f"{e[0]} {e[1]}"},
                    )
                for v in g.vertices:
                    runner.instance(
                        result, claim, tid, name, g, cl.kind, cl.labeling,
                        {"delete_vertex": v},
                    )

        elif tid == "T3":
            claim = ClaimResult("contraction-verifies")
            result.claims.append(claim)
            for name, g, cl in runner.iasi_instances():
                for e in g.edges:
                    runner.instance(
                        result, claim, tid, name, g, cl.kind, cl.labeling,
                        {"edge": f"{e[0]} {e[1]}"},
                    )

        elif tid == "T4":
            claim = ClaimResult("reduction-verifies")
            result.claims.append(claim)
            for name, g, cl in runner.iasi_instances():
                for v in runner.reduction_spots(g):
                    runner.instance(
                        result, claim, tid, name, g, cl.kind, cl.labeling, {"vertex": v}
                    )

        elif tid in ("T5", "T6"):
            inj = ClaimResult("vertex-injective")
            full = ClaimResult("iasi")
            result.claims.extend([inj, full])
            for name, g, cl in runner.iasi_instances():
                if tid == "T5" and g.num_edges == 0:
                    inj.skipped += 1
                    full.skipped += 1
                    continue
                runner.instance(result, inj, tid, name, g, cl.kind, cl.labeling, {})
                runner.instance(result, full, tid, name, g, cl.kind, cl.labeling, {})

        elif tid == "T7":
            claims = [
                ClaimResult("iff-disjunction"),
                ClaimResult("iff-vertex-not-mono"),
                ClaimResult("iff-incident-edge-mono"),
            ]
            result.claims.extend(claims)
            for name, g, cl in runner.weak_instances():
                for v in runner.reduction_spots(g):
                    for claim in claims:
                        runner.instance(
                            result, claim, tid, name, g, cl.kind, cl.labeling, {"vertex": v}
                        )

        elif tid in ("T8", "T9"):
            induced = ClaimResult("induced-iff")
            searched = ClaimResult(
                "search-iff", note=f"existence side bounded by ground prefix {ground}"
            )
            result.claims.extend([induced, searched])
            for name, g, cl in runner.weak_instances():
                if g.num_edges == 0:
                    induced.skipped += 1
                    searched.skipped += 1
                    continue
                derived = line_graph(g).graph if tid == "T8" else total_graph(g).graph
                runner.instance(result, induced, tid, name, g, cl.kind, cl.labeling, {})
                if derived.num_vertices <= search_vertex_cap:
                    runner.instance(
                        result, searched, tid, name, g, cl.kind, cl.labeling, {"ground": ground}
                    )
                else:
                    searched.skipped += 1

        elif tid in ("T10", "T11"):
            induced = ClaimResult("induced-never-strong")
            searched = ClaimResult(
                "search-never-strong", note=f"existence side bounded by ground prefix {ground}"
            )
            result.claims.extend([induced, searched])
            for name, g, cl in runner.strong_instances():
                if not g.adjacent_edge_pairs():
                    induced.skipped += 1
                    searched.skipped += 1
                    continue
                derived = line_graph(g).graph if tid == "T10" else total_graph(g).graph
                runner.instance(result, induced, tid, name, g, cl.kind, cl.labeling, {})
                if derived.num_vertices <= search_vertex_cap:
                    runner.instance(
                        result, searched, tid, name, g, cl.kind, cl.labeling, {"ground": ground}
                    )
                else:
                    searched.skipped += 1

        elif tid == "T12":
            claim = ClaimResult("prefix-below-floor-exhausts")
            result.claims.append(claim)
            for name, g in corpus.graphs:
                if g.num_vertices > 5:
                    claim.skipped += 1
                    continue
                m = ground_set_lower_bound(g.num_vertices) - 1
                if m < 1:
                    claim.skipped += 1
                    continue
                runner.instance(result, claim, tid, name, g, None, None, {"ground": str(m)})

        elif tid == "T13":
            claim = ClaimResult("uniform-below-floor-exhausts")
            result.claims.append(claim)
            for name, g in corpus.graphs:
                if g.num_vertices > 5:
                    claim.skipped += 1
                    continue
                for l in (1, 2):
                    m = uniform_ground_set_lower_bound(g.num_vertices, l) - 1
                    if m < l:
                        claim.skipped += 1
                        continue
                    runner.instance(
                        result, claim, tid, name, g, None, None,
                        {"ground": str(m), "uniform": str(l)},
                    )

    return SuiteReport(
        n_max=corpus.n_max,
        seed=corpus.seed,
        family_cap=corpus.family_cap,
        graph_count=len(corpus.graphs),
        labeling_count=corpus.labeling_count(),
        theorems=results,
    )
