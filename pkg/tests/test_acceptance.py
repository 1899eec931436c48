"""Acceptance gate: one test per criterion, one printed verdict line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the verdict lines.
Every tolerance here is exact (combinatorial identities, zero exceptions);
the suites are sized to finish in well under five minutes.
"""

import json
import random
from contextlib import contextmanager

from iasi.graph import Graph
from iasi.harness import (
    THEOREM_IDS,
    connected_graph_representatives,
    generate_corpus,
    replay_counterexample,
    run_suite,
)
from iasi.labeling import canonical_iasi, restrict, verify
from iasi.search import (
    MODES,
    SearchSpec,
    find_labeling,
    ground_set_lower_bound,
    prefix_ground,
    uniform_ground_set_lower_bound,
)
from iasi.setcore import (
    IntSet,
    compatibility_index,
    max_class_size,
    neglecting_number,
    sumset,
)

from bruteforce import brute_force_find

PAIR_SAMPLES = 10_000
PAIR_SEED = 987_654_321


@contextmanager
def criterion(num, description):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {num}: FAIL - {description}")
        raise
    print(f"ACCEPTANCE {num}: PASS - {description}")


def random_pairs():
    rng = random.Random(PAIR_SEED)
    for _ in range(PAIR_SAMPLES):
        a = IntSet(rng.sample(range(201), rng.randint(1, 12)))
        b = IntSet(rng.sample(range(201), rng.randint(1, 12)))
        yield a, b


def test_criterion_1_sumset_bounds():
    with criterion(1, "sumset cardinality bounds on 10k seeded random pairs"):
        for a, b in random_pairs():
            s = len(sumset(a, b))
            assert max(len(a), len(b)) <= s <= len(a) * len(b)


def test_criterion_2_compatibility_identities():
    with criterion(2, "compatibility index, neglecting number and class-size identities"):
        for a, b in random_pairs():
            index = compatibility_index(a, b)
            assert index == len(sumset(a, b))
            assert len(a) * len(b) == index + neglecting_number(a, b)
            assert max_class_size(a, b) <= min(len(a), len(b))


def test_criterion_3_canonical_existence():
    with criterion(3, "canonical labeling verifies on every connected graph with <= 5 vertices"):
        total = 0
        for n in range(1, 6):
            for g in connected_graph_representatives(n):
                assert verify(g, canonical_iasi(g)).is_iasi, g
                total += 1
        assert total == 31  # 1 + 1 + 2 + 6 + 21


def test_criterion_4_heredity(corpus5):
    with criterion(4, "restrictions to one-edge- and one-vertex-deleted subgraphs stay valid"):
        checked = 0
        for name, g in corpus5.graphs:
            for cl in corpus5.labelings[name]:
                if not cl.report.is_iasi:
                    continue
                for e in g.edges:
                    h = Graph(g.vertices, [x for x in g.edges if x != e])
                    assert verify(h, restrict(g, cl.labeling, h)).is_iasi, (name, cl.kind, e)
                    checked += 1
                for v in g.vertices:
                    h = Graph(
                        [x for x in g.vertices if x != v],
                        [x for x in g.edges if v not in x],
                    )
                    assert verify(h, restrict(g, cl.labeling, h)).is_iasi, (name, cl.kind, v)
                    checked += 1
        assert checked > 0


def test_criterion_5_search_matches_brute_force():
    with criterion(5, "search verdicts match brute-force enumeration (n <= 4, m <= 3, all modes)"):
        for n in range(2, 5):
            for g in connected_graph_representatives(n):
                for mode in MODES:
                    for m in (1, 2, 3):
                        outcome = find_labeling(
                            g, SearchSpec(mode=mode, ground=prefix_ground(m))
                        )
                        assert outcome.status in ("found", "exhausted")
                        oracle = brute_force_find(
                            list(g.vertices), list(g.edges), list(range(m)), mode
                        )
                        assert outcome.found == (oracle is not None), (g, mode, m)


def test_criterion_6_ground_bound_necessity(corpus5):
    with criterion(6, "no labeling exists below the log2 floor, nor below the binomial floor"):
        for name, g in corpus5.graphs:
            n = g.num_vertices
            m = ground_set_lower_bound(n) - 1
            assert m >= 1
            outcome = find_labeling(g, SearchSpec(mode="iasi", ground=prefix_ground(m)))
            assert outcome.status == "exhausted", (name, m)
            for l in (1, 2):
                m_l = uniform_ground_set_lower_bound(n, l) - 1
                if m_l < l:
                    continue
                outcome = find_labeling(
                    g,
                    SearchSpec(
                        mode="iasi", ground=prefix_ground(m_l), uniform_vertex_size=l
                    ),
                )
                assert outcome.status == "exhausted", (name, l, m_l)


def test_criterion_7_weak_strong_edges_have_trivial_classes(corpus5):
    with criterion(7, "every edge classed weak or strong has only trivial compatibility classes"):
        checked = 0
        for name, g in corpus5.graphs:
            for cl in corpus5.labelings[name]:
                for (u, v), er in cl.report.per_edge.items():
                    if er.edge_class in ("weak", "strong", "both"):
                        assert max_class_size(cl.labeling[u], cl.labeling[v]) == 1, (
                            name,
                            cl.kind,
                            (u, v),
                        )
                        checked += 1
        assert checked > 0


def test_criterion_8_adjudication_suite_completes_and_replays(suite5):
    with criterion(8, "suite adjudicates T1-T13 and every counterexample replays bit-identically"):
        assert tuple(t.theorem for t in suite5.theorems) == THEOREM_IDS
        assert not suite5.errored
        for t in suite5.theorems:
            assert t.claims, t.theorem
            for c in t.claims:
                assert c.verdict in ("holds-on-corpus", "counterexample", "inconclusive")
        for ce in suite5.counterexamples():
            replayed = replay_counterexample(ce)
            assert json.dumps(replayed, sort_keys=True) == json.dumps(
                ce.observed, sort_keys=True
            )


def test_criterion_9_deterministic_reports():
    with criterion(9, "identical seeds give byte-identical machine-readable reports"):
        first = run_suite(generate_corpus(n_max=5, seed=0)).to_json_text()
        second = run_suite(generate_corpus(n_max=5, seed=0)).to_json_text()
        assert first == second
