import json
from itertools import combinations

import pytest

from iasi.harness import (
    THEOREM_IDS,
    Counterexample,
    connected_graph_representatives,
    generate_corpus,
    replay_counterexample,
    run_suite,
)

from bruteforce import brute_connected_representatives, graphs_isomorphic

KNOWN_CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21}


class TestEnumeration:
    def test_counts_match_known_values(self):
        for n, count in KNOWN_CONNECTED_COUNTS.items():
            assert len(connected_graph_representatives(n)) == count

    def test_matches_full_sweep_oracle(self):
        for n in range(1, 6):
            ours = connected_graph_representatives(n)
            theirs = brute_connected_representatives(n)
            assert len(ours) == len(theirs)
            # same canonical edge sets, translated to index pairs
            def as_index_edges(g):
                idx = {v: i for i, v in enumerate(g.vertices)}
                return tuple(sorted((idx[u], idx[v]) for u, v in g.edges))

            assert sorted(as_index_edges(g) for g in ours) == sorted(theirs)

    def test_no_isomorphic_pair_up_to_four(self):
        for n in (2, 3, 4):
            reps = connected_graph_representatives(n)
            for g1, g2 in combinations(reps, 2):
                assert not graphs_isomorphic(g1, g2)


class TestCorpus:
    def test_counts_for_small_nmax(self):
        assert len(generate_corpus(n_max=3).graphs) == 3
        assert len(generate_corpus(n_max=4).graphs) == 9
        assert len(generate_corpus(n_max=5).graphs) == 30

    def test_seed_changes_only_labeling_sampling(self):
        c0 = generate_corpus(n_max=3, seed=0)
        c1 = generate_corpus(n_max=3, seed=1)
        assert [name for name, _ in c0.graphs] == [name for name, _ in c1.graphs]
        assert [g for _, g in c0.graphs] == [g for _, g in c1.graphs]
        fixed_kinds = {"canonical", "search-iasi", "search-weak", "search-strong"}
        for name, _ in c0.graphs:
            for l0, l1 in zip(c0.labelings[name], c1.labelings[name]):
                assert l0.kind == l1.kind
                if l0.kind in fixed_kinds:
                    assert l0.labeling == l1.labeling

    def test_same_seed_reproduces_labelings(self):
        c0 = generate_corpus(n_max=3, seed=7)
        c1 = generate_corpus(n_max=3, seed=7)
        for name, _ in c0.graphs:
            assert [l.labeling for l in c0.labelings[name]] == [
                l.labeling for l in c1.labelings[name]
            ]

    def test_every_graph_has_canonical_labeling(self, corpus5):
        for name, g in corpus5.graphs:
            kinds = [l.kind for l in corpus5.labelings[name]]
            assert kinds[0] == "canonical"
            assert corpus5.labelings[name][0].report.is_iasi

    def test_family_graphs_above_nmax(self):
        c = generate_corpus(n_max=3, family_cap=5)
        names = [name for name, _ in c.graphs]
        for expected in ("P4", "C4", "K1_3", "K4", "P5", "C5", "K1_4", "K5"):
            assert expected in names
        assert len(c.graphs) == 3 + 8

    def test_family_cap_below_nmax_rejected(self):
        with pytest.raises(ValueError):
            generate_corpus(n_max=4, family_cap=3)

    def test_nmax_bounds(self):
        with pytest.raises(ValueError):
            generate_corpus(n_max=1)
        with pytest.raises(ValueError):
            generate_corpus(n_max=7)


class TestSuite:
    def test_all_theorems_present_in_order(self, suite5):
        assert tuple(t.theorem for t in suite5.theorems) == THEOREM_IDS

    def test_no_errors(self, suite5):
        assert not suite5.errored

    def test_must_hold_claims(self, suite5):
        by_id = {t.theorem: t for t in suite5.theorems}
        for tid in ("T1", "T2", "T12", "T13"):
            for claim in by_id[tid].claims:
                assert claim.verdict == "holds-on-corpus", (tid, claim.claim)
        # line-graph labels inherit injectivity from the source edge map
        t5 = {c.claim: c for c in by_id["T5"].claims}
        assert t5["vertex-injective"].verdict == "holds-on-corpus"

    def test_every_claim_has_a_verdict(self, suite5):
        for t in suite5.theorems:
            for c in t.claims:
                assert c.verdict in ("holds-on-corpus", "counterexample", "inconclusive")
                assert c.checked == c.passed + c.failed

    def test_counterexamples_replay(self, suite5):
        ces = suite5.counterexamples()
        assert ces, "expected the adjudication to find at least one gap"
        for ce in ces:
            replayed = replay_counterexample(ce)
            assert json.dumps(replayed, sort_keys=True) == json.dumps(
                ce.observed, sort_keys=True
            )

    def test_counterexample_json_round_trip(self, suite5):
        for ce in suite5.counterexamples():
            again = Counterexample.from_json_dict(
                json.loads(json.dumps(ce.to_json_dict()))
            )
            assert again == ce

    def test_single_theorem_filter(self):
        corpus = generate_corpus(n_max=3)
        suite = run_suite(corpus, theorems=("T12",))
        assert [t.theorem for t in suite.theorems] == ["T12"]
        assert suite.theorems[0].claims[0].verdict == "holds-on-corpus"

    def test_unknown_theorem_rejected(self):
        corpus = generate_corpus(n_max=3)
        with pytest.raises(ValueError):
            run_suite(corpus, theorems=("T99",))

    def test_byte_identical_reports_small(self):
        a = run_suite(generate_corpus(n_max=3, seed=3)).to_json_text()
        b = run_suite(generate_corpus(n_max=3, seed=3)).to_json_text()
        assert a == b

    def test_text_report_renders(self, suite5):
        text = suite5.to_text()
        for tid in THEOREM_IDS:
            assert f"{tid}:" in text

    def test_minimal_counterexample_is_smallest_failure(self, suite5):
        for t in suite5.theorems:
            for c in t.claims:
                if c.counterexample is None:
                    continue
                g = c.counterexample.graph_text
                parsed_vertices = sum(1 for line in g.splitlines() if line.startswith("vertex "))
                # nothing smaller than a 2-vertex instance exists in the corpus
                assert parsed_vertices >= 2
