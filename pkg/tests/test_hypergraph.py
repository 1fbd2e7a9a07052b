import json
from itertools import combinations, product

import numpy as np
import pytest

from factorlab import DensenessParams, FormatError, Hypergraph, load_hypergraph
from factorlab.corpus import complete, k4, k222, single_edge

K222_TEXT = "3 6 8\n" + "\n".join(
    " ".join(map(str, sorted((a, b, c)))) for a, b, c in product((0, 1), (2, 3), (4, 5))
) + "\n"


def random_graph(rng, n, k=3, p=0.4):
    edges = [e for e in combinations(range(n), k) if rng.random() < p]
    return Hypergraph(k, n, edges)


class TestLoading:
    def test_smallest_valid_input(self):
        h = load_hypergraph("3 3 1\n0 1 2")
        assert (h.k, h.n, h.edges) == (3, 3, ((0, 1, 2),))

    def test_k222_text(self):
        assert load_hypergraph(K222_TEXT) == k222()

    def test_comments_and_blank_lines(self):
        h = load_hypergraph("# header comment\n3 3 1\n\n0 1 2\n# trailing\n")
        assert h == single_edge()

    def test_bytes_and_stream(self, tmp_path):
        assert load_hypergraph(b"3 3 1\n0 1 2") == single_edge()
        path = tmp_path / "edge.hg"
        path.write_text("3 3 1\n0 1 2\n")
        with open(path) as handle:
            assert load_hypergraph(handle) == single_edge()

    @pytest.mark.parametrize(
        "text, fragment, line",
        [
            ("3 3 1\n0 1 1", "repeated vertex", 2),
            ("3 3 1\n0 1 5", "out of range", 2),
            ("3 3 1\n0 1", "expected 3", 2),
            ("3 3 1\n0 1 x", "non-integer", 2),
            ("3 3 1\n2 1 0", "strictly increasing", 2),
            ("3 4 2\n0 1 2\n0 1 2", "duplicate edge", 3),
            ("3 3\n0 1 2", "header", 1),
            ("1 3 0", "uniformity", 1),
        ],
    )
    def test_malformed_inputs_mention_line(self, text, fragment, line):
        with pytest.raises(FormatError) as err:
            load_hypergraph(text)
        assert fragment in str(err.value)
        assert f"line {line}" in str(err.value)

    def test_edge_count_mismatch(self):
        with pytest.raises(FormatError, match="expected 2 edge lines"):
            load_hypergraph("3 4 2\n0 1 2")

    def test_json_mirror(self):
        h = load_hypergraph(json.dumps({"k": 3, "n": 6, "edges": k222().to_json_obj()["edges"]}))
        assert h == k222()

    def test_round_trip_is_identity(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            h = random_graph(rng, int(rng.integers(3, 9)))
            assert load_hypergraph(h.to_text()) == h
            assert load_hypergraph(json.dumps(h.to_json_obj())) == h


class TestShadowLinkDegree:
    def test_shadow_of_one_edge(self):
        assert single_edge().shadow(2) == frozenset({(0, 1), (0, 2), (1, 2)})

    def test_k222_shadow_has_only_cross_pairs(self):
        pairs = k222().shadow(2)
        assert len(pairs) == 12
        assert not any({(0, 1), (2, 3), (4, 5)} & pairs)

    def test_empty_shadow(self):
        assert Hypergraph(3, 5, []).shadow(2) == frozenset()

    def test_shadow_out_of_range(self):
        with pytest.raises(ValueError):
            single_edge().shadow(3)

    def test_shadow_downward_closure(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            h = random_graph(rng, 8, k=4, p=0.3)
            sh3, sh2 = h.shadow(3), h.shadow(2)
            for triple in sh3:
                for pair in combinations(triple, 2):
                    assert pair in sh2

    def test_links(self):
        assert single_edge().link((0,)) == frozenset({(1, 2)})
        assert k222().link((0,)) == frozenset({(2, 4), (2, 5), (3, 4), (3, 5)})
        assert k222().link((0, 1)) == frozenset()
        with pytest.raises(ValueError):
            single_edge().link((0, 1, 2))

    def test_degree_equals_link_size(self):
        rng = np.random.default_rng(5)
        for _ in range(10):
            h = random_graph(rng, 7)
            for v in range(h.n):
                assert h.degree((v,)) == len(h.link((v,)))

    def test_min_degrees(self):
        assert k222().min_s_degree(1) == 4
        assert single_edge().min_s_degree(2) == 1
        assert Hypergraph(3, 6, []).min_s_degree(2) == 0


class TestTupleCounting:
    def test_complete_all_vertices(self):
        assert complete(5, 3).count_tuple_edges([range(5)] * 3) == 60

    def test_single_edge_singletons(self):
        assert single_edge().count_tuple_edges([{0}, {1}, {2}]) == 1

    def test_overlapping_sets(self):
        # Oracle: enumerate the 2*2*1 tuples directly.
        h = single_edge()
        sets = [{0, 1}, {0, 1}, {2}]
        expected = sum(
            1
            for t in product(*sets)
            if len(set(t)) == 3 and frozenset(t) in h.edge_set
        )
        assert expected == 2
        assert h.count_tuple_edges(sets) == 2

    def test_all_vertex_count_is_k_factorial_times_edges(self):
        rng = np.random.default_rng(11)
        for _ in range(8):
            h = random_graph(rng, 7)
            assert h.count_tuple_edges([range(7)] * 3) == 6 * len(h.edges)

    def test_rejects_bad_sets(self):
        with pytest.raises(ValueError):
            single_edge().count_tuple_edges([{0}, {1}])
        with pytest.raises(ValueError):
            single_edge().count_tuple_edges([{0}, {1}, {9}])


class TestStructure:
    def test_k222_is_3_partite(self):
        parts = {frozenset(p) for p in k222().is_k_partite().parts}
        assert parts == {frozenset({0, 1}), frozenset({2, 3}), frozenset({4, 5})}

    def test_k4_is_not_3_partite(self):
        assert k4().is_k_partite() is None

    def test_single_edge_partition(self):
        parts = single_edge().is_k_partite().parts
        assert sorted(v for p in parts for v in p) == [0, 1, 2]
        assert all(len(p) == 1 for p in parts)

    def test_empty_parts_allowed(self):
        h = Hypergraph(3, 3, [(0, 1, 2)])
        sub = Hypergraph(3, 2, [])  # subgraph of a 3-partite graph
        assert h.is_k_partite() is not None
        assert sub.is_k_partite() is not None

    def test_duplicate_vertex_single_edge(self):
        h = single_edge().duplicate_vertex(0, 1)
        assert h.n == 4
        assert h.edges == ((0, 1, 2), (1, 2, 3))

    def test_duplicate_in_edgeless_graph(self):
        h = Hypergraph(3, 4, []).duplicate_vertex(2, 5)
        assert h.n == 9 and h.edges == ()

    def test_duplicate_in_k4_preserves_degrees(self):
        h = k4().duplicate_vertex(0, 2)
        assert h.degree((4,)) == h.degree((5,)) == h.degree((0,)) == 3

    def test_clone_links_match_original(self):
        rng = np.random.default_rng(13)
        for _ in range(6):
            base = random_graph(rng, 6)
            w = int(rng.integers(6))
            clone_graph = base.duplicate_vertex(w, 2)
            for clone in (6, 7):
                assert clone_graph.link((clone,)) == base.link((w,))

    def test_induced_and_relabel(self):
        h = k222()
        sub, remap = h.induced([0, 2, 4])
        assert sub.edges == ((0, 1, 2),) and remap == {0: 0, 2: 1, 4: 2}
        perm = [5, 4, 3, 2, 1, 0]
        assert h.relabel(perm).relabel(perm) == h

    def test_denseness_params_ranges(self):
        DensenessParams(p=0.5, mu=0.01)
        DensenessParams(p=0.5, mu=0.01, alpha=0.3)
        for bad in (
            dict(p=0.0, mu=0.1),
            dict(p=1.0, mu=0.1),
            dict(p=0.5, mu=0.0),
            dict(p=0.5, mu=0.1, alpha=1.0),
        ):
            with pytest.raises(ValueError):
                DensenessParams(**bad)

    def test_constructor_validation(self):
        with pytest.raises(ValueError):
            Hypergraph(3, 3, [(0, 1)])
        with pytest.raises(ValueError):
            Hypergraph(3, 3, [(0, 1, 1)])
        with pytest.raises(ValueError):
            Hypergraph(3, 3, [(0, 1, 3)])
        with pytest.raises(ValueError):
            Hypergraph(3, 4, [(0, 1, 2), (2, 1, 0)])
