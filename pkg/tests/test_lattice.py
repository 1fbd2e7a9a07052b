from itertools import combinations, product

import numpy as np
import pytest

from factorlab import (
    Hypergraph,
    PreconditionError,
    decide_trans,
    enumerate_shadow_disjoint_bipartitions,
    lattice_contains,
    lattice_from_generators,
    size_generators,
)
from factorlab.corpus import k222, single_edge
from factorlab.lattice import shared_sum_combination, shared_sum_contains
from factorlab.oracles import bounded_combination_oracle

TWO_SHARED = Hypergraph(3, 4, [(0, 1, 2), (0, 1, 3)])


def brute_force_bipartitions(f, s):
    """Raw-definition filter over all 2^n bipartitions."""
    good = []
    for sides in product((0, 1), repeat=f.n):
        a = {v for v in range(f.n) if sides[v] == 0}
        ok = True
        for e, e2 in combinations(f.edges, 2):
            if len(set(e) & a) != len(set(e2) & a) and len(set(e) & set(e2)) >= s:
                ok = False
                break
        if ok:
            good.append(frozenset(a))
    return good


class TestBipartitions:
    def test_single_edge_all_bipartitions(self):
        assert len(enumerate_shadow_disjoint_bipartitions(single_edge(), 2)) == 8

    def test_k222_parts_stay_monochromatic(self):
        bips = enumerate_shadow_disjoint_bipartitions(k222(), 2)
        assert sorted({len(bp.a) for bp in bips}) == [0, 2, 4, 6]
        for bp in bips:
            a = set(bp.a)
            for part in ({0, 1}, {2, 3}, {4, 5}):
                assert part <= a or not (part & a)

    def test_two_shared_edges(self):
        bips = enumerate_shadow_disjoint_bipartitions(TWO_SHARED, 2)
        assert len(bips) == len(brute_force_bipartitions(TWO_SHARED, 2)) == 8
        for bp in bips:
            assert (2 in bp.a) == (3 in bp.a)

    def test_matches_brute_force_on_random_instances(self):
        rng = np.random.default_rng(202)
        triples = list(combinations(range(6), 3))
        for _ in range(30):
            mask = rng.random(len(triples)) < 0.3
            f = Hypergraph(3, 6, [t for t, m in zip(triples, mask) if m])
            got = {frozenset(bp.a) for bp in enumerate_shadow_disjoint_bipartitions(f, 2)}
            assert got == set(brute_force_bipartitions(f, 2))

    def test_complement_symmetry(self):
        rng = np.random.default_rng(203)
        triples = list(combinations(range(6), 3))
        for _ in range(10):
            mask = rng.random(len(triples)) < 0.3
            f = Hypergraph(3, 6, [t for t, m in zip(triples, mask) if m])
            sides = {(bp.a, bp.b) for bp in enumerate_shadow_disjoint_bipartitions(f, 2)}
            assert all((b, a) in sides for a, b in sides)

    def test_monotone_in_s(self):
        rng = np.random.default_rng(204)
        quads = list(combinations(range(6), 4))
        for _ in range(10):
            mask = rng.random(len(quads)) < 0.3
            f = Hypergraph(4, 6, [q for q, m in zip(quads, mask) if m])
            gens2 = set(map(tuple, size_generators(f, 2)))
            gens3 = set(map(tuple, size_generators(f, 3)))
            assert gens2 <= gens3

    def test_s_out_of_range(self):
        with pytest.raises(ValueError):
            enumerate_shadow_disjoint_bipartitions(single_edge(), 1)
        with pytest.raises(ValueError):
            enumerate_shadow_disjoint_bipartitions(single_edge(), 3)


class TestLattice2:
    def test_k222_generators_exclude_transferral(self):
        lat = lattice_from_generators([(0, 6), (2, 4), (4, 2), (6, 0)])
        assert not lattice_contains(lat, (1, -1))
        assert lattice_contains(lat, (2, -2))
        assert lattice_contains(lat, (2, 4))

    def test_single_generator(self):
        lat = lattice_from_generators([(3, 0)])
        assert lattice_contains(lat, (6, 0))
        assert not lattice_contains(lat, (3, 1))
        assert not lattice_contains(lat, (1, 0))

    def test_explicit_combination(self):
        lat = lattice_from_generators([(1, 2), (2, 1)])
        assert lattice_contains(lat, (1, -1))  # (2,1) - (1,2)

    def test_zero_vector_always_contained(self):
        for gens in ([(5, 7)], [(0, 3), (2, 2)], [(0, 0)]):
            assert lattice_contains(lattice_from_generators(gens), (0, 0))

    def test_empty_generators_rejected(self):
        with pytest.raises(ValueError):
            lattice_from_generators([])

    def test_agrees_with_bounded_brute_force(self):
        rng = np.random.default_rng(301)
        for _ in range(100):
            total = int(rng.integers(1, 13))
            count = int(rng.integers(1, 6))
            firsts = sorted(set(int(rng.integers(0, total + 1)) for _ in range(count)))
            gens = [(a, total - a) for a in firsts]
            lat = lattice_from_generators(gens)
            targets = [(1, -1), (0, 0), (1, 0)]
            for _ in range(3):
                coeffs = rng.integers(-2, 3, size=len(gens))
                targets.append(
                    (
                        int(sum(c * g[0] for c, g in zip(coeffs, gens))),
                        int(sum(c * g[1] for c, g in zip(coeffs, gens))),
                    )
                )
            for target in targets:
                got = lattice_contains(lat, target)
                assert got == shared_sum_contains(gens, target)
                assert got == (bounded_combination_oracle(gens, target) is not None)

    def test_combination_reevaluates_exactly(self):
        rng = np.random.default_rng(302)
        for _ in range(50):
            total = int(rng.integers(1, 13))
            firsts = sorted(set(int(rng.integers(0, total + 1)) for _ in range(4)))
            gens = [(a, total - a) for a in firsts]
            coeffs = shared_sum_combination(gens, (1, -1))
            if coeffs is None:
                assert not lattice_contains(lattice_from_generators(gens), (1, -1))
            else:
                x = sum(c * g[0] for c, g in zip(coeffs, gens))
                y = sum(c * g[1] for c, g in zip(coeffs, gens))
                assert (x, y) == (1, -1)


class TestDecideTrans:
    def test_k222_not_a_member(self):
        report = decide_trans(k222(), 2)
        assert not report.verdict
        assert report.stats["generators"] == [[0, 6], [2, 4], [4, 2], [6, 0]]
        assert report.stats["first-coordinate-difference-gcd"] == 2

    def test_single_edge_member(self):
        report = decide_trans(single_edge(), 2)
        assert report.verdict
        gens = [tuple(g) for g in report.stats["generators"]]
        assert (0, 3) in gens and (1, 2) in gens

    def test_two_shared_edges_member(self):
        report = decide_trans(TWO_SHARED, 2)
        assert report.verdict
        combo = report.witness["combination"]
        x = sum(c * g[0] for c, g in combo)
        y = sum(c * g[1] for c, g in combo)
        assert (x, y) == (1, -1)

    def test_s_guard(self):
        with pytest.raises(PreconditionError):
            decide_trans(single_edge(), 1)
