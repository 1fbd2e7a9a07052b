"""Deeper randomized differential checks between independent code paths."""

from itertools import combinations, permutations

import numpy as np
import pytest

from factorlab import (
    Hypergraph,
    Partition,
    decide_partition_condition_k,
    decide_turan_zero_3,
    enumerate_shadow_disjoint_bipartitions,
    find_cover,
    lattice_contains,
    lattice_from_generators,
    rooted_copies,
)
from factorlab.corpus import k222
from factorlab.deciders import forced_coloring
from factorlab.oracles import bounded_combination_oracle, partition_condition_oracle


def random_uniform(rng, n, k, p):
    sets = list(combinations(range(n), k))
    mask = rng.random(len(sets)) < p
    return Hypergraph(k, n, [s for s, m in zip(sets, mask) if m])


class TestDeeperOrderingSearch:
    def test_f6_matches_720_permutation_scan(self):
        rng = np.random.default_rng(60601)
        for _ in range(60):
            f = random_uniform(rng, 6, 3, 0.25)
            exhaustive = any(
                forced_coloring(f, list(p)) is not None for p in permutations(range(6))
            )
            assert decide_turan_zero_3(f).verdict == exhaustive


class TestK4PartitionCondition:
    def test_matches_brute_force_at_k4(self):
        rng = np.random.default_rng(60602)
        for _ in range(40):
            f = random_uniform(rng, 6, 4, 0.3)
            assert decide_partition_condition_k(f).verdict == (
                partition_condition_oracle(f) is not None
            )

    def test_bipartitions_match_raw_definition_at_k4(self):
        rng = np.random.default_rng(60603)
        for _ in range(20):
            f = random_uniform(rng, 6, 4, 0.3)
            for s in (2, 3):
                got = {frozenset(bp.a) for bp in enumerate_shadow_disjoint_bipartitions(f, s)}
                want = set()
                for bits in range(64):
                    a = frozenset(v for v in range(6) if bits >> v & 1)
                    if all(
                        len(set(e) & set(e2)) < s
                        for e, e2 in combinations(f.edges, 2)
                        if len(set(e) & a) != len(set(e2) & a)
                    ):
                        want.add(a)
                assert got == want


class TestGenericLattice:
    def test_negative_entries_against_wide_brute_force(self):
        rng = np.random.default_rng(60604)
        for _ in range(60):
            gens = [
                (int(rng.integers(-12, 13)), int(rng.integers(-12, 13)))
                for _ in range(2)
            ]
            lat = lattice_from_generators(gens)
            targets = [(0, 0), (1, -1), (1, 0), (0, 1)]
            targets += [
                (int(rng.integers(-6, 7)), int(rng.integers(-6, 7))) for _ in range(3)
            ]
            for target in targets:
                # Cramer bound: entries <= 12, |target| <= 6, |det| >= 1
                # gives |coeff| <= 2*6*12 = 144
                hit = bounded_combination_oracle(gens, target, bound=150)
                assert lattice_contains(lat, target) == (hit is not None)
                if hit is not None:
                    x = sum(c * g[0] for c, g in zip(hit, gens))
                    y = sum(c * g[1] for c, g in zip(hit, gens))
                    assert (x, y) == target


class TestCoverAgainstRootedCounts:
    def test_covered_iff_some_rooted_copy(self):
        rng = np.random.default_rng(60605)
        pattern = Hypergraph(3, 4, [(0, 1, 2), (1, 2, 3)])
        for _ in range(15):
            host = random_uniform(rng, 7, 3, 0.35)
            report = find_cover(pattern, host)
            for w in range(host.n):
                total = sum(
                    rooted_copies(pattern, u, host, w).count for u in range(pattern.n)
                )
                assert report.covered[w] == (total > 0)


class TestPartitionHelpers:
    def test_from_parts_validates(self):
        p = Partition.from_parts([[0, 2], [1], []], 3)
        assert p.index_vector({0, 1}) == (1, 1, 0)
        assert p.part_of(2) == 0
        with pytest.raises(ValueError):
            Partition.from_parts([[0], [0, 1]], 2)
        with pytest.raises(ValueError):
            Partition.from_parts([[0], [2]], 3)

    def test_k222_partition_index_vectors(self):
        part = Partition(((0, 1), (2, 3), (4, 5)))
        assert all(part.index_vector(e) == (1, 1, 1) for e in k222().edges)


class TestDisjointUnionFactor:
    def test_two_disjoint_k222_blocks(self):
        from factorlab import find_factor, validate_factor_certificate

        base = k222()
        shifted = [tuple(v + 6 for v in e) for e in base.edges]
        host = Hypergraph(3, 12, list(base.edges) + shifted)
        res = find_factor(base, host)
        assert res.status == "found" and len(res.certificate) == 2
        assert validate_factor_certificate(base, host, res.certificate)
