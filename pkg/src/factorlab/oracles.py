"""Brute-force oracles kept deliberately independent of the production search
paths.  They exist to cross-check verdicts at desk scale and should stay
plain: no pruning beyond the raw definitions."""

from __future__ import annotations

from itertools import combinations, permutations, product

from .deciders import (
    forced_coloring,
    validate_cover_witness,
    validate_partition_witness,
)
from .hypergraph import Hypergraph


def turan_zero_oracle(f: Hypergraph) -> bool:
    """Scan all v(F)! orderings for one with a consistent forced colouring."""
    return any(
        forced_coloring(f, list(perm)) is not None
        for perm in permutations(range(f.n))
    )


def cover_partition_oracle(f: Hypergraph):
    """Scan all vstar and all 2^(f-1) bipartitions; validator does the judging."""
    for vstar in range(f.n):
        others = [u for u in range(f.n) if u != vstar]
        for sides in product((0, 1), repeat=len(others)):
            x_side = [u for u, sd in zip(others, sides) if sd == 0]
            y_side = [u for u, sd in zip(others, sides) if sd == 1]
            if validate_cover_witness(f, vstar, x_side, y_side):
                return vstar, x_side, y_side
    return None


def partition_condition_oracle(f: Hypergraph):
    """Scan all vstar and all (k-1)^(f-1) part assignments."""
    k = f.k
    for vstar in range(f.n):
        others = [u for u in range(f.n) if u != vstar]
        for assignment in product(range(k - 1), repeat=len(others)):
            parts = [
                [u for u, part in zip(others, assignment) if part == i]
                for i in range(k - 1)
            ]
            if validate_partition_witness(f, vstar, parts):
                return vstar, parts
    return None


def copy_images_oracle(f: Hypergraph, h: Hypergraph) -> list[frozenset[int]]:
    """Vertex images of copies of f in h, by trying every injection."""
    images = []
    for subset in combinations(range(h.n), f.n):
        for phi in permutations(subset):
            if all(frozenset(phi[v] for v in e) in h.edge_set for e in f.edges):
                images.append(frozenset(subset))
                break
    return images


def factor_oracle(f: Hypergraph, h: Hypergraph) -> bool:
    """Cover the smallest uncovered vertex by every possible copy, recursively."""
    if h.n == 0:
        return True
    if f.n == 0 or h.n % f.n != 0:
        return False
    images = copy_images_oracle(f, h)

    def rec(uncovered: frozenset[int]) -> bool:
        if not uncovered:
            return True
        pivot = min(uncovered)
        for img in images:
            if pivot in img and img <= uncovered:
                if rec(uncovered - img):
                    return True
        return False

    return rec(frozenset(range(h.n)))


def bounded_combination_oracle(gens, target, bound: int = 10):
    """Search integer coefficients in [-bound, bound] per generator for an
    exact combination reaching the target; None when no bounded combination
    exists.  Suffix reach bounds keep the plain recursion exact and finite.
    """
    gens = [(int(a), int(b)) for a, b in gens]
    tx, ty = (int(c) for c in target)
    m = len(gens)
    reach_x = [0] * (m + 1)
    reach_y = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        reach_x[i] = reach_x[i + 1] + bound * abs(gens[i][0])
        reach_y[i] = reach_y[i + 1] + bound * abs(gens[i][1])

    coeffs = [0] * m

    def rec(i: int, x: int, y: int):
        if abs(tx - x) > reach_x[i] or abs(ty - y) > reach_y[i]:
            return None
        if i == m:
            return list(coeffs) if (x, y) == (tx, ty) else None
        for c in range(-bound, bound + 1):
            coeffs[i] = c
            hit = rec(i + 1, x + c * gens[i][0], y + c * gens[i][1])
            if hit is not None:
                return hit
        coeffs[i] = 0
        return None

    return rec(0, 0, 0)
