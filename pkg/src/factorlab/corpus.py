"""Built-in small 3-graphs used throughout tests, demos, and the CLI."""

from __future__ import annotations

from itertools import combinations, product

from .hypergraph import Hypergraph


def single_edge() -> Hypergraph:
    return Hypergraph(3, 3, [(0, 1, 2)])


def loose_path() -> Hypergraph:
    """Two edges sharing one vertex: {012, 234}."""
    return Hypergraph(3, 5, [(0, 1, 2), (2, 3, 4)])


def cherry() -> Hypergraph:
    """Two edges sharing one vertex at the hinge: {012, 034}."""
    return Hypergraph(3, 5, [(0, 1, 2), (0, 3, 4)])


def k4_minus() -> Hypergraph:
    """Three of the four triples on 4 vertices."""
    return Hypergraph(3, 4, [(0, 1, 2), (0, 1, 3), (0, 2, 3)])


def k4() -> Hypergraph:
    return complete(4, 3)


def k222() -> Hypergraph:
    """Complete 3-partite 3-graph with parts {0,1}, {2,3}, {4,5}."""
    edges = [tuple(sorted((a, b, c))) for a, b, c in product((0, 1), (2, 3), (4, 5))]
    return Hypergraph(3, 6, edges)


def complete(n: int, k: int) -> Hypergraph:
    return Hypergraph(k, n, combinations(range(n), k))


NAMED = {
    "single-edge": single_edge,
    "loose-path": loose_path,
    "cherry": cherry,
    "k4-minus": k4_minus,
    "k4": k4,
    "k222": k222,
}


def by_name(name: str) -> Hypergraph:
    try:
        return NAMED[name]()
    except KeyError:
        raise ValueError(f"unknown corpus graph {name!r}; known: {', '.join(sorted(NAMED))}") from None
