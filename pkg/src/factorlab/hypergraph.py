"""Canonical k-uniform hypergraphs over dense integer vertex ids.

A :class:`Hypergraph` is immutable after construction: edges are stored as
lexicographically sorted tuples of strictly increasing vertex ids, which is
the canonical form used for equality and serialization.  Derived data
(shadows, links) is computed lazily and cached under a lock so instances can
be shared across threads.

Vertex subsets handed to operations may be any iterable of ints; results use
sorted tuples.  Partitions are ordered lists of disjoint parts covering
``range(n)``; the index vector of a set S w.r.t. a partition is the tuple of
intersection sizes, one per part.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import IO, Iterable, Iterator, Sequence


class FormatError(ValueError):
    """Malformed hypergraph input; carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class DensenessParams:
    """Definitional parameters of the quantified denseness property.

    The target density and slack both live strictly inside (0, 1); the
    optional minimum-degree coefficient, when present, does too.
    """

    p: float
    mu: float
    alpha: float | None = None

    def __post_init__(self):
        if not 0 < self.p < 1:
            raise ValueError(f"target density must lie in (0, 1), got {self.p}")
        if not 0 < self.mu < 1:
            raise ValueError(f"slack must lie in (0, 1), got {self.mu}")
        if self.alpha is not None and not 0 < self.alpha < 1:
            raise ValueError(f"degree coefficient must lie in (0, 1), got {self.alpha}")


@dataclass(frozen=True)
class Partition:
    """Ordered partition of ``range(n)`` into (possibly empty) parts."""

    parts: tuple[tuple[int, ...], ...]

    @classmethod
    def from_parts(cls, parts: Iterable[Iterable[int]], n: int) -> "Partition":
        norm = tuple(tuple(sorted(set(p))) for p in parts)
        seen: set[int] = set()
        for part in norm:
            for v in part:
                if v in seen:
                    raise ValueError(f"vertex {v} appears in two parts")
                seen.add(v)
        if seen != set(range(n)):
            raise ValueError("parts do not cover the vertex set exactly")
        return cls(norm)

    def index_vector(self, vertices: Iterable[int]) -> tuple[int, ...]:
        vs = set(vertices)
        return tuple(len(vs.intersection(part)) for part in self.parts)

    def part_of(self, v: int) -> int:
        for i, part in enumerate(self.parts):
            if v in part:
                return i
        raise ValueError(f"vertex {v} not in partition")

    def to_json_obj(self) -> list[list[int]]:
        return [list(p) for p in self.parts]


class Hypergraph:
    """Immutable k-uniform hypergraph on vertices ``0..n-1``."""

    def __init__(self, k: int, n: int, edges: Iterable[Iterable[int]]):
        if k < 2:
            raise ValueError(f"uniformity k must be >= 2, got {k}")
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        canon = []
        for e in edges:
            t = tuple(sorted(e))
            if len(t) != k:
                raise ValueError(f"edge {t} does not have {k} vertices")
            if len(set(t)) != k:
                raise ValueError(f"edge {t} has a repeated vertex")
            if t[0] < 0 or t[-1] >= n:
                raise ValueError(f"edge {t} has a vertex outside [0, {n})")
            canon.append(t)
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        self.k = k
        self.n = n
        self.edges: tuple[tuple[int, ...], ...] = tuple(canon)
        self._cache: dict = {}
        self._lock = threading.Lock()

    # -- identity ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Hypergraph)
            and self.k == other.k
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.k, self.n, self.edges))

    def __repr__(self) -> str:
        return f"Hypergraph(k={self.k}, n={self.n}, m={len(self.edges)})"

    @property
    def vertices(self) -> range:
        return range(self.n)

    def _cached(self, key, compute):
        # Double-checked so concurrent readers never observe partial values.
        cache = self._cache
        if key in cache:
            return cache[key]
        with self._lock:
            if key not in cache:
                cache[key] = compute()
            return cache[key]

    @property
    def edge_set(self) -> frozenset[frozenset[int]]:
        return self._cached("edge_set", lambda: frozenset(map(frozenset, self.edges)))

    def contains_edge(self, vertices: Iterable[int]) -> bool:
        return frozenset(vertices) in self.edge_set

    # -- shadows, links, degrees -------------------------------------------

    def shadow(self, r: int) -> frozenset[tuple[int, ...]]:
        """All r-subsets of the vertex set contained in at least one edge."""
        if not 1 <= r < self.k:
            raise ValueError(f"shadow order r must satisfy 1 <= r < k, got {r}")

        def compute():
            out: set[tuple[int, ...]] = set()
            for e in self.edges:
                out.update(combinations(e, r))
            return frozenset(out)

        return self._cached(("shadow", r), compute)

    def link(self, vertices: Iterable[int]) -> frozenset[tuple[int, ...]]:
        """Neighbourhood of a set S: the (k-|S|)-sets completing S to an edge."""
        s = tuple(sorted(set(vertices)))
        if len(s) >= self.k:
            raise ValueError(f"link requires |S| < k, got |S|={len(s)}")

        def compute():
            ss = set(s)
            out = []
            for e in self.edges:
                if ss.issubset(e):
                    out.append(tuple(v for v in e if v not in ss))
            return frozenset(out)

        return self._cached(("link", s), compute)

    def degree(self, vertices: Iterable[int]) -> int:
        return len(self.link(vertices))

    def min_s_degree(self, s: int) -> int:
        if not 1 <= s <= self.k - 1:
            raise ValueError(f"degree order s must satisfy 1 <= s <= k-1, got {s}")
        degs = [self.degree(c) for c in combinations(range(self.n), s)]
        return min(degs, default=0)

    def count_tuple_edges(self, sets: Sequence[Iterable[int]]) -> int:
        """Ordered tuples from ``sets[0] x ... x sets[k-1]`` whose underlying set is an edge.

        Tuples with a repeated vertex never form an edge, so they contribute 0.
        """
        if len(sets) != self.k:
            raise ValueError(f"expected {self.k} vertex sets, got {len(sets)}")
        families = []
        for x in sets:
            fs = frozenset(x)
            if any(v < 0 or v >= self.n for v in fs):
                raise ValueError("vertex set contains a vertex outside [0, n)")
            families.append(fs)
        total = 0
        for e in self.edges:
            for perm in permutations(e):
                if all(v in fam for v, fam in zip(perm, families)):
                    total += 1
        return total

    # -- structure ----------------------------------------------------------

    def is_k_partite(self) -> Partition | None:
        """A k-part partition with every edge rainbow, or None.

        Equivalent to properly k-colouring the pair shadow; empty parts are
        allowed so subgraphs of k-partite graphs validate.
        """
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.shadow(2) if self.edges else ():
            adj[u].add(v)
            adj[v].add(u)
        color = [-1] * self.n

        def assign(v: int) -> bool:
            if v == self.n:
                return True
            taken = {color[u] for u in adj[v] if color[u] >= 0}
            for c in range(self.k):
                if c not in taken:
                    color[v] = c
                    if assign(v + 1):
                        return True
            color[v] = -1
            return False

        if not assign(0):
            return None
        parts = [tuple(v for v in range(self.n) if color[v] == c) for c in range(self.k)]
        return Partition(tuple(parts))

    def duplicate_vertex(self, w: int, t: int) -> "Hypergraph":
        """Add t new vertices, each with exactly the link of w."""
        if not 0 <= w < self.n:
            raise ValueError(f"vertex {w} out of range")
        if t < 1:
            raise ValueError(f"clone count must be >= 1, got {t}")
        new_edges = list(self.edges)
        neighborhood = self.link((w,))
        for i in range(t):
            clone = self.n + i
            for rest in neighborhood:
                new_edges.append(tuple(sorted(rest + (clone,))))
        return Hypergraph(self.k, self.n + t, new_edges)

    def induced(self, vertices: Iterable[int]) -> tuple["Hypergraph", dict[int, int]]:
        """Induced subgraph on the given vertices, relabelled to 0..m-1."""
        keep = sorted(set(vertices))
        if keep and (keep[0] < 0 or keep[-1] >= self.n):
            raise ValueError("induced vertex outside [0, n)")
        remap = {v: i for i, v in enumerate(keep)}
        ks = set(keep)
        edges = [tuple(remap[v] for v in e) for e in self.edges if ks.issuperset(e)]
        return Hypergraph(self.k, len(keep), edges), remap

    def relabel(self, perm: Sequence[int]) -> "Hypergraph":
        """Apply a vertex permutation (``perm[old] = new``)."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm is not a permutation of the vertex set")
        return Hypergraph(self.k, self.n, [tuple(perm[v] for v in e) for e in self.edges])

    # -- serialization -------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"{self.k} {self.n} {len(self.edges)}"]
        lines.extend(" ".join(map(str, e)) for e in self.edges)
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> dict:
        return {"k": self.k, "n": self.n, "edges": [list(e) for e in self.edges]}


def _parse_int(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"non-integer token {token!r}", line) from None


def _parse_text(text: str) -> Hypergraph:
    data_lines: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        data_lines.append((lineno, stripped))
    if not data_lines:
        raise FormatError("empty input, expected a 'k n m' header")
    head_no, head = data_lines[0]
    tokens = head.split()
    if len(tokens) != 3:
        raise FormatError(f"header must be 'k n m', got {head!r}", head_no)
    k, n, m = (_parse_int(t, head_no) for t in tokens)
    if k < 2:
        raise FormatError(f"uniformity k must be >= 2, got {k}", head_no)
    if n < 0 or m < 0:
        raise FormatError("n and m must be non-negative", head_no)
    body = data_lines[1:]
    if len(body) != m:
        raise FormatError(f"expected {m} edge lines, found {len(body)}")
    edges = []
    seen: set[tuple[int, ...]] = set()
    for lineno, line in body:
        toks = line.split()
        if len(toks) != k:
            raise FormatError(f"edge has {len(toks)} vertices, expected {k}", lineno)
        edge = tuple(_parse_int(t, lineno) for t in toks)
        for v in edge:
            if v < 0 or v >= n:
                raise FormatError(f"vertex {v} out of range [0, {n})", lineno)
        for a, b in zip(edge, edge[1:]):
            if a == b:
                raise FormatError(f"repeated vertex {a} in edge", lineno)
            if a > b:
                raise FormatError("edge vertices must be strictly increasing", lineno)
        if edge in seen:
            raise FormatError(f"duplicate edge {' '.join(toks)}", lineno)
        seen.add(edge)
        edges.append(edge)
    return Hypergraph(k, n, edges)


def _parse_json(text: str) -> Hypergraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict) or not {"k", "n", "edges"}.issubset(obj):
        raise FormatError('JSON hypergraph must have keys "k", "n", "edges"')
    try:
        return Hypergraph(obj["k"], obj["n"], obj["edges"])
    except (TypeError, ValueError) as exc:
        raise FormatError(str(exc)) from None


def load_hypergraph(source: str | bytes | IO) -> Hypergraph:
    """Parse a hypergraph from text, bytes, or a readable stream.

    Accepts the line format (``k n m`` header then one sorted edge per line,
    ``#`` comments allowed) or its JSON mirror ``{"k":…, "n":…, "edges":…}``.
    """
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    stripped = source.lstrip()
    if stripped.startswith("{"):
        return _parse_json(source)
    return _parse_text(source)


def all_subsets(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Every subset of ``items`` as a sorted tuple, smallest first."""
    for r in range(len(items) + 1):
        yield from combinations(items, r)
