"""Immutable simple graphs and the induced-structure queries built on them.

Vertices are nonnegative integers.  An induced subgraph keeps the identifiers
of its parent, so colorings of subgraphs can be merged back without renaming.
Adjacency is held twice: as sorted neighbor tuples for deterministic
iteration and as integer bit rows for fast induced-ness checks.
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass

from .errors import InputError

UNREACHABLE = math.inf

Coloring = dict[int, int]


def bit(v: int) -> int:
    return 1 << v


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits_to_list(m: int) -> list[int]:
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return out


class Graph:
    """A simple undirected graph; never mutated after construction."""

    __slots__ = ("_vertices", "_vset", "_nbrs", "_rows", "_edge_count", "_mask")

    def __init__(self, adjacency: Mapping[int, Iterable[int]]) -> None:
        nbrs: dict[int, tuple[int, ...]] = {}
        rows: dict[int, int] = {}
        total = 0
        for v in sorted(adjacency):
            ns = tuple(sorted(set(adjacency[v])))
            nbrs[v] = ns
            rows[v] = mask_of(ns)
            total += len(ns)
        self._vertices = tuple(sorted(adjacency))
        self._vset = frozenset(self._vertices)
        self._nbrs = nbrs
        self._rows = rows
        self._edge_count = total // 2
        self._mask = mask_of(self._vertices)

    # -- basic accessors -------------------------------------------------
    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def vertex_set(self) -> frozenset[int]:
        return self._vset

    @property
    def vertex_mask(self) -> int:
        return self._mask

    @property
    def edge_count(self) -> int:
        return self._edge_count

    @property
    def n(self) -> int:
        return len(self._vertices)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return frozenset(self._nbrs[v])

    def row(self, v: int) -> int:
        return self._rows[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, w) for u in self._vertices for w in self._nbrs[u] if u < w]

    def adjacency(self) -> dict[int, tuple[int, ...]]:
        return dict(self._nbrs)

    def __contains__(self, v: object) -> bool:
        return v in self._vset

    def __iter__(self) -> Iterator[int]:
        return iter(self._vertices)

    def __len__(self) -> int:
        return len(self._vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._nbrs == other._nbrs

    def __hash__(self) -> int:
        return hash(tuple(self._nbrs.items()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"

    # -- derived graphs --------------------------------------------------
    def induced(self, keep: Iterable[int]) -> Graph:
        keep_set = set(keep)
        unknown = keep_set - self._vset
        if unknown:
            raise InputError(f"unknown vertices {sorted(unknown)}")
        km = mask_of(keep_set)
        return Graph({v: bits_to_list(self._rows[v] & km) for v in keep_set})

    def without(self, drop: Iterable[int]) -> Graph:
        return self.induced(self._vset - set(drop))


def build_graph(n_vertices: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on vertices ``0..n_vertices-1``; duplicate edges collapse."""
    if n_vertices < 0:
        raise InputError("vertex count must be nonnegative")
    adj: dict[int, set[int]] = {v: set() for v in range(n_vertices)}
    for e in edges:
        u, v = e
        if not (0 <= u < n_vertices and 0 <= v < n_vertices):
            raise InputError(f"edge {e} references a vertex outside 0..{n_vertices - 1}")
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(adj)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    return g.induced(keep)


# ---------------------------------------------------------------------------
# Cycles of length seven
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class CycleC7:
    """An induced 7-cycle ``v1 - v2 - ... - v7 - v1``.

    ``v(i)`` uses 1-based indices taken modulo 7, so ``v(0) == v(7)`` and
    ``v(9) == v(2)``.  ``canonical`` is true when the tuple starts at the
    minimum identifier and runs toward the smaller of its two neighbors.
    """

    vertices: tuple[int, ...]
    canonical: bool = True

    def __post_init__(self) -> None:
        if len(self.vertices) != 7 or len(set(self.vertices)) != 7:
            raise InputError(f"a C7 needs 7 distinct vertices, got {self.vertices}")

    def v(self, i: int) -> int:
        return self.vertices[(i - 1) % 7]

    def index_of(self, vertex: int) -> int:
        return self.vertices.index(vertex) + 1

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def oriented(self, start: int, step: int = 1) -> CycleC7:
        """Relabel so that the old ``v(start)`` becomes ``v1``.

        ``step=-1`` walks the cycle in the opposite direction.
        """
        if step not in (1, -1):
            raise InputError("step must be +1 or -1")
        seq = tuple(self.v(start + step * k) for k in range(7))
        return CycleC7(seq, canonical=False).normalized_flag()

    def reflected_at(self, i: int) -> CycleC7:
        """Relabel by ``v'(i + k) = v(i - k)``, which swaps the two sides of ``v(i)``."""
        seq = tuple(self.v(2 * i - j) for j in range(1, 8))
        return CycleC7(seq, canonical=False).normalized_flag()

    def normalized_flag(self) -> CycleC7:
        canon = canonical_cycle(self.vertices)
        if canon == self.vertices and not self.canonical:
            return CycleC7(self.vertices, canonical=True)
        return self

    def to_canonical(self) -> CycleC7:
        return CycleC7(canonical_cycle(self.vertices), canonical=True)

    def is_induced_in(self, g: Graph) -> bool:
        for a in range(1, 8):
            for b in range(a + 1, 8):
                adjacent = g.has_edge(self.v(a), self.v(b))
                consecutive = (b - a) in (1, 6)
                if adjacent != consecutive:
                    return False
        return True


def canonical_cycle(seq: tuple[int, ...]) -> tuple[int, ...]:
    k = len(seq)
    s = seq.index(min(seq))
    fwd = tuple(seq[(s + j) % k] for j in range(k))
    bwd = tuple(seq[(s - j) % k] for j in range(k))
    return fwd if fwd[1] < bwd[1] else bwd


# ---------------------------------------------------------------------------
# Induced paths and cycles
# ---------------------------------------------------------------------------


def is_induced_path(g: Graph, seq: Iterable[int]) -> bool:
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return False
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if g.has_edge(seq[a], seq[b]) != (b == a + 1):
                return False
    return True


def find_induced_path(g: Graph, k: int) -> tuple[int, ...] | None:
    """First induced path on ``k`` vertices in DFS order, or ``None``.

    Start vertices and neighbors are tried in ascending order, so the answer
    is the lexicographically least such vertex sequence.
    """
    if k < 1:
        raise InputError("path length must be at least 1")
    if k > g.n:
        return None
    path: list[int] = []

    def extend(pmask: int, before_last: int) -> bool:
        if len(path) == k:
            return True
        last = path[-1]
        for w in g.neighbors(last):
            if pmask >> w & 1 or g.row(w) & before_last:
                continue
            path.append(w)
            if extend(pmask | bit(w), pmask):
                return True
            path.pop()
        return False

    for s in g.vertices:
        path.append(s)
        if extend(bit(s), 0):
            return tuple(path)
        path.pop()
    return None


def iter_induced_cycles(g: Graph, length: int) -> Iterator[tuple[int, ...]]:
    """Every induced cycle of ``length`` vertices once, in canonical form.

    Canonical form starts at the least vertex and continues toward its
    smaller cycle neighbor; output is lexicographically increasing.
    """
    if length < 3 or length > g.n:
        return
    path: list[int] = []

    def extend(pmask: int, before_last: int, start: int) -> Iterator[tuple[int, ...]]:
        last = path[-1]
        closing = len(path) == length - 1
        for w in g.neighbors(last):
            if w <= start or pmask >> w & 1:
                continue
            hits = g.row(w) & before_last
            if closing:
                if hits != bit(start) or w < path[1]:
                    continue
                path.append(w)
                yield tuple(path)
                path.pop()
            else:
                if hits:
                    continue
                path.append(w)
                yield from extend(pmask | bit(w), pmask, start)
                path.pop()

    for s in g.vertices:
        path.append(s)
        for w in g.neighbors(s):
            if w <= s:
                continue
            path.append(w)
            yield from extend(bit(s) | bit(w), bit(s), s)
            path.pop()
        path.pop()


def enumerate_induced_c7(g: Graph) -> Iterator[CycleC7]:
    for seq in iter_induced_cycles(g, 7):
        yield CycleC7(seq, canonical=True)


def find_comparable_pair(g: Graph) -> tuple[int, int] | None:
    """Least ordered pair ``(u, v)`` of non-adjacent vertices with ``N(u) ⊆ N(v)``."""
    for u in g.vertices:
        ru = g.row(u)
        for v in g.vertices:
            if v == u or ru >> v & 1:
                continue
            if ru & ~g.row(v) == 0:
                return (u, v)
    return None


def distances_from_set(g: Graph, s: Iterable[int]) -> dict[int, float]:
    sources = list(s)
    if not sources:
        raise InputError("distance source set is empty")
    for v in sources:
        if v not in g:
            raise InputError(f"unknown vertex {v}")
    dist: dict[int, float] = {v: UNREACHABLE for v in g.vertices}
    queue: deque[int] = deque()
    for v in sources:
        if dist[v] != 0:
            dist[v] = 0
            queue.append(v)
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if dist[w] == UNREACHABLE:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def connected_components(g: Graph) -> list[frozenset[int]]:
    seen: set[int] = set()
    comps = []
    for s in g.vertices:
        if s in seen:
            continue
        comp = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def bipartition(g: Graph) -> Coloring | None:
    """Proper coloring with colors 1 and 2, or ``None`` if an odd cycle exists."""
    color: Coloring = {}
    for s in g.vertices:
        if s in color:
            continue
        color[s] = 1
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in color:
                    color[w] = 3 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def closed_neighborhood(g: Graph, vertices: Iterable[int]) -> frozenset[int]:
    out = set(vertices)
    for v in list(out):
        out.update(g.neighbors(v))
    return frozenset(out)
