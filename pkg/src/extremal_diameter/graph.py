"""Immutable simple graphs on vertices ``0..n-1`` backed by adjacency bitmasks.

Distances are plain ints; ``UNREACHABLE`` (``None``) marks vertex pairs in
different components.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from typing import Optional

from .errors import CapacityError, InputError

MAX_ORDER = 64

UNREACHABLE = None
Distance = Optional[int]


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A simple undirected graph. Instances never change after construction.

    >>> g = Graph(3, [(0, 1), (1, 2)])
    >>> g.size(), g.has_edge(2, 1)
    (2, True)
    """

    __slots__ = ("_n", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not isinstance(n, int) or n < 0:
            raise InputError(f"order must be a non-negative integer, got {n!r}")
        if n > MAX_ORDER:
            raise CapacityError(f"order {n} exceeds the supported maximum {MAX_ORDER}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._n = n
        self._adj = tuple(adj)

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> Graph:
        """Build from neighbor bitmasks; the masks must be symmetric and loop-free."""
        n = len(adj)
        if n > MAX_ORDER:
            raise CapacityError(f"order {n} exceeds the supported maximum {MAX_ORDER}")
        full = (1 << n) - 1
        for v, mask in enumerate(adj):
            if mask & ~full or mask >> v & 1:
                raise InputError(f"bad adjacency mask for vertex {v}")
            for u in _bits(mask):
                if not adj[u] >> v & 1:
                    raise InputError(f"asymmetric adjacency between {u} and {v}")
        g = cls.__new__(cls)
        g._n = n
        g._adj = tuple(adj)
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbor bitmask per vertex."""
        return self._adj

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.iter_edges())

    def iter_edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in increasing order."""
        for u, mask in enumerate(self._adj):
            for v in _bits(mask >> (u + 1)):
                yield u, u + 1 + v

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return list(_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [mask.bit_count() for mask in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._adj[u] >> v & 1)

    def size(self) -> int:
        return sum(mask.bit_count() for mask in self._adj) // 2

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self._n)):
            raise InputError("relabeling must be a permutation of 0..n-1")
        return Graph(self._n, ((perm[u], perm[v]) for u, v in self.iter_edges()))

    def with_edge(self, u: int, v: int) -> Graph:
        return Graph(self._n, [*self.iter_edges(), (u, v)])

    def without_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise InputError(f"({u}, {v}) is not an edge")
        drop = (min(u, v), max(u, v))
        return Graph(self._n, (e for e in self.iter_edges() if e != drop))

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self._n):
            raise InputError(f"vertex {v!r} out of range 0..{self._n - 1}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph({self._n}, {sorted(self.iter_edges())})"


class GraphBuilder:
    """Mutable companion to :class:`Graph`."""

    def __init__(self, n: int):
        if n < 0 or n > MAX_ORDER:
            raise CapacityError(f"order must lie in 0..{MAX_ORDER}, got {n}")
        self.n = n
        self._adj = [0] * n

    def add_edge(self, u: int, v: int) -> GraphBuilder:
        if not (0 <= u < self.n and 0 <= v < self.n) or u == v:
            raise InputError(f"invalid edge ({u}, {v}) for order {self.n}")
        self._adj[u] |= 1 << v
        self._adj[v] |= 1 << u
        return self

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> GraphBuilder:
        for u, v in edges:
            self.add_edge(u, v)
        return self

    def add_path(self, vertices: Sequence[int]) -> GraphBuilder:
        for u, v in zip(vertices, vertices[1:]):
            self.add_edge(u, v)
        return self

    def add_clique(self, vertices: Sequence[int]) -> GraphBuilder:
        for k, u in enumerate(vertices):
            for v in vertices[k + 1:]:
                self.add_edge(u, v)
        return self

    def remove_edge(self, u: int, v: int) -> GraphBuilder:
        self._adj[u] &= ~(1 << v)
        self._adj[v] &= ~(1 << u)
        return self

    def build(self) -> Graph:
        return Graph.from_adjacency(self._adj)


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return GraphBuilder(n).add_clique(range(n)).build()


def path_graph(n: int) -> Graph:
    """Path on ``n`` vertices (length ``n - 1``)."""
    return GraphBuilder(n).add_path(range(n)).build()


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return GraphBuilder(n).add_path([*range(n), 0]).build()


def star_graph(n: int) -> Graph:
    """Star on ``n`` vertices centred at 0."""
    return Graph(n, ((0, v) for v in range(1, n)))


def size(g: Graph) -> int:
    return g.size()


def bfs_distances(g: Graph, source: int) -> list[Distance]:
    """Shortest-path lengths from ``source``; ``UNREACHABLE`` for other components."""
    g._check_vertex(source)
    adj = g.adjacency
    dist: list[Distance] = [UNREACHABLE] * g.n
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    level = 0
    while frontier:
        level += 1
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        nxt &= ~seen
        for v in _bits(nxt):
            dist[v] = level
        seen |= nxt
        frontier = nxt
    return dist


def distance(g: Graph, u: int, v: int) -> Distance:
    return bfs_distances(g, u)[v]


def eccentricity(g: Graph, v: int) -> Distance:
    dist = bfs_distances(g, v)
    if UNREACHABLE in dist:
        return UNREACHABLE
    return max(dist)


def diameter(g: Graph) -> Distance:
    """Largest distance over all vertex pairs, or ``UNREACHABLE`` if disconnected."""
    if g.n == 0:
        raise InputError("diameter is undefined for the empty vertex set")
    best = 0
    for v in g.vertices():
        ecc = eccentricity(g, v)
        if ecc is UNREACHABLE:
            return UNREACHABLE
        best = max(best, ecc)
    return best


def is_connected(g: Graph) -> bool:
    return g.n == 0 or UNREACHABLE not in bfs_distances(g, 0)


def diametral_pairs(g: Graph) -> list[tuple[int, int]]:
    """Pairs ``(u, v)``, ``u < v``, at distance equal to the diameter."""
    diam = diameter(g)
    if diam is UNREACHABLE:
        return []
    pairs = []
    for u in g.vertices():
        dist = bfs_distances(g, u)
        pairs.extend((u, v) for v in range(u + 1, g.n) if dist[v] == diam)
    return pairs


def is_clique(g: Graph, vs: Iterable[int]) -> bool:
    vs = list(vs)
    for v in vs:
        g._check_vertex(v)
    mask = 0
    for v in vs:
        mask |= 1 << v
    adj = g.adjacency
    return all((adj[v] | 1 << v) & mask == mask for v in vs)


def is_path(g: Graph, path: Sequence[int]) -> bool:
    """True if ``path`` is a walk along edges with no repeated vertex."""
    _check_path_vertices(g, path)
    return all(g.has_edge(u, v) for u, v in zip(path, path[1:]))


def is_geodesic(g: Graph, path: Sequence[int]) -> bool:
    """True if ``path`` is a path whose length equals the distance between its ends."""
    if not is_path(g, path):
        return False
    return distance(g, path[0], path[-1]) == len(path) - 1


def _check_path_vertices(g: Graph, path: Sequence[int]) -> None:
    if len(path) == 0:
        raise InputError("path must contain at least one vertex")
    for v in path:
        g._check_vertex(v)
    if len(set(path)) != len(path):
        raise InputError(f"path {list(path)} repeats a vertex")
