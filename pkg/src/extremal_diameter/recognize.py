"""Recognition of maximum-size graphs and their structural certificates."""

from __future__ import annotations

import enum
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Optional

from .bound import ore_max_size
from .construct import ExtremalParams
from .errors import CharacterizationError, DomainError, InputError, SearchLimitError
from .graph import (
    Graph,
    _bits,
    bfs_distances,
    diameter,
    is_clique,
    is_geodesic,
)

DEFAULT_GEODESIC_LIMIT = 10**6


class Choice(enum.Enum):
    FIRST_THREE = "first"
    LAST_THREE = "last"


@dataclass(frozen=True)
class Certificate:
    """Decomposition of a graph into a diametral geodesic, a clique and a window.

    ``window_start``/``window_len`` are ``None`` when there are no off-path
    vertices.
    """

    path: tuple[int, ...]
    s_vertices: frozenset[int]
    window_start: Optional[int]
    window_len: Optional[int]
    choice: Mapping[int, Choice] = field(default_factory=dict)

    def triple(self, v: int) -> tuple[int, int, int]:
        """Path indices that S-vertex ``v`` must be adjacent to."""
        offset = 1 if self.choice[v] is Choice.LAST_THREE else 0
        start = self.window_start + offset
        return (start, start + 1, start + 2)

    def split(self) -> tuple[int, int]:
        first = sum(1 for c in self.choice.values() if c is Choice.FIRST_THREE)
        return first, len(self.choice) - first

    def to_params(self) -> ExtremalParams:
        n = len(self.path) + len(self.s_vertices)
        d = len(self.path) - 1
        if not self.s_vertices:
            return ExtremalParams.bare_path(d)
        a, b = self.split()
        if self.window_len == 4 and (a == 0 or b == 0):
            return ExtremalParams(n, d, self.window_start + (1 if a == 0 else 0), 3, (a + b, 0))
        return ExtremalParams(n, d, self.window_start, self.window_len, (a, b))

    def to_dict(self) -> dict:
        return {
            "path": list(self.path),
            "s_vertices": sorted(self.s_vertices),
            "window_start": self.window_start,
            "window_len": self.window_len,
            "choice": {str(v): self.choice[v].value for v in sorted(self.choice)},
        }


def certificate_from_params(p: ExtremalParams) -> Certificate:
    """The certificate that ``realize(p)`` carries by construction."""
    path = tuple(range(p.d + 1))
    s_vertices = range(p.d + 1, p.n)
    a, _ = p.split
    choice = {v: Choice.FIRST_THREE if k < a else Choice.LAST_THREE for k, v in enumerate(s_vertices)}
    return Certificate(path, frozenset(s_vertices), p.window_start, p.window_len, choice)


def is_extremal(g: Graph, d: int) -> bool:
    """True iff ``g`` has diameter ``d`` and the maximum size for its order."""
    if d < 2:
        raise DomainError(f"d must be >= 2, got {d}")
    if g.n < d + 1:
        return False
    if g.size() != ore_max_size(g.n, d):
        return False
    return diameter(g) == d


def _path_neighbor_indices(g: Graph, v: int, index_of: Mapping[int, int]) -> list[int]:
    return sorted(index_of[u] for u in _bits(g.adjacency[v]) if u in index_of)


def _decompose(g: Graph, path: Sequence[int]) -> Optional[Certificate]:
    index_of = {v: k for k, v in enumerate(path)}
    s_vertices = [v for v in g.vertices() if v not in index_of]
    if not s_vertices:
        return Certificate(tuple(path), frozenset(), None, None, {})
    if not is_clique(g, s_vertices):
        return None
    starts = {}
    for v in s_vertices:
        idx = _path_neighbor_indices(g, v, index_of)
        if len(idx) != 3 or idx[2] - idx[0] != 2:
            return None
        starts[v] = idx[0]
    lo, hi = min(starts.values()), max(starts.values())
    if hi - lo > 1:
        return None
    window_len = 3 if hi == lo else 4
    choice = {v: Choice.FIRST_THREE if st == lo else Choice.LAST_THREE for v, st in starts.items()}
    return Certificate(tuple(path), frozenset(s_vertices), lo, window_len, choice)


def iter_geodesics(g: Graph, x: int, y: int, dist: Sequence[Sequence[Optional[int]]] | None = None) -> Iterator[tuple[int, ...]]:
    """All shortest ``x``-``y`` paths in lexicographic vertex order."""
    if dist is None:
        dx, dy = bfs_distances(g, x), bfs_distances(g, y)
    else:
        dx, dy = dist[x], dist[y]
    length = dx[y]
    if length is None:
        return
    adj = g.adjacency
    path = [x]

    def extend(v: int, k: int) -> Iterator[tuple[int, ...]]:
        if k == length:
            yield tuple(path)
            return
        for w in _bits(adj[v]):
            if dx[w] == k + 1 and dy[w] == length - k - 1:
                path.append(w)
                yield from extend(w, k + 1)
                path.pop()

    yield from extend(x, 0)


def extract_certificate(g: Graph, d: int, limit: int = DEFAULT_GEODESIC_LIMIT) -> Optional[Certificate]:
    """Find a certificate for ``g``, or ``None`` when ``g`` is not extremal.

    Diametral pairs are tried in increasing order and, for each, geodesics in
    lexicographic order; the first decomposition that fits wins. At most
    ``limit`` geodesics are examined before :class:`SearchLimitError`.
    """
    if not is_extremal(g, d):
        return None
    dist = [bfs_distances(g, v) for v in g.vertices()]
    examined = 0
    for x in g.vertices():
        for y in range(x + 1, g.n):
            if dist[x][y] != d:
                continue
            for path in iter_geodesics(g, x, y, dist):
                examined += 1
                if examined > limit:
                    raise SearchLimitError(f"more than {limit} geodesics examined")
                cert = _decompose(g, path)
                if cert is not None:
                    return cert
    raise CharacterizationError(
        f"graph {g!r} has diameter {d} and maximum size but no certificate was found")


def _check_in_range(g: Graph, vertices) -> None:
    for v in vertices:
        if not (isinstance(v, int) and 0 <= v < g.n):
            raise InputError(f"vertex {v!r} out of range 0..{g.n - 1}")


def validate_certificate(g: Graph, c: Certificate, d: int) -> bool:
    """Check every certificate condition against ``g`` without searching."""
    _check_in_range(g, c.path)
    _check_in_range(g, c.s_vertices)
    _check_in_range(g, c.choice)
    if d < 2 or g.n < d + 1:
        return False
    path = list(c.path)
    if len(path) != d + 1 or len(set(path)) != len(path):
        return False
    if set(path) & c.s_vertices or len(path) + len(c.s_vertices) != g.n:
        return False
    if not is_geodesic(g, path):
        return False
    if not is_clique(g, c.s_vertices):
        return False
    if set(c.choice) != set(c.s_vertices):
        return False
    if c.s_vertices or c.window_len is not None:
        if c.window_len not in (3, 4) or c.window_start is None:
            return False
        if c.window_start < 0 or c.window_start + c.window_len - 1 > d:
            return False
    index_of = {v: k for k, v in enumerate(path)}
    for v in c.s_vertices:
        if c.choice[v] is Choice.LAST_THREE and c.window_len != 4:
            return False
        if tuple(_path_neighbor_indices(g, v, index_of)) != c.triple(v):
            return False
    return g.size() == ore_max_size(g.n, d)


def geodesic_neighbor_lemma(g: Graph, path: Sequence[int], graph_diameter: Optional[int] = None) -> bool:
    """Every off-path vertex sees path vertices whose indices span at most 2.

    ``path`` must be a geodesic between two vertices at maximum distance.
    Pass ``graph_diameter`` when it is already known to skip recomputing it.
    """
    if not is_geodesic(g, path):
        raise InputError(f"{list(path)} is not a geodesic")
    if graph_diameter is None:
        graph_diameter = diameter(g)
    if len(path) - 1 != graph_diameter:
        raise InputError(f"{list(path)} does not join a diametral pair")
    index_of = {v: k for k, v in enumerate(path)}
    for v in g.vertices():
        if v in index_of:
            continue
        idx = _path_neighbor_indices(g, v, index_of)
        if idx and idx[-1] - idx[0] > 2:
            return False
    return True


def window_union_lemma(g: Graph, c: Certificate) -> bool:
    """All S-vertex neighbors on the path lie within at most 4 consecutive path vertices.

    Only the partition of the vertices into ``c.path`` and ``c.s_vertices``
    is required; if ``c`` names a window, the union must also lie inside it.
    """
    _check_in_range(g, c.path)
    _check_in_range(g, c.s_vertices)
    if set(c.path) & c.s_vertices or len(set(c.path)) + len(c.s_vertices) != g.n:
        raise InputError("certificate path and S do not partition the vertex set")
    index_of = {v: k for k, v in enumerate(c.path)}
    union: set[int] = set()
    for v in c.s_vertices:
        union.update(_path_neighbor_indices(g, v, index_of))
    if not union:
        return True
    lo, hi = min(union), max(union)
    if hi - lo > 3:
        return False
    if c.window_len is not None:
        if c.window_len > 4 or c.window_start is None:
            return False
        return c.window_start <= lo and hi <= c.window_start + c.window_len - 1
    return True
