"""Maximum number of edges of a graph with given order and diameter.

For d >= 2 the maximum is d + (n-d-1)(n-d+4)/2. It splits as the d edges of a
diametral path, at most 3 path neighbors for each of the s = n-d-1 remaining
vertices, and at most C(s, 2) edges among those vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import DomainError


@dataclass(frozen=True)
class BoundQuery:
    n: int
    d: int

    def __post_init__(self):
        check_order_diameter(self.n, self.d)

    @property
    def off_path(self) -> int:
        """Number of vertices not on a diametral path."""
        return self.n - self.d - 1


@dataclass(frozen=True)
class BoundBreakdown:
    path_edges: int
    cross_edges: int
    clique_edges: int
    total: int


def check_order_diameter(n: int, d: int) -> None:
    if not isinstance(n, int) or not isinstance(d, int):
        raise DomainError(f"n and d must be integers, got n={n!r}, d={d!r}")
    if d < 2:
        raise DomainError(f"d must be >= 2 (got d={d}); d = 1 means the complete graph K_n")
    if d > n - 1:
        raise DomainError(f"d must be <= n - 1 (got n={n}, d={d}); a path of length d needs d + 1 vertices")


def _query(n_or_query: int | BoundQuery, d: int | None) -> BoundQuery:
    if isinstance(n_or_query, BoundQuery):
        return n_or_query
    if d is None:
        raise DomainError("diameter d is required")
    return BoundQuery(n_or_query, d)


def ore_max_size(n: int | BoundQuery, d: int | None = None) -> int:
    """Largest size of a graph of order ``n`` and diameter ``d``.

    >>> ore_max_size(5, 2), ore_max_size(7, 3)
    (9, 15)
    """
    q = _query(n, d)
    n, d = q.n, q.d
    return d + (n - d - 1) * (n - d + 4) // 2


def bound_breakdown(n: int | BoundQuery, d: int | None = None) -> BoundBreakdown:
    q = _query(n, d)
    s = q.off_path
    path_edges = q.d
    cross_edges = 3 * s
    clique_edges = comb(s, 2)
    return BoundBreakdown(path_edges, cross_edges, clique_edges,
                          path_edges + cross_edges + clique_edges)


def valid_pairs(n_max: int, n_min: int = 3) -> list[tuple[int, int]]:
    """All ``(n, d)`` with ``n_min <= n <= n_max`` and ``2 <= d <= n - 1``, ordered by n then d."""
    return [(n, d) for n in range(max(n_min, 3), n_max + 1) for d in range(2, n)]
