"""Canonical forms and isomorphism testing for graphs with at most 10 vertices.

The canonical form is the graph6 encoding of a relabeling whose graph6 bit
string is lexicographically smallest among all relabelings that list the
vertices cell by cell of the stable color-refinement partition. The partition
and its cell order depend only on the isomorphism type, so the form is a
complete invariant. Ties inside a cell are resolved by exhaustive
branch-and-bound search; swapping two twin vertices is an automorphism, so
only one of any set of twin candidates is expanded.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError
from .g6 import pack_bits
from .graph import Graph, _bits

MAX_CANON_ORDER = 10


@dataclass(frozen=True, order=True)
class CanonicalForm:
    data: bytes

    def __str__(self) -> str:
        return self.data.decode("ascii")


def refine_colors(g: Graph) -> list[int]:
    """Stable color-refinement coloring with label-independent color ids."""
    adj = g.adjacency
    colors = [mask.bit_count() for mask in adj]
    ncolors = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in _bits(adj[v]))))
            for v in range(g.n)
        ]
        ids = {sig: k for k, sig in enumerate(sorted(set(sigs)))}
        colors = [ids[sig] for sig in sigs]
        if len(ids) == ncolors:
            return colors
        ncolors = len(ids)


def canonical_labeling(g: Graph) -> list[int]:
    """Return ``order`` with ``order[k]`` the vertex placed at canonical position ``k``."""
    n = g.n
    if n > MAX_CANON_ORDER:
        raise CapacityError(f"canonical forms are supported for n <= {MAX_CANON_ORDER}, got {n}")
    adj = g.adjacency
    colors = refine_colors(g)
    cell_of_position = sorted(colors)

    best_cols: list[int] | None = None
    best_order: list[int] = []
    order: list[int] = []
    cols: list[int] = []
    unplaced = (1 << n) - 1

    def column(v: int) -> int:
        col = 0
        for u in order:
            col = col << 1 | (adj[u] >> v & 1)
        return col

    def search(k: int) -> None:
        nonlocal best_cols, best_order, unplaced
        if k == n:
            if best_cols is None or cols < best_cols:
                best_cols = cols.copy()
                best_order = order.copy()
            return
        cell = cell_of_position[k]
        scored = [(column(v), v) for v in _bits(unplaced) if colors[v] == cell]
        low = min(c for c, _ in scored)
        if best_cols is not None:
            prefix = cols + [low]
            if prefix > best_cols[:k + 1]:
                return
        kept: list[int] = []
        for c, v in scored:
            if c != low:
                continue
            if any((adj[u] & ~(1 << v)) == (adj[v] & ~(1 << u)) for u in kept):
                continue
            kept.append(v)
        for v in kept:
            if best_cols is not None and cols + [low] > best_cols[:k + 1]:
                return
            order.append(v)
            cols.append(low)
            unplaced &= ~(1 << v)
            search(k + 1)
            unplaced |= 1 << v
            cols.pop()
            order.pop()

    search(0)
    return best_order


def canonical_form(g: Graph) -> CanonicalForm:
    order = canonical_labeling(g)
    adj = g.adjacency
    bits = [adj[order[i]] >> order[j] & 1 for j in range(1, g.n) for i in range(j)]
    return CanonicalForm(bytes([g.n + 63]) + pack_bits(bits))


def canonical_graph(g: Graph) -> Graph:
    """The relabeled graph whose graph6 encoding is the canonical form."""
    order = canonical_labeling(g)
    position = [0] * g.n
    for k, v in enumerate(order):
        position[v] = k
    return g.relabel(position)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.size() != h.size():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
