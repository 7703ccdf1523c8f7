"""The family of graphs with maximum size for given order and diameter.

Every member is a path p_0..p_d plus a clique S of s = n-d-1 further
vertices. Each S-vertex is joined to three consecutive path vertices. Either
all of them use the same triple (window of 3), or the triples are the first
and last three of a window of 4 consecutive path vertices, with both triples
used.

Vertex numbering: path vertices 0..d in order, then the ``a`` vertices on
the first triple, then the ``b`` vertices on the last triple.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .bound import check_order_diameter
from .canon import CanonicalForm, canonical_form
from .errors import DomainError
from .graph import Graph, GraphBuilder


@dataclass(frozen=True)
class ExtremalParams:
    """One labeled member of the extremal family.

    ``window_start`` and ``window_len`` are ``None`` for the bare path
    (n = d + 1); ``split`` is ``(a, b)``, the number of S-vertices on the
    first and on the last triple of the window.
    """

    n: int
    d: int
    window_start: Optional[int]
    window_len: Optional[int]
    split: tuple[int, int]

    def __post_init__(self):
        try:
            check_order_diameter(self.n, self.d)
        except DomainError as exc:
            raise DomainError(f"invalid extremal parameters: {exc}") from None
        s = self.off_path
        i, length, (a, b) = self.window_start, self.window_len, self.split
        if s == 0:
            if i is not None or length is not None or (a, b) != (0, 0):
                raise DomainError("n = d + 1 admits only the bare path (no window, split (0, 0))")
            return
        if i is None or length is None:
            raise DomainError(f"s = {s} off-path vertices need a window")
        if i < 0:
            raise DomainError(f"window start must be >= 0, got {i}")
        if length == 3:
            if i + 2 > self.d:
                raise DomainError(f"window of 3 at {i} runs past the path end p_{self.d}")
            if (a, b) != (s, 0):
                raise DomainError(f"window of 3 requires split ({s}, 0), got {self.split}")
        elif length == 4:
            if i + 3 > self.d:
                raise DomainError(f"window of 4 at {i} runs past the path end p_{self.d}")
            if a < 1 or b < 1 or a + b != s:
                raise DomainError(
                    f"window of 4 requires a, b >= 1 with a + b = {s}, got {self.split}")
        else:
            raise DomainError(f"window length must be 3 or 4, got {length}")

    @classmethod
    def bare_path(cls, d: int) -> ExtremalParams:
        return cls(d + 1, d, None, None, (0, 0))

    @property
    def off_path(self) -> int:
        return self.n - self.d - 1

    @property
    def is_bare_path(self) -> bool:
        return self.window_len is None

    def reversed(self) -> ExtremalParams:
        """Parameters of the same graph read along the reversed path."""
        if self.is_bare_path:
            return self
        a, b = self.split
        start = self.d - self.window_len + 1 - self.window_start
        split = (a, b) if self.window_len == 3 else (b, a)
        return ExtremalParams(self.n, self.d, start, self.window_len, split)


def realize(p: ExtremalParams) -> Graph:
    d = p.d
    builder = GraphBuilder(p.n).add_path(range(d + 1))
    s_vertices = range(d + 1, p.n)
    builder.add_clique(s_vertices)
    if not p.is_bare_path:
        a, _ = p.split
        i = p.window_start
        for k, v in enumerate(s_vertices):
            first = i if k < a else i + 1
            builder.add_edges((v, first + t) for t in range(3))
    return builder.build()


def enumerate_params(n: int, d: int) -> list[ExtremalParams]:
    """All labeled parameter tuples: windows of 3 by start, then windows of 4 by start and split."""
    check_order_diameter(n, d)
    s = n - d - 1
    if s == 0:
        return [ExtremalParams.bare_path(d)]
    params = [ExtremalParams(n, d, i, 3, (s, 0)) for i in range(d - 1)]
    params += [
        ExtremalParams(n, d, i, 4, (a, s - a))
        for i in range(d - 2)
        for a in range(1, s)
    ]
    return params


def enumerate_extremal(n: int, d: int) -> list[tuple[ExtremalParams, Graph]]:
    return [(p, realize(p)) for p in enumerate_params(n, d)]


def enumerate_extremal_up_to_iso(n: int, d: int) -> list[tuple[CanonicalForm, Graph]]:
    """One representative per isomorphism class, sorted by canonical form."""
    classes: dict[CanonicalForm, Graph] = {}
    for _, g in enumerate_extremal(n, d):
        classes.setdefault(canonical_form(g), g)
    return sorted(classes.items(), key=lambda item: item[0])


def extremal_forms(n: int, d: int) -> list[CanonicalForm]:
    return [form for form, _ in enumerate_extremal_up_to_iso(n, d)]
