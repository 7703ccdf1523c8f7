"""Exhaustive search for the largest graphs of given order and diameter.

Labeled graphs on n vertices are identified with edge bitmasks over the
C(n, 2) vertex pairs (bit ``j(j-1)/2 + i`` is the pair ``i < j``). The
masks are cut into fixed blocks of consecutive integers, i.e. by their
high-order bits; each block is scanned with numpy, computing all diameters
at once by repeated neighborhood expansion. Block boundaries do not depend
on the worker count and results are merged in block order, so reports are
identical for any number of workers.

Two modes:

* ``full`` (n <= 7): every labeled graph is examined, apart from graphs with
  fewer edges than the best already found, which cannot change the result.
* ``pruned`` (opt-in, required for n = 8): graphs with fewer edges than the
  closed-form bound are skipped, so the report confirms that no graph
  exceeds the bound and lists the graphs attaining it.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .bound import check_order_diameter, ore_max_size, valid_pairs
from .canon import CanonicalForm, canonical_form
from .errors import CapacityError
from .graph import Graph

MAX_FULL_ORDER = 7
MAX_PRUNED_ORDER = 8
BLOCK_BITS = 16


@dataclass(frozen=True)
class OracleReport:
    n: int
    d: int
    max_size: Optional[int]
    extremal_forms: tuple[CanonicalForm, ...]
    labeled_count: int
    mode: str
    elapsed: float = field(default=0.0, compare=False)

    @property
    def formula(self) -> int:
        return ore_max_size(self.n, self.d)

    @property
    def matches_formula(self) -> bool:
        return self.max_size == self.formula

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "max_size": self.max_size,
            "formula": self.formula,
            "classes": len(self.extremal_forms),
            "labeled_count": self.labeled_count,
            "mode": self.mode,
            "forms": [str(f) for f in self.extremal_forms],
        }


def edge_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def graph_from_mask(n: int, mask: int) -> Graph:
    return Graph(n, (pair for k, pair in enumerate(edge_pairs(n)) if mask >> k & 1))


def diameters_of_masks(n: int, masks: np.ndarray, d_max: int) -> np.ndarray:
    """Diameter of each labeled graph, or -1 if it exceeds ``d_max`` or is disconnected."""
    masks = masks.astype(np.int64, copy=False)
    # 0xFF where the edge is present, 0x00 otherwise
    present = [(((masks >> k) & 1) * 0xFF).astype(np.uint8) for k in range(n * (n - 1) // 2)]
    full = (1 << n) - 1
    # reach[v]: bitmask of vertices within the current radius of v
    reach = [np.full(masks.shape, 1 << v, dtype=np.uint8) for v in range(n)]
    result = np.full(masks.shape, -1, dtype=np.int8)
    done = np.full(masks.shape, n <= 1)
    result[done] = 0
    tmp = np.empty(masks.shape, dtype=np.uint8)
    for step in range(1, d_max + 1):
        grown = [r.copy() for r in reach]
        for k, (i, j) in enumerate(edge_pairs(n)):
            np.bitwise_and(reach[j], present[k], out=tmp)
            grown[i] |= tmp
            np.bitwise_and(reach[i], present[k], out=tmp)
            grown[j] |= tmp
        reach = grown
        now_done = np.logical_and.reduce([r == full for r in reach])
        result[now_done & ~done] = step
        done = now_done
    return result


def scan_block(n: int, d: int, block: int, floor: int) -> tuple[int, list[int]]:
    """Best size among diameter-``d`` graphs in one block with at least ``floor`` edges.

    Returns ``(-1, [])`` if the block holds no such graph.
    """
    m = n * (n - 1) // 2
    bits = min(m, BLOCK_BITS)
    start = block << bits
    masks = np.arange(start, start + (1 << bits), dtype=np.int64)
    counts = np.bitwise_count(masks)
    if floor > 0:
        keep = counts >= floor
        masks, counts = masks[keep], counts[keep]
    if masks.size == 0:
        return -1, []
    diam = diameters_of_masks(n, masks, d)
    hit = diam == d
    if not hit.any():
        return -1, []
    best = int(counts[hit].max())
    winners = masks[hit & (counts == best)]
    return best, [int(x) for x in winners]


def _scan_task(args: tuple[int, int, int, int]) -> tuple[int, list[int]]:
    return scan_block(*args)


def _check_oracle_range(n: int, d: int, pruned: bool) -> None:
    if n > MAX_PRUNED_ORDER:
        raise CapacityError(f"exhaustive search supports n <= {MAX_PRUNED_ORDER}, got n={n}")
    if n > MAX_FULL_ORDER and not pruned:
        raise CapacityError(f"n={n} needs the pruned mode (full search supports n <= {MAX_FULL_ORDER})")
    check_order_diameter(n, d)


def oracle_search(n: int, d: int, workers: int = 1, pruned: bool = False,
                  prune: bool = True) -> OracleReport:
    """Find the maximum size over all labeled graphs of order ``n`` and diameter ``d``.

    ``prune=False`` disables skipping of graphs below the best size found so
    far (same results, slower); it has no effect in pruned mode.
    """
    if workers < 1:
        raise ValueError("workers must be >= 1")
    _check_oracle_range(n, d, pruned)
    t0 = time.perf_counter()
    m = n * (n - 1) // 2
    nblocks = 1 << max(0, m - BLOCK_BITS)
    floor = ore_max_size(n, d) if pruned else 0

    results: list[tuple[int, list[int]]] = []
    if workers == 1:
        best = -1
        for block in range(nblocks):
            block_floor = max(floor, best) if prune else floor
            res = scan_block(n, d, block, block_floor)
            best = max(best, res[0])
            results.append(res)
    else:
        tasks = [(n, d, block, floor) for block in range(nblocks)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_task, tasks, chunksize=max(1, nblocks // (4 * workers))))

    best = max((size for size, _ in results), default=-1)
    winners = [mask for size, masks in results if size == best for mask in masks]
    forms = sorted({canonical_form(graph_from_mask(n, mask)) for mask in winners})
    return OracleReport(
        n=n,
        d=d,
        max_size=best if best >= 0 else None,
        extremal_forms=tuple(forms),
        labeled_count=len(winners),
        mode="pruned" if pruned else "full",
        elapsed=time.perf_counter() - t0,
    )


def oracle_table(n_max: int, workers: int = 1, pruned: bool = False) -> list[OracleReport]:
    """Reports for every valid ``(n, d)`` with ``n <= n_max``, ordered by n then d.

    Orders up to 7 always use full mode; ``pruned`` enables order 8.
    """
    if n_max > MAX_PRUNED_ORDER or (n_max > MAX_FULL_ORDER and not pruned):
        _check_oracle_range(n_max, 2, pruned)
    return [
        oracle_search(n, d, workers=workers, pruned=n > MAX_FULL_ORDER)
        for n, d in valid_pairs(n_max)
    ]
