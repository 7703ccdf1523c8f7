"""Exit criteria for the toolkit. Each test records one PASS/FAIL line.

The lines are printed in pytest's terminal summary; running this file as a
script (``python -m tests.test_acceptance``) prints them directly.
"""

from __future__ import annotations

import io
import itertools
import random
import time

from extremal_diameter.bound import bound_breakdown, ore_max_size, valid_pairs
from extremal_diameter.cli import main
from extremal_diameter.construct import enumerate_extremal, extremal_forms
from extremal_diameter.g6 import decode_g6, encode_g6
from extremal_diameter.graph import (
    Graph,
    bfs_distances,
    diameter,
    diametral_pairs,
    is_connected,
)
from extremal_diameter.oracle import oracle_search
from extremal_diameter.recognize import (
    certificate_from_params,
    extract_certificate,
    geodesic_neighbor_lemma,
    iter_geodesics,
    validate_certificate,
)

from .conftest import all_graphs, random_connected_graph

RESULTS: list[str] = []

ORACLE_MAX_N = 7
ORACLE_TIME_BUDGET = 120.0  # seconds, single worker, criterion 1
CONSTRUCT_MAX_N = 12
LEMMA_EXHAUSTIVE_MAX_N = 6
LEMMA_RANDOM_GRAPHS = 10_000
LEMMA_RANDOM_MAX_N = 10
LEMMA_GEODESIC_CAP = 100
IDENTITY_MAX_N = 1000
G6_RANDOM_GRAPHS = 1000
G6_MAX_N = 20
ROUND_TRIP_MAX_N = 10
DETERMINISM_N_MAX = 6

_oracle_cache: dict[tuple[int, int], object] = {}
_oracle_seconds = 0.0


def record(number: int, name: str, ok: bool, detail: str) -> None:
    RESULTS.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {name} -- {detail}")


def _oracle(n: int, d: int):
    global _oracle_seconds
    if (n, d) not in _oracle_cache:
        t0 = time.perf_counter()
        _oracle_cache[(n, d)] = oracle_search(n, d, workers=1)
        _oracle_seconds += time.perf_counter() - t0
    return _oracle_cache[(n, d)]


def test_1_formula_matches_exhaustive_search():
    mismatches = []
    for n, d in valid_pairs(ORACLE_MAX_N):
        r = _oracle(n, d)
        if r.max_size != ore_max_size(n, d):
            mismatches.append((n, d, r.max_size, ore_max_size(n, d)))
    ok = not mismatches and _oracle_seconds < ORACLE_TIME_BUDGET
    record(1, "oracle max size equals formula, 3 <= n <= 7", ok,
           f"{len(valid_pairs(ORACLE_MAX_N))} rows, mismatches={mismatches}, "
           f"oracle time {_oracle_seconds:.1f}s (budget {ORACLE_TIME_BUDGET:.0f}s)")
    assert not mismatches
    assert _oracle_seconds < ORACLE_TIME_BUDGET


def test_2_characterization_complete():
    diffs = []
    for n, d in valid_pairs(ORACLE_MAX_N):
        oracle_set = set(_oracle(n, d).extremal_forms)
        constructed = set(extremal_forms(n, d))
        if oracle_set != constructed:
            diffs.append((n, d, len(oracle_set), len(constructed)))
    record(2, "oracle extremal classes equal constructor classes, 3 <= n <= 7", not diffs,
           f"differences={diffs}")
    assert not diffs


def test_3_constructor_sound():
    checked, bad = 0, []
    for n, d in valid_pairs(CONSTRUCT_MAX_N):
        bound = ore_max_size(n, d)
        for p, g in enumerate_extremal(n, d):
            checked += 1
            ok = (
                g.n == n
                and g.size() == bound
                and diameter(g) == d
                and validate_certificate(g, certificate_from_params(p), d)
            )
            if ok:
                cert = extract_certificate(g, d)
                ok = cert is not None and validate_certificate(g, cert, d)
            if not ok:
                bad.append(p)
    record(3, "realized graphs have order n, maximum size, diameter d, valid certificate (n <= 12)",
           not bad, f"{checked} labeled graphs checked, failures={bad[:5]}")
    assert not bad


def _lemma_violations(g: Graph, cap: int | None) -> tuple[int, int]:
    dist = [bfs_distances(g, v) for v in g.vertices()]
    diam = diameter(g)
    checked = violations = 0
    for x, y in diametral_pairs(g):
        geodesics = iter_geodesics(g, x, y, dist)
        for path in itertools.islice(geodesics, cap):
            checked += 1
            violations += not geodesic_neighbor_lemma(g, path, graph_diameter=diam)
    return checked, violations


def test_4_neighbor_lemma():
    exhaustive_graphs = exhaustive_paths = violations = 0
    for n in range(2, LEMMA_EXHAUSTIVE_MAX_N + 1):
        for g in all_graphs(n):
            if not is_connected(g):
                continue
            exhaustive_graphs += 1
            c, v = _lemma_violations(g, None)
            exhaustive_paths += c
            violations += v
    rng = random.Random(4)
    random_paths = 0
    for _ in range(LEMMA_RANDOM_GRAPHS):
        g = random_connected_graph(rng, rng.randint(2, LEMMA_RANDOM_MAX_N))
        c, v = _lemma_violations(g, LEMMA_GEODESIC_CAP)
        random_paths += c
        violations += v
    record(4, "geodesic neighbor lemma, all connected n <= 6 and 10,000 random n <= 10", violations == 0,
           f"{exhaustive_graphs} exhaustive graphs / {exhaustive_paths} geodesics, "
           f"{LEMMA_RANDOM_GRAPHS} random graphs / {random_paths} geodesics, violations={violations}")
    assert violations == 0


def test_5_counting_identity():
    bad = []
    pairs = 0
    for n in range(3, IDENTITY_MAX_N + 1):
        for d in range(2, n):
            pairs += 1
            b = bound_breakdown(n, d)
            closed = d + (n - d - 1) * (n - d + 4) // 2
            if b.total != closed or b.total != b.path_edges + b.cross_edges + b.clique_edges:
                bad.append((n, d))
    record(5, "breakdown total equals closed formula, 2 <= d < n <= 1000", not bad,
           f"{pairs} pairs scanned, failures={bad[:5]}")
    assert not bad


def test_6_round_trips():
    rng = random.Random(6)
    g6_failures = 0
    for _ in range(G6_RANDOM_GRAPHS):
        n = rng.randint(0, G6_MAX_N)
        p = rng.random()
        g = Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])
        data = encode_g6(g)
        if decode_g6(data) != g or encode_g6(decode_g6(data)) != data:
            g6_failures += 1
    pipeline_failures = []
    lines = 0
    for n, d in valid_pairs(ROUND_TRIP_MAX_N):
        out = io.StringIO()
        assert main(["construct", "-n", str(n), "-d", str(d)], out=out) == 0
        checked = io.StringIO()
        code = main(["check", "-d", str(d), "--strict"], out=checked, stdin=io.StringIO(out.getvalue()))
        verdicts = [line.split("\t")[1] for line in checked.getvalue().splitlines()]
        lines += len(verdicts)
        if code != 0 or not verdicts or set(verdicts) != {"extremal"}:
            pipeline_failures.append((n, d))
    ok = g6_failures == 0 and not pipeline_failures
    record(6, "graph6 round-trip (1,000 random, n <= 20) and construct -> check (n <= 10)", ok,
           f"g6 failures={g6_failures}, {lines} constructed lines checked, failures={pipeline_failures}")
    assert ok


def test_7_verify_deterministic_across_workers():
    outputs = []
    for jobs in (1, 4):
        out = io.StringIO()
        code = main(["verify", "-n", str(DETERMINISM_N_MAX), "--jobs", str(jobs)], out=out)
        outputs.append((code, out.getvalue().encode()))
    ok = outputs[0] == outputs[1] and outputs[0][0] == 0
    record(7, "verify -n 6 output byte-identical for 1 and 4 workers", ok,
           f"{len(outputs[0][1])} bytes, exit codes {[c for c, _ in outputs]}")
    assert ok


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                pass
    print("\n".join(RESULTS))
