"""graph6 encoding (short form only, n <= 62).

Layout: one byte ``n + 63`` followed by the upper-triangle adjacency bits
x(i, j) in column order (j = 1..n-1, i = 0..j-1), packed six per byte,
most significant bit first, zero-padded, each group offset by 63.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .errors import CapacityError, Graph6Error
from .graph import Graph

MAX_G6_ORDER = 62
HEADER = b">>graph6<<"


def pair_index(i: int, j: int) -> int:
    """Position of x(i, j), i < j, in the graph6 bit string."""
    return j * (j - 1) // 2 + i


def adjacency_bits(g: Graph) -> list[int]:
    adj = g.adjacency
    return [adj[i] >> j & 1 for j in range(1, g.n) for i in range(j)]


def pack_bits(bits: list[int]) -> bytes:
    out = bytearray()
    for k in range(0, len(bits), 6):
        chunk = bits[k:k + 6]
        value = 0
        for b in chunk:
            value = value << 1 | b
        value <<= 6 - len(chunk)
        out.append(value + 63)
    return bytes(out)


def encode_g6(g: Graph) -> bytes:
    """graph6 bytes for ``g`` without trailing newline."""
    if g.n > MAX_G6_ORDER:
        raise CapacityError(f"graph6 short form supports n <= {MAX_G6_ORDER}, got {g.n}")
    return bytes([g.n + 63]) + pack_bits(adjacency_bits(g))


def decode_g6(data: bytes | str) -> Graph:
    """Parse one graph6 record. A ``>>graph6<<`` prefix and trailing newline are accepted."""
    if isinstance(data, str):
        try:
            data = data.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("non-ASCII character", exc.start) from None
    base = 0
    if data.startswith(HEADER):
        base = len(HEADER)
    body = data[base:]
    if body.endswith(b"\n"):
        body = body[:-1]
        if body.endswith(b"\r"):
            body = body[:-1]
    if not body:
        raise Graph6Error("missing order byte", base)
    for k, byte in enumerate(body):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"illegal byte {byte}", base + k)
    n = body[0] - 63
    if n > MAX_G6_ORDER:
        raise Graph6Error("multi-byte order encodings (n > 62) are not supported", base)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = body[1:]
    if len(payload) < nbytes:
        raise Graph6Error(
            f"truncated payload: expected {nbytes} bytes, found {len(payload)}",
            base + len(body),
        )
    if len(payload) > nbytes:
        raise Graph6Error("trailing bytes after payload", base + 1 + nbytes)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = payload[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbytes:
        pad = 6 * nbytes - nbits
        if (payload[-1] - 63) & ((1 << pad) - 1):
            raise Graph6Error("nonzero padding bits", base + nbytes)
    return Graph.from_adjacency(adj)


def write_g6(graphs: Iterable[Graph]) -> bytes:
    return b"".join(encode_g6(g) + b"\n" for g in graphs)


def read_g6(lines: Iterable[bytes | str]) -> Iterator[Graph]:
    """Decode one graph per non-blank line; errors carry the 1-based line number."""
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped:
            continue
        try:
            yield decode_g6(stripped)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}", exc.offset) from None
