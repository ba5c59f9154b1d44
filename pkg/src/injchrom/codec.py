"""graph6 reading and writing, plus a plain edge-list text format.

graph6 (McKay's formats.txt): a size field N(n) followed by the upper
triangle of the adjacency matrix in column order ``x(0,1), x(0,2), x(1,2),
x(0,3), ...``, six bits per byte, most significant bit first, each group
offset by 63.  Only the 1-byte (n <= 62) and 4-byte (n <= 258047) size forms
are supported.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from typing import BinaryIO, TextIO

from .graphcore import Graph

HEADER = b">>graph6<<"
_MAX_SHORT = 62
_MAX_MEDIUM = 258047


class Graph6Error(ValueError):
    """A graph6 line could not be decoded."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


def _as_bytes(line: bytes | str) -> bytes:
    if isinstance(line, str):
        try:
            return line.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("non-ASCII character") from exc
    return bytes(line)


def _decode_size(data: bytes) -> tuple[int, int]:
    """Return ``(n, offset of the body)``."""
    if not data:
        raise Graph6Error("empty line")
    first = data[0]
    if not 63 <= first <= 126:
        raise Graph6Error(f"byte {first} outside the printable range [63, 126]")
    if first < 126:
        return first - 63, 1
    if len(data) >= 2 and data[1] == 126:
        raise Graph6Error("8-byte size field (n > 258047) is not supported")
    if len(data) < 4:
        raise Graph6Error("truncated 4-byte size field")
    n = 0
    for b in data[1:4]:
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b} outside the printable range [63, 126]")
        n = (n << 6) | (b - 63)
    if n <= _MAX_SHORT:
        raise Graph6Error(f"size {n} must use the 1-byte size field")
    return n, 4


def parse_graph6(line: bytes | str) -> Graph:
    """Decode one graph6 record (trailing newline and header prefix tolerated)."""
    data = _as_bytes(line).rstrip(b"\r\n")
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    n, off = _decode_size(data)
    body = data[off:]
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) != nbytes:
        raise Graph6Error(f"expected {nbytes} body bytes for n={n}, got {len(body)}")
    acc = 0
    for b in body:
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b} outside the printable range [63, 126]")
        acc = (acc << 6) | (b - 63)
    pad = nbytes * 6 - nbits
    if acc & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    acc >>= pad
    rows = [0] * n
    # the first bit in the stream is the most significant bit of acc
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if acc >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(n, rows, _trusted=True)


def _encode_size(n: int) -> bytes:
    if n < 0:
        raise ValueError("negative order")
    if n <= _MAX_SHORT:
        return bytes([n + 63])
    if n <= _MAX_MEDIUM:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise ValueError(f"order {n} exceeds the supported graph6 range")


def write_graph6(g: Graph) -> bytes:
    """Encode ``g`` as a graph6 record without a trailing newline."""
    n = g.n
    adj = g.adj
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
        nbits += j
    pad = (-nbits) % 6
    acc <<= pad
    nbytes = (nbits + pad) // 6
    body = bytes(((acc >> (6 * (nbytes - 1 - t))) & 63) + 63 for t in range(nbytes))
    return _encode_size(n) + body


def to_graph6_str(g: Graph) -> str:
    return write_graph6(g).decode("ascii")


def read_stream(source: BinaryIO | TextIO | Iterable[bytes | str]) -> Iterator[Graph]:
    """Lazily decode newline-delimited graph6; errors carry 1-based line numbers.

    Blank lines are skipped, as is a leading ``>>graph6<<`` header whether it
    stands on its own line or prefixes the first record.
    """
    for lineno, raw in enumerate(source, start=1):
        data = _as_bytes(raw).strip()
        if data.startswith(HEADER):
            data = data[len(HEADER):]
        if not data:
            continue
        try:
            yield parse_graph6(data)
        except Graph6Error as exc:
            raise Graph6Error(str(exc), lineno) from None


def write_stream(graphs: Iterable[Graph], sink: BinaryIO, header: bool = False) -> int:
    """Write graphs one per line; returns the number written."""
    if header:
        sink.write(HEADER)
    count = 0
    for g in graphs:
        sink.write(write_graph6(g) + b"\n")
        count += 1
    return count


# edge-list text format ---------------------------------------------------------------
#
#   n m
#   u v      (m lines, 0-based endpoints)


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.size}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise ValueError("empty edge list")
    header = rows[0]
    if len(header) != 2:
        raise ValueError("first line must be 'n m'")
    n, m = int(header[0]), int(header[1])
    edges = [(int(a), int(b)) for a, b in rows[1:]]
    if len(edges) != m:
        raise ValueError(f"header announces {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)
