"""graph6 reading and writing.

Only the graph6 flavour is handled (no sparse6 or digraph6). Orders up to
``MAX_ORDER`` are accepted, including the 4-byte long-form size header used
for n > 62.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import MAX_ORDER, Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Base class for malformed graph6 input."""

    def __init__(self, message: str, line_no: int | None = None) -> None:
        self.line_no = line_no
        super().__init__(message if line_no is None else f"line {line_no}: {message}")


class Graph6HeaderError(Graph6Error):
    """Missing, truncated or out-of-range size header."""


class Graph6CharacterError(Graph6Error):
    """A byte outside the printable range 63..126."""


class Graph6LengthError(Graph6Error):
    """Payload shorter or longer than the header implies."""


class Graph6PaddingError(Graph6Error):
    """Non-zero bits in the final padding group."""


def _payload_len(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def _decode_size(data: str) -> tuple[int, int]:
    """Return (n, header length)."""
    if not data:
        raise Graph6HeaderError("empty graph6 string")
    if data[0] != "~":
        n = ord(data[0]) - 63
        if n <= 0:
            raise Graph6HeaderError(f"invalid size byte {data[0]!r}")
        return n, 1
    if data[1:2] == "~":
        width, offset = 6, 2
    else:
        width, offset = 3, 1
    if len(data) < offset + width:
        raise Graph6HeaderError("truncated long-form size header")
    n = 0
    for ch in data[offset : offset + width]:
        n = (n << 6) | (ord(ch) - 63)
    if n == 0 or n > MAX_ORDER:
        raise Graph6HeaderError(f"order {n} outside the supported range 1..{MAX_ORDER}")
    return n, offset + width


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (a trailing newline and the optional header are allowed)."""
    data = text.rstrip("\r\n")
    if data.startswith(HEADER):
        data = data[len(HEADER) :]
    for pos, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise Graph6CharacterError(f"byte {ch!r} at offset {pos} is outside 63..126")
    n, start = _decode_size(data)
    payload = data[start:]
    expected = _payload_len(n)
    if len(payload) != expected:
        raise Graph6LengthError(f"order {n} needs {expected} payload bytes, got {len(payload)}")

    adj = [0] * n
    i, j = 0, 1
    total = n * (n - 1) // 2
    k = 0
    for ch in payload:
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            bit = val >> shift & 1
            if k >= total:
                if bit:
                    raise Graph6PaddingError("non-zero padding bits")
                continue
            if bit:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph._trusted(n, tuple(adj))


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))


def write_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 line without the trailing newline."""
    n = g.n
    if n == 0:
        raise Graph6HeaderError("graph6 encoding of the empty graph is not supported")
    if n > MAX_ORDER:
        raise Graph6HeaderError(f"order {n} exceeds the supported maximum {MAX_ORDER}")
    out = [_encode_size(n)]
    val = nbits = 0
    adj = g.adj
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            val = (val << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + val))
                val = nbits = 0
    if nbits:
        out.append(chr(63 + (val << (6 - nbits))))
    return "".join(out)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse a stream of graph6 lines, skipping blanks and ``#`` comments.

    Errors carry the 1-based line number of the offending line.
    """
    for line_no, line in enumerate(lines, start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        try:
            yield parse_graph6(s)
        except Graph6Error as exc:
            raise type(exc)(str(exc), line_no) from None


def write_graph6_lines(graphs: Iterable[Graph], fh: TextIO) -> int:
    count = 0
    for g in graphs:
        fh.write(write_graph6(g) + "\n")
        count += 1
    return count
