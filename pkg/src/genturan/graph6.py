"""graph6 encoding and decoding.

Format: a size header (one byte ``63 + n`` for ``n <= 62``, ``~`` plus
three 6-bit bytes up to 258047, ``~~`` plus six bytes beyond), followed by
the upper triangle of the adjacency matrix in column order
``(0,1), (0,2), (1,2), (0,3), ...`` packed six bits per byte, each byte
offset by 63.  An optional ``>>graph6<<`` prefix is accepted on input.
"""

from __future__ import annotations

from .errors import ArgumentError, ParseError
from .graph import Graph

_HEADER = ">>graph6<<"


def _encode_size(n: int) -> str:
    if n < 0:
        raise ArgumentError("negative vertex count")
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))
    raise ArgumentError("graph too large for graph6")


def encode(g: Graph) -> str:
    n = g.n
    out = [_encode_size(n)]
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, n):
        col = adj[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def decode(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    line = text.strip("\r\n")
    base = 0
    if line.startswith(_HEADER):
        line = line[len(_HEADER):]
        base = len(_HEADER)
    if not line:
        raise ParseError("empty graph6 string", base)
    for i, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {ch!r} outside the graph6 range 63..126", base + i)

    def value(i: int) -> int:
        return ord(line[i]) - 63

    if line[0] != "~":
        n, pos = value(0), 1
    elif len(line) >= 2 and line[1] == "~":
        if len(line) < 8:
            raise ParseError("truncated 8-byte size header", base + len(line))
        n = 0
        for i in range(2, 8):
            n = n << 6 | value(i)
        pos = 8
    else:
        if len(line) < 4:
            raise ParseError("truncated 4-byte size header", base + len(line))
        n = value(1) << 12 | value(2) << 6 | value(3)
        pos = 4

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = line[pos:]
    if len(body) != need:
        off = base + pos + min(len(body), need)
        raise ParseError(f"expected {need} data bytes for n={n}, found {len(body)}", off)
    if nbits % 6 and value(len(line) - 1) & ((1 << (6 - nbits % 6)) - 1):
        raise ParseError("non-zero padding bits", base + len(line) - 1)

    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = value(pos + k // 6)
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, adj, check=False)


def read_lines(stream) -> list[Graph]:
    """Decode every non-blank line of a text stream."""
    return [decode(line) for line in stream if line.strip()]
