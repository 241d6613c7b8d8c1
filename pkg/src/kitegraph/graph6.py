"""graph6 text encoding (one graph per line, optional ``>>graph6<<`` header)."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import Graph, GraphError

HEADER = ">>graph6<<"
GRAPH6_MAX_N = 68719476735


class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _encode_n(n: int) -> str:
    if n < 0 or n > GRAPH6_MAX_N:
        raise GraphError(f"graph6 cannot encode n={n}")
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    return "~~" + "".join(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    out = [_encode_n(g.n)]
    acc = nbits = 0
    masks = g.masks
    for v in range(1, g.n):
        mv = masks[v]
        for u in range(v):
            acc = acc << 1 | (mv >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << 6 - nbits)))
    return "".join(out)


def from_graph6(line: str) -> Graph:
    s = line.strip()
    base = 0
    if s.startswith(HEADER):
        s = s[len(HEADER):]
        base = len(HEADER)
    data = s.encode("ascii", errors="replace")
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"invalid graph6 byte {chr(b)!r}", base + i)
    if not data:
        raise Graph6Error("empty graph6 string", base)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated order field", base + len(data))
        n = 0
        for b in data[2:8]:
            n = n << 6 | (b - 63)
        pos = 8
    else:
        if len(data) < 4:
            raise Graph6Error("truncated order field", base + len(data))
        n = 0
        for b in data[1:4]:
            n = n << 6 | (b - 63)
        pos = 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(body)}", base + pos + min(len(body), need))
    masks = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            b = body[k // 6] - 63
            if b >> (5 - k % 6) & 1:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            k += 1
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("nonzero padding bits", base + pos + need - 1)
    return Graph._trusted(n, tuple(masks))


def read_graph6(stream: TextIO | Iterable[str]) -> Iterator[Graph]:
    """Graphs from a stream, skipping blank lines."""
    for line in stream:
        if line.strip():
            yield from_graph6(line)


def write_graph6(graphs: Iterable[Graph], stream: TextIO) -> None:
    for g in graphs:
        stream.write(to_graph6(g) + "\n")
