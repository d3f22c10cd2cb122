"""graph6 text encoding (upper triangle, column-major, 6 bits per byte)."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.message = message
        self.offset = offset


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"graph6 cannot encode n={n}")


def encode(G: Graph) -> str:
    n = G.n
    bits = [(G.adj[j] >> i) & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        body.append(chr(v + 63))
    return _encode_n(n) + "".join(body)


def _sixbits(text: str, pos: int) -> int:
    v = ord(text[pos]) - 63
    if not 0 <= v < 64:
        raise Graph6Error(f"invalid graph6 character {text[pos]!r}", pos)
    return v


def decode(text: str) -> Graph:
    s = text.strip()
    base = 0
    if s.startswith(HEADER):
        base = len(HEADER)
        s = s[base:]
    if not s:
        raise Graph6Error("empty graph6 string", base)
    if s[0] != "~":
        n, pos = _sixbits(s, 0), 1
    elif len(s) > 1 and s[1] == "~":
        if len(s) < 8:
            raise Graph6Error("truncated 36-bit vertex count", base + len(s))
        n = 0
        for k in range(2, 8):
            n = (n << 6) | _sixbits(s, k)
        pos = 8
    else:
        if len(s) < 4:
            raise Graph6Error("truncated 18-bit vertex count", base + len(s))
        n = 0
        for k in range(1, 4):
            n = (n << 6) | _sixbits(s, k)
        pos = 4
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) - pos < nbytes:
        raise Graph6Error(f"truncated payload: need {nbytes} bytes, found {len(s) - pos}", base + len(s))
    if len(s) - pos > nbytes:
        raise Graph6Error("trailing bytes after payload", base + pos + nbytes)
    adj = [0] * n
    k = 0
    i, j = 0, 1
    for b in range(nbytes):
        v = _sixbits(s, pos + b)
        for shift in range(5, -1, -1):
            bit = (v >> shift) & 1
            if k < nbits:
                if bit:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                i += 1
                if i == j:
                    i, j = 0, j + 1
            elif bit:
                raise Graph6Error("nonzero padding bit", base + pos + b)
            k += 1
    return Graph._from_adj(adj)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Graphs from graph6 lines; blank lines and ``#`` comments (whole or trailing) are skipped."""
    for lineno, line in enumerate(lines, 1):
        s = line.split("#", 1)[0].strip()
        if not s:
            continue
        try:
            yield decode(s)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc.message}", exc.offset) from None


def write_graph6_lines(graphs: Iterable[Graph], fh: TextIO) -> int:
    count = 0
    for G in graphs:
        fh.write(encode(G) + "\n")
        count += 1
    return count
