"""graph6 text codec.

Bit-exact to the published format: an order prefix N(n) followed by the upper
triangle of the adjacency matrix read column by column, packed into 6-bit
groups, each group printed as its value plus 63.
"""

from __future__ import annotations

from .graphs import Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input; carries the byte position of the defect."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at byte {position})")
        self.position = position


def _encode_order(n: int) -> str:
    if n < 0:
        raise ValueError("order must be non-negative")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("order too large for graph6")


def encode(g: Graph) -> str:
    bits = 0
    nbits = 0
    chunks = []
    for j in range(1, g.order):
        col = g.adjacency_masks[j]
        for i in range(j):
            bits = (bits << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                chunks.append(chr(bits + 63))
                bits = nbits = 0
    if nbits:
        chunks.append(chr((bits << (6 - nbits)) + 63))
    return _encode_order(g.order) + "".join(chunks)


def decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):].strip()
    if not s:
        raise Graph6Error("empty graph6 string")
    pos = 0
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            digits, pos = s[2:8], 8
        else:
            digits, pos = s[1:4], 4
        if len(digits) < (6 if pos == 8 else 3):
            raise Graph6Error("truncated order prefix", len(s))
        n = 0
        for i, ch in enumerate(digits):
            val = ord(ch) - 63
            if not 0 <= val <= 63:
                raise Graph6Error(f"invalid order byte {ch!r}", (2 if pos == 8 else 1) + i)
            n = (n << 6) | val
    else:
        n = ord(s[0]) - 63
        if not 0 <= n <= 62:
            raise Graph6Error(f"invalid order byte {s[0]!r}", 0)
        pos = 1
    nbits_needed = n * (n - 1) // 2
    nbytes = (nbits_needed + 5) // 6
    body = s[pos:]
    if len(body) != nbytes:
        raise Graph6Error(f"expected {nbytes} data bytes for order {n}, got {len(body)}", pos)
    bits = []
    for i, ch in enumerate(body):
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise Graph6Error(f"invalid data byte {ch!r}", pos + i)
        bits.extend((val >> s6) & 1 for s6 in (5, 4, 3, 2, 1, 0))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    if any(bits[nbits_needed:]):
        raise Graph6Error("nonzero padding bits", pos + nbytes - 1)
    return Graph.build(n, edges)
