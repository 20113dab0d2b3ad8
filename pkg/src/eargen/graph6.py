"""graph6 encoding and decoding for graphs up to CAP vertices.

The format: one byte n+63, then the upper-triangle adjacency bits in
column-major pair order (0,1),(0,2),(1,2),(0,3),... packed into 6-bit
groups (zero padded), each group printed as its value + 63.
"""

from __future__ import annotations

from .graph import CAP, Graph

HEADER = ">>graph6<<"


def encode(g: Graph) -> str:
    bits = []
    adj = g.adj
    for v in range(1, g.n):
        col = adj[v]
        for u in range(v):
            bits.append(col >> u & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = val << 1 | b
        chars.append(chr(val + 63))
    return "".join(chars)


def decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :].strip()
    if not s:
        raise ValueError("empty graph6 string")
    n = ord(s[0]) - 63
    if not 0 <= n <= CAP:
        raise ValueError(f"graph6 order {n} outside supported range 0..{CAP}")
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} chars, expected {need}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise ValueError(f"invalid graph6 character {ch!r}")
        bits.extend(val >> k & 1 for k in range(5, -1, -1))
    rows = [0] * n
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            i += 1
    return Graph.from_adj(rows)
