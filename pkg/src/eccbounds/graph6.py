"""graph6 encoding and decoding (undirected simple graphs, n <= 64)."""

from __future__ import annotations

from .graph import MAX_N, Graph, GraphError


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    return "~" + "".join(chr(63 + (n >> s & 0x3F)) for s in (12, 6, 0))


def encode(g: Graph) -> str:
    adj = g.adj
    bits = []
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        chunk = 0
        for b in bits[k : k + 6]:
            chunk = chunk << 1 | b
        body.append(chr(63 + chunk))
    return _encode_n(g.n) + "".join(body)


def decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise GraphError("empty graph6 string")
    vals = [ord(c) - 63 for c in s]
    if any(not 0 <= v <= 63 for v in vals):
        raise GraphError(f"invalid graph6 character in {text!r}")
    if vals[0] == 63:
        if len(vals) >= 2 and vals[1] == 63:
            raise GraphError("8-byte graph6 header exceeds the vertex cap")
        if len(vals) < 4:
            raise GraphError("truncated graph6 header")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    if not 1 <= n <= MAX_N:
        raise GraphError(f"graph6 vertex count {n} outside [1, {MAX_N}]")
    nbits = n * (n - 1) // 2
    if len(body) != -(-nbits // 6):
        raise GraphError(f"graph6 body has {len(body)} bytes, expected {-(-nbits // 6)}")
    pad = len(body) * 6 - nbits
    if pad and body and body[-1] & ((1 << pad) - 1):
        raise GraphError("nonzero padding bits in graph6 body")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph.trusted(n, rows)
