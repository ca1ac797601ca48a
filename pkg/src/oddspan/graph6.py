"""graph6 encoding (column-major upper triangle, 6-bit chunks offset by 63)."""

from __future__ import annotations

from .graph import MAX_VERTICES, Graph, GraphError


class Graph6Error(GraphError):
    pass


def _size_prefix(n: int) -> bytes:
    if n <= 62:
        return bytes([63 + n])
    return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])


def graph6_encode(g: Graph) -> bytes:
    out = bytearray(_size_prefix(g.n))
    rows = g.rows
    chunk = 0
    used = 0
    for v in range(1, g.n):
        row = rows[v]
        for u in range(v):
            chunk = chunk << 1 | (row >> u & 1)
            used += 1
            if used == 6:
                out.append(63 + chunk)
                chunk = used = 0
    if used:
        out.append(63 + (chunk << (6 - used)))
    return bytes(out)


def graph6_decode(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise Graph6Error("empty graph6 input")
    if any(b < 63 or b > 126 for b in data):
        raise Graph6Error("byte outside the graph6 range 63..126")
    if data[0] == 126:
        if len(data) < 4 or data[1] == 126:
            raise Graph6Error("unsupported or truncated size header")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        body = data[4:]
        if n <= 62:
            raise Graph6Error("long-form header used for n <= 62")
    else:
        n = data[0] - 63
        body = data[1:]
    if n > MAX_VERTICES:
        raise Graph6Error(f"graph has {n} vertices, cap is {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    value = 0
    for b in body:
        value = value << 6 | (b - 63)
    pad = 6 * len(body) - nbits
    if value & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    value >>= pad
    rows = [0] * n
    pos = nbits - 1
    for v in range(1, n):
        for u in range(v):
            if value >> pos & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            pos -= 1
    return Graph._trusted(n, rows)
