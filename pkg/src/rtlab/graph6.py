"""Reader/writer for the standard graph6 format, plus JSON edge lists.

Implements the published format byte-for-byte: N(n) size encoding followed
by the upper triangle of the adjacency matrix in column-major order, packed
into 6-bit groups offset by 63.  Only undirected simple graphs are handled.
"""

from __future__ import annotations

import json

from .graphs import Graph, GraphError

_HEADER = ">>graph6<<"


def _encode_size(n: int) -> bytes:
    if n < 0:
        raise GraphError("negative vertex count")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> (6 * k)) & 63) + 63 for k in range(5, -1, -1)])
    raise GraphError("vertex count too large for graph6")


def _decode_size(data: bytes) -> tuple[int, int]:
    """Returns (n, number of bytes consumed)."""
    if not data:
        raise GraphError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise GraphError("truncated graph6 size")
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        return n, 4
    if len(data) < 8:
        raise GraphError("truncated graph6 size")
    n = 0
    for b in data[2:8]:
        n = (n << 6) | (b - 63)
    return n, 8


def to_graph6(g: Graph) -> str:
    bits_out = []
    for col in range(1, g.n):
        colmask = g.rows[col]
        for row in range(col):
            bits_out.append(1 if colmask & (1 << row) else 0)
    while len(bits_out) % 6:
        bits_out.append(0)
    payload = bytearray(_encode_size(g.n))
    for i in range(0, len(bits_out), 6):
        group = 0
        for b in bits_out[i : i + 6]:
            group = (group << 1) | b
        payload.append(group + 63)
    return payload.decode("ascii")


def from_graph6(text: str) -> Graph:
    text = text.strip()
    if text.startswith(_HEADER):
        text = text[len(_HEADER) :]
    data = text.encode("ascii")
    n, consumed = _decode_size(data)
    body = data[consumed:]
    need_bits = n * (n - 1) // 2
    need_bytes = (need_bits + 5) // 6
    if len(body) != need_bytes:
        raise GraphError(f"graph6 body has {len(body)} bytes, expected {need_bytes}")
    bitstream = []
    for b in body:
        val = b - 63
        if not 0 <= val <= 63:
            raise GraphError("invalid graph6 byte")
        for k in range(5, -1, -1):
            bitstream.append((val >> k) & 1)
    rows = [0] * n
    idx = 0
    for col in range(1, n):
        for row in range(col):
            if bitstream[idx]:
                rows[row] |= 1 << col
                rows[col] |= 1 << row
            idx += 1
    if any(bitstream[need_bits:]):
        raise GraphError("nonzero padding bits in graph6 body")
    return Graph(n, rows)


def to_edge_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges()]})


def from_edge_json(text: str) -> Graph:
    doc = json.loads(text)
    return Graph.from_edges(int(doc["n"]), [tuple(e) for e in doc["edges"]])
