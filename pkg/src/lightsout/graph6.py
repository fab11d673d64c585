"""graph6 interchange format (the encoding used by the standard graph archives).

Short form covers n <= 62 (one length byte); the extended form '~' + three
bytes covers n up to 258047.  Edge bits run over the upper triangle in
column-major order, which is exactly this package's pair ordering, six bits
per printable byte, first pair in the most significant position.
"""

from __future__ import annotations

from .errors import Graph6ParseError
from .graphs import Graph, pair_count

_OFFSET = 63
_MAX_SHORT_N = 62
_MAX_LONG_N = 258047


def write_graph6(g: Graph) -> bytes:
    """Encode the labeled adjacency of ``g``; no relabeling is applied."""
    n = g.n
    if n > _MAX_LONG_N:
        raise ValueError(f"graph6 long form stops at n = {_MAX_LONG_N}")
    if n <= _MAX_SHORT_N:
        header = bytes([n + _OFFSET])
    else:
        header = bytes([126,
                        ((n >> 12) & 63) + _OFFSET,
                        ((n >> 6) & 63) + _OFFSET,
                        (n & 63) + _OFFSET])
    m = pair_count(n)
    body = bytearray()
    for group_start in range(0, m, 6):
        value = 0
        for pos in range(6):
            t = group_start + pos
            if t < m and (g.edge_bits >> t) & 1:
                value |= 1 << (5 - pos)
        body.append(value + _OFFSET)
    return header + bytes(body)


def parse_graph6(line: bytes) -> Graph:
    """Decode one graph6 line; raises Graph6ParseError with a byte offset."""
    if isinstance(line, str):
        line = line.encode("ascii")
    line = line.rstrip(b"\r\n")
    if not line:
        raise Graph6ParseError("empty graph6 line", 0)
    for off, b in enumerate(line):
        if not _OFFSET <= b <= 126:
            raise Graph6ParseError(f"byte {b} outside the printable graph6 range", off)

    if line[0] == 126:
        if len(line) >= 2 and line[1] == 126:
            raise Graph6ParseError("8-byte size form is not supported", 0)
        if len(line) < 4:
            raise Graph6ParseError("truncated extended size field", len(line))
        n = ((line[1] - _OFFSET) << 12) | ((line[2] - _OFFSET) << 6) | (line[3] - _OFFSET)
        data_start = 4
    else:
        n = line[0] - _OFFSET
        data_start = 1
    if n < 1:
        raise Graph6ParseError(f"invalid vertex count {n}", 0)

    m = pair_count(n)
    expected = (m + 5) // 6
    got = len(line) - data_start
    if got < expected:
        raise Graph6ParseError(f"edge data ends early ({got} of {expected} bytes)",
                               len(line))
    if got > expected:
        raise Graph6ParseError("trailing garbage after edge data",
                               data_start + expected)

    bits = 0
    for k in range(expected):
        value = line[data_start + k] - _OFFSET
        for pos in range(6):
            t = 6 * k + pos
            if (value >> (5 - pos)) & 1:
                if t >= m:
                    raise Graph6ParseError("nonzero padding bits", data_start + k)
                bits |= 1 << t
    return Graph(n, bits)
