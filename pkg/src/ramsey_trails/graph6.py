"""graph6 encoding and decoding.

Implements the de-facto standard format bit-exactly: header is n+63 for
n <= 62 (short form) or '~' plus three 6-bit bytes for 63 <= n <= 258047
(long form); the body packs the upper triangle column by column into 6-bit
chunks, each offset by 63 into printable ASCII.
"""

from __future__ import annotations

from .graph import Graph

_LONG_FORM_MAX = 258047  # largest n representable with the 4-byte header


class Graph6Error(ValueError):
    """Malformed graph6 input; the message states which rule was broken."""


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    elif n <= _LONG_FORM_MAX:
        out = ["~", chr((n >> 12) + 63), chr((n >> 6 & 63) + 63), chr((n & 63) + 63)]
    else:
        raise Graph6Error(f"n={n} exceeds the graph6 long-form limit {_LONG_FORM_MAX}")
    chunk = 0
    width = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            chunk = chunk << 1 | (col >> i & 1)
            width += 1
            if width == 6:
                out.append(chr(chunk + 63))
                chunk = width = 0
    if width:
        out.append(chr((chunk << (6 - width)) + 63))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if not s:
        raise Graph6Error("empty graph6 string")
    if s.startswith(">>graph6<<"):
        s = s[10:]
    vals = []
    for ch in s:
        code = ord(ch) - 63
        if not 0 <= code <= 63:
            raise Graph6Error(f"invalid graph6 byte {ch!r} (outside ASCII 63..126)")
        vals.append(code)
    if vals[0] == 63:  # '~': long form
        if len(vals) >= 2 and vals[1] == 63:
            raise Graph6Error("8-byte graph6 headers (n > 258047) are not supported")
        if len(vals) < 4:
            raise Graph6Error("truncated long-form graph6 header")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    if n < 1:
        raise Graph6Error("graph6 header declares an empty vertex set")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(
            f"body length mismatch: n={n} needs {(nbits + 5) // 6} bytes, got {len(body)}"
        )
    pad = len(body) * 6 - nbits
    if pad and body and body[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits in final graph6 byte")

    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if body[idx // 6] >> (5 - idx % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(rows))
