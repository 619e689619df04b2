"""graph6 codec (short form, order <= 62) and DOT emission.

The packed bit layout of Graph is already the graph6 bit order, so encoding
is a straight 6-bit regrouping of ``Graph.bits``.
"""

from __future__ import annotations

from .errors import Graph6Error, ParameterError
from .graphs import Graph, pair_count

_HEADER = ">>graph6<<"
GRAPH6_MAX_ORDER = 62


def graph6_encode(g: Graph) -> str:
    if g.order > GRAPH6_MAX_ORDER:
        raise ParameterError(f"short-form graph6 encodes order <= {GRAPH6_MAX_ORDER}")
    m = pair_count(g.order)
    groups = -(-m // 6)  # ceil
    padded = g.bits << (6 * groups - m)
    chars = [chr(g.order + 63)]
    for k in range(groups - 1, -1, -1):
        chars.append(chr(((padded >> (6 * k)) & 0x3F) + 63))
    return "".join(chars)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):].strip()
    if not s:
        raise Graph6Error("empty graph6 string")
    try:
        raw = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error("graph6 must be printable ASCII") from exc
    for byte in raw:
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte} outside printable graph6 range 63..126")
    if raw[0] == 126:
        raise Graph6Error("long-form graph6 (order > 62) not supported")
    n = raw[0] - 63
    if n < 1:
        raise Graph6Error("graph6 order must be >= 1")
    m = pair_count(n)
    groups = -(-m // 6)
    if len(raw) - 1 != groups:
        raise Graph6Error(
            f"bad length: order {n} needs {groups} data bytes, got {len(raw) - 1}")
    padded = 0
    for byte in raw[1:]:
        padded = (padded << 6) | (byte - 63)
    pad_bits = 6 * groups - m
    if padded & ((1 << pad_bits) - 1):
        raise Graph6Error("nonzero padding bits")
    return Graph(n, padded >> pad_bits)


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.order)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
