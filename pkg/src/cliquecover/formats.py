"""Graph serialization: graph6 (short form), edge-list text, DOT export.

graph6 here is the standard short form only: byte n+63, then the upper
triangle in column-major order, 6 bits per byte, each byte offset by 63.
Long form (n >= 63) is rejected with a clear error; nothing in this package
operates at that scale.
"""

from __future__ import annotations

from .errors import GraphParseError, ParameterError, UnsupportedSizeError
from .graphs import Graph, upper_triangle_pairs

GRAPH6_MAX_N = 62


def encode_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise UnsupportedSizeError(
            f"graph6 short form supports n <= {GRAPH6_MAX_N}, got {g.n}")
    out = [chr(g.n + 63)]
    buf = 0
    nbits = 0
    for (i, j) in upper_triangle_pairs(g.n):
        buf = (buf << 1) | ((g.adj[i] >> j) & 1)
        nbits += 1
        if nbits == 6:
            out.append(chr(buf + 63))
            buf = 0
            nbits = 0
    if nbits:
        out.append(chr((buf << (6 - nbits)) + 63))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphParseError("empty graph6 line", offset=0)
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise GraphParseError("non-ASCII byte in graph6 line", offset=exc.start)
    first = data[0]
    if first == 126:
        raise GraphParseError(
            "graph6 long form (n >= 63) is not supported", offset=0)
    if not 63 <= first <= 125:
        raise GraphParseError(f"bad graph6 size byte {first}", offset=0)
    n = first - 63
    pairs = upper_triangle_pairs(n)
    n_slots = len(pairs)
    need = (n_slots + 5) // 6
    body = data[1:]
    if len(body) < need:
        raise GraphParseError(
            f"truncated graph6 bit stream: need {need} bytes, have {len(body)}",
            offset=1 + len(body))
    if len(body) > need:
        raise GraphParseError(
            f"trailing bytes after graph6 bit stream", offset=1 + need)
    edges = []
    for s_idx in range(n_slots):
        byte = body[s_idx // 6]
        if not 63 <= byte <= 126:
            raise GraphParseError(
                f"graph6 byte {byte} outside 63..126", offset=1 + s_idx // 6)
        bit = (byte - 63) >> (5 - (s_idx % 6)) & 1
        if bit:
            edges.append(pairs[s_idx])
    return Graph.from_edges(n, edges)


def encode_edgelist(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def decode_edgelist(text: str) -> Graph:
    """Edge-list text: one "u v" pair per line, '#' comments ignored.  An
    optional leading "n <count>" header fixes the vertex count; otherwise
    n = max index + 1."""
    n_header = None
    edges = []
    max_seen = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n_header is None and not edges and parts[0] == "n" and len(parts) == 2:
            try:
                n_header = int(parts[1])
            except ValueError:
                raise GraphParseError(f"bad vertex count on line {lineno}")
            if n_header < 0:
                raise GraphParseError(f"negative vertex count on line {lineno}")
            continue
        if len(parts) != 2:
            raise GraphParseError(f"expected 'u v' on line {lineno}: {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"non-integer vertex on line {lineno}: {line!r}")
        if u < 0 or v < 0:
            raise GraphParseError(f"negative vertex on line {lineno}")
        if u == v:
            raise GraphParseError(f"self-loop on line {lineno}")
        edges.append((u, v))
        max_seen = max(max_seen, u, v)
    n = n_header if n_header is not None else max_seen + 1
    if max_seen >= n:
        raise GraphParseError(
            f"vertex {max_seen} out of range for declared n={n}")
    try:
        return Graph.from_edges(n, edges)
    except ParameterError as exc:
        raise GraphParseError(str(exc))


def to_dot(g: Graph, name="g") -> str:
    """Undirected DOT with plain vertex ids (for figure reproduction)."""
    lines = [f"graph {name} {{"]
    isolated = [v for v in range(g.n) if g.adj[v] == 0]
    for v in isolated:
        lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def iter_graph6_lines(text: str):
    """Parse every nonempty line of a graph6 stream."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            yield decode_graph6(line)
        except GraphParseError as exc:
            raise GraphParseError(f"line {lineno}: {exc}", offset=exc.offset)
