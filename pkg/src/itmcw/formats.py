"""Graph file formats: edge lists, graph6, and a small DOT subset.

Edge list format (bit-exact round trip): a header line ``n m`` followed by m
lines ``u v`` with 0 <= u < v < n, newline-terminated ASCII.
"""

from __future__ import annotations

from .graph import Graph

__all__ = [
    "FormatError",
    "parse_edgelist",
    "emit_edgelist",
    "parse_graph6",
    "parse_graph6_line",
    "emit_graph6",
    "emit_dot",
    "parse_dot",
]


class FormatError(ValueError):
    pass


def parse_edgelist(text: str) -> Graph:
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty input")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"bad header line {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise FormatError(f"bad header line {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise FormatError("negative counts in header")
    body = [ln for ln in lines[1:] if ln.strip()]
    if len(body) != m:
        raise FormatError(f"header promises {m} edges, found {len(body)}")
    edges = []
    seen = set()
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"bad edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"bad edge line {ln!r}") from None
        if u == v:
            raise FormatError(f"loop at vertex {u}")
        if not (0 <= u < v < n):
            raise FormatError(f"edge ({u}, {v}) must satisfy 0 <= u < v < n")
        if (u, v) in seen:
            raise FormatError(f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    return Graph(n, edges)


def emit_edgelist(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# graph6 (per the public format specification)


def _g6_size(data: list[int], at: int) -> tuple[int, int]:
    """Decode the leading N(n) field; returns (n, next index)."""
    if at >= len(data):
        raise FormatError("truncated graph6 input")
    if data[at] != 63 + 63:
        return data[at] - 63, at + 1
    if at + 3 < len(data) and data[at + 1] == 126:
        vals = data[at + 2 : at + 8]
        if len(vals) < 6:
            raise FormatError("truncated graph6 size field")
        n = 0
        for x in vals:
            n = (n << 6) | (x - 63)
        return n, at + 8
    vals = data[at + 1 : at + 4]
    if len(vals) < 3:
        raise FormatError("truncated graph6 size field")
    n = 0
    for x in vals:
        n = (n << 6) | (x - 63)
    return n, at + 4


def parse_graph6_line(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise FormatError("empty graph6 line")
    data = []
    for ch in s:
        code = ord(ch)
        if not 63 <= code <= 126:
            raise FormatError(f"invalid graph6 character {ch!r}")
        data.append(code)
    n, at = _g6_size(data, 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - at != need:
        raise FormatError(
            f"graph6 body for n={n} needs {need} characters, found {len(data) - at}"
        )
    bits = 0
    for x in data[at:]:
        bits = (bits << 6) | (x - 63)
    bits >>= (need * 6 - nbits) if nbits else 0
    edges = []
    idx = nbits - 1
    # bit order: x(0,1), x(0,2), x(1,2), x(0,3), ... (column by column)
    for j in range(1, n):
        for i in range(j):
            if nbits and (bits >> idx) & 1:
                edges.append((i, j))
            idx -= 1
    return Graph(n, edges)


def parse_graph6(text: str) -> list[Graph]:
    """Parse one graph per non-empty line."""
    out = []
    for line in text.splitlines():
        if line.strip():
            out.append(parse_graph6_line(line))
    return out


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n > 68719476735:
        raise FormatError("graph too large for graph6")
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    nbits = n * (n - 1) // 2
    bits = 0
    for j in range(1, n):
        for i in range(j):
            bits = (bits << 1) | (1 if g.has_edge(i, j) else 0)
    need = (nbits + 5) // 6
    bits <<= need * 6 - nbits
    body = [((bits >> (6 * (need - 1 - t))) & 63) + 63 for t in range(need)]
    return "".join(chr(c) for c in head + body)


# ---------------------------------------------------------------------------
# DOT (subset: undirected, bare integer node ids)


def emit_dot(g: Graph) -> str:
    lines = ["graph {"]
    covered = set()
    for u, v in sorted(g.edges):
        lines.append(f"  {u} -- {v};")
        covered.update((u, v))
    for v in range(g.n):
        if v not in covered:
            lines.append(f"  {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_dot(text: str) -> Graph:
    """Parse the subset emitted by emit_dot."""
    body = text.strip()
    if not body.startswith("graph") or "{" not in body or not body.endswith("}"):
        raise FormatError("not a graph { ... } block")
    inner = body[body.index("{") + 1 : -1]
    edges = []
    vertices = set()
    for stmt in inner.split(";"):
        stmt = stmt.strip()
        if not stmt:
            continue
        if "--" in stmt:
            a, b = (p.strip() for p in stmt.split("--"))
            try:
                u, v = int(a), int(b)
            except ValueError:
                raise FormatError(f"bad edge statement {stmt!r}") from None
            edges.append((u, v))
            vertices.update((u, v))
        else:
            try:
                vertices.add(int(stmt))
            except ValueError:
                raise FormatError(f"bad node statement {stmt!r}") from None
    n = max(vertices) + 1 if vertices else 0
    return Graph(n, edges)
