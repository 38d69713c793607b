"""Graph and coloring serialization: edge-list text, graph6, DOT export.

The graph6 encoder/decoder is bit-exact with the standard format: the
vertex count is stored as one 6-bit byte (or the 126-prefixed long forms),
followed by the upper triangle of the adjacency matrix in column order,
packed 6 bits per byte with bias 63.
"""

from typing import Iterable

from .errors import ColoringError, ParseError
from .graph import Graph, edge_key

GRAPH6_HEADER = b">>graph6<<"


def parse_edge_list(text: str) -> Graph:
    """Parse line-oriented ``u v`` pairs with an optional ``n=K`` header.

    Without a header the vertex count is one plus the largest index seen.
    Duplicate edges, self-loops, and malformed tokens raise
    :class:`ParseError` naming the offending line.
    """
    n_header: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    max_index = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("n="):
            if n_header is not None:
                raise ParseError("repeated n= header", line=lineno)
            if edges:
                raise ParseError("n= header must precede all edges", line=lineno)
            try:
                n_header = int(line[2:])
            except ValueError:
                raise ParseError(f"bad vertex count {line[2:]!r}", line=lineno) from None
            if n_header < 1:
                raise ParseError("vertex count must be positive", line=lineno)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"malformed token in {line!r}", line=lineno) from None
        if u < 0 or v < 0:
            raise ParseError(f"negative vertex index in {line!r}", line=lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", line=lineno)
        if n_header is not None and (u >= n_header or v >= n_header):
            raise ParseError(f"vertex index exceeds declared n={n_header}", line=lineno)
        k = edge_key(u, v)
        if k in seen:
            raise ParseError(f"duplicate edge {k[0]} {k[1]}", line=lineno)
        seen.add(k)
        edges.append(k)
        max_index = max(max_index, u, v)
    if n_header is None and max_index < 0:
        raise ParseError("no edges and no n= header")
    n = n_header if n_header is not None else max_index + 1
    return Graph.from_edges(n, edges)


def emit_edge_list(g: Graph) -> str:
    """Edge-list text with an explicit header, round-trippable by the parser."""
    lines = [f"n={g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def _g6_encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    out = [126, 126]
    out.extend(((n >> (6 * k)) & 63) + 63 for k in range(5, -1, -1))
    return bytes(out)


def emit_graph6(g: Graph) -> bytes:
    """Encode to graph6 (no header, no trailing newline)."""
    bits: list[int] = []
    for v in range(1, g.n):
        row = set(g.adjacency[v])
        for u in range(v):
            bits.append(1 if u in row else 0)
    data = bytearray(_g6_encode_n(g.n))
    for i in range(0, len(bits), 6):
        group = bits[i : i + 6]
        group += [0] * (6 - len(group))
        value = 0
        for b in group:
            value = (value << 1) | b
        data.append(value + 63)
    return bytes(data)


def parse_graph6(data: bytes | str) -> Graph:
    """Decode a graph6 byte string, optionally prefixed with ``>>graph6<<``."""
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = data.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER) :]
    if not data:
        raise ParseError("empty graph6 input")
    for i, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise ParseError(f"byte {byte} outside graph6 range 63..126", offset=i)
    pos = 0
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            if len(data) < 8:
                raise ParseError("truncated vertex count")
            n = 0
            for byte in data[2:8]:
                n = (n << 6) | (byte - 63)
            pos = 8
        else:
            if len(data) < 4:
                raise ParseError("truncated vertex count")
            n = 0
            for byte in data[1:4]:
                n = (n << 6) | (byte - 63)
            pos = 4
    else:
        n = data[0] - 63
        pos = 1
    if n < 1:
        raise ParseError("graph6 vertex count must be positive for this package")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != nbytes:
        raise ParseError(
            f"bad length: expected {nbytes} adjacency bytes for n={n}, got {len(body)}",
            offset=pos,
        )
    bits: list[int] = []
    for byte in body:
        value = byte - 63
        bits.extend((value >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ParseError("nonzero padding bits", offset=pos + nbits // 6)
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    return Graph.from_edges(n, edges)


def iter_graph6_lines(text: str) -> Iterable[tuple[int, Graph]]:
    """Yield ``(lineno, Graph)`` for every nonempty line of a graph6 corpus."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            yield lineno, parse_graph6(line)
        except ParseError as exc:
            raise ParseError(f"{exc}", line=lineno) from exc


def to_dot(
    g: Graph,
    edge_coloring: dict[tuple[int, int], int] | None = None,
    vertex_coloring: dict[int, int] | None = None,
) -> str:
    """DOT text with optional ``c<N>`` color labels on edges or vertices."""
    lines = ["graph G {"]
    for v in range(g.n):
        if vertex_coloring is not None:
            lines.append(f'  {v} [label="c{vertex_coloring[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edges:
        if edge_coloring is not None:
            lines.append(f'  {u} -- {v} [label="c{edge_coloring[edge_key(u, v)]}"];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_edge_coloring(text: str) -> dict[tuple[int, int], int]:
    """Parse ``u v c`` lines into an edge-to-color map."""
    coloring: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"expected 'u v c', got {line!r}", line=lineno)
        try:
            u, v, c = int(parts[0]), int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError(f"malformed token in {line!r}", line=lineno) from None
        if c < 1:
            raise ParseError(f"color ids must be positive, got {c}", line=lineno)
        k = edge_key(u, v)
        if k in coloring:
            raise ParseError(f"repeated edge {k[0]} {k[1]}", line=lineno)
        coloring[k] = c
    return coloring


def emit_edge_coloring(coloring: dict[tuple[int, int], int]) -> str:
    return "\n".join(f"{u} {v} {c}" for (u, v), c in sorted(coloring.items())) + "\n"


def parse_vertex_coloring(text: str) -> dict[int, int]:
    """Parse ``v c`` lines into a vertex-to-color map."""
    coloring: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'v c', got {line!r}", line=lineno)
        try:
            v, c = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"malformed token in {line!r}", line=lineno) from None
        if c < 1:
            raise ParseError(f"color ids must be positive, got {c}", line=lineno)
        if v in coloring:
            raise ParseError(f"repeated vertex {v}", line=lineno)
        coloring[v] = c
    return coloring


def emit_vertex_coloring(coloring: dict[int, int]) -> str:
    return "\n".join(f"{v} {c}" for v, c in sorted(coloring.items())) + "\n"


def validate_edge_coloring(g: Graph, coloring: dict[tuple[int, int], int]) -> None:
    """Check that a coloring is total on the graph's edges with positive ids."""
    for e in g.edges:
        if e not in coloring:
            raise ColoringError(f"edge {e[0]} {e[1]} has no color")
    for (u, v), c in coloring.items():
        if not g.has_edge(u, v):
            raise ColoringError(f"colored edge {u} {v} is not in the graph")
        if not isinstance(c, int) or c < 1:
            raise ColoringError(f"color ids must be positive integers, got {c!r}")


def validate_vertex_coloring(g: Graph, coloring: dict[int, int]) -> None:
    for v in range(g.n):
        if v not in coloring:
            raise ColoringError(f"vertex {v} has no color")
    for v, c in coloring.items():
        if not 0 <= v < g.n:
            raise ColoringError(f"colored vertex {v} is not in the graph")
        if not isinstance(c, int) or c < 1:
            raise ColoringError(f"color ids must be positive integers, got {c!r}")
