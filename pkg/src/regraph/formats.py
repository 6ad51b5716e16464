"""Graph serialization: the standard graph6 encoding and a plain edge-list
text format ("n m" header line, then one "u v" pair per line)."""

from __future__ import annotations

from .errors import CapacityError, GraphInputError
from .graph import MAX_VERTICES, Graph


def graph6_encode(g: Graph) -> str:
    """Standard 6-bit big-endian upper-triangle encoding; sizes 0-62 are a
    single byte n+63, larger sizes use the '~' three-byte form."""
    n = g.n
    if n <= 62:
        head = [n + 63]
    else:
        head = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    acc = 0
    nbits = 0
    body = []
    for j in range(1, n):
        for i in range(j):
            acc = acc << 1 | (g.adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                body.append(acc + 63)
                acc, nbits = 0, 0
    if nbits:
        body.append((acc << (6 - nbits)) + 63)
    return "".join(map(chr, head + body))


def graph6_decode(line: str) -> Graph:
    """Inverse of graph6_encode, with byte offsets in error messages."""
    s = line.strip()
    if not s:
        raise GraphInputError("empty graph6 line")
    data = [ord(c) for c in s]
    for off, b in enumerate(data):
        if not 63 <= b <= 126:
            raise GraphInputError(f"graph6 byte {b} out of range at offset {off}")
    if data[0] == 126:
        if len(data) >= 4 and data[1] == 126:
            raise GraphInputError("graph6 sizes beyond 2^18 are unsupported (offset 0)")
        if len(data) < 4:
            raise GraphInputError("truncated graph6 size field (offset 0)")
        n = (data[1] - 63 << 12) | (data[2] - 63 << 6) | (data[3] - 63)
        body = data[4:]
        off0 = 4
    else:
        n = data[0] - 63
        body = data[1:]
        off0 = 1
    if n > MAX_VERTICES:
        raise CapacityError(f"graph6 size {n} exceeds {MAX_VERTICES} (offset 0)")
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    if len(body) != need:
        raise GraphInputError(
            f"graph6 body has {len(body)} bytes, expected {need} (offset {off0})")
    bits_stream = []
    for b in body:
        v = b - 63
        bits_stream.extend((v >> k & 1) for k in range(5, -1, -1))
    for k in range(npairs, len(bits_stream)):
        if bits_stream[k]:
            raise GraphInputError(
                f"nonzero padding bit (offset {off0 + k // 6})")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits_stream[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


def edge_list_encode(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines)


def edge_list_decode(text: str) -> Graph:
    rows = [r for r in (line.strip() for line in text.splitlines())
            if r and not r.startswith("#")]
    if not rows:
        raise GraphInputError("empty edge list")
    head = rows[0].split()
    if len(head) != 2:
        raise GraphInputError(f"bad header {rows[0]!r}, expected 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise GraphInputError(f"bad header {rows[0]!r}") from exc
    if n > MAX_VERTICES:
        raise CapacityError(f"edge list size {n} exceeds {MAX_VERTICES}")
    if len(rows) - 1 != m:
        raise GraphInputError(f"header promises {m} edges, found {len(rows) - 1}")
    edges = []
    for lineno, row in enumerate(rows[1:], 2):
        parts = row.split()
        if len(parts) != 2:
            raise GraphInputError(f"bad edge on line {lineno}: {row!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphInputError(f"bad edge on line {lineno}: {row!r}") from exc
        edges.append((u, v))
    seen = set()
    for u, v in edges:
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphInputError(f"duplicate edge ({u},{v})")
        seen.add(key)
    return Graph(n, edges)


def parse_graph(text: str) -> Graph:
    """Auto-detect: an edge-list when the first line is two integers, else a
    single graph6 line."""
    stripped = text.strip()
    first = stripped.splitlines()[0].split() if stripped else []
    if len(first) == 2 and all(p.lstrip("-").isdigit() for p in first):
        return edge_list_decode(text)
    if "\n" in stripped:
        raise GraphInputError("graph6 input must be a single line")
    return graph6_decode(stripped)
