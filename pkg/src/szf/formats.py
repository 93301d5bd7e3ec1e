"""Serialization: graph6 interchange format and plain edge-list text.

graph6 layout, as implemented here:

* order: one byte chr(n+63) for n < 63, or '~' followed by three bytes
  carrying an 18-bit big-endian value for 63 <= n <= 258047;
* adjacency: the upper-triangle entries (i, j) with i < j, ordered by
  increasing j then increasing i, packed most-significant-bit first into
  6-bit groups, zero padded, each group emitted as chr(group+63).

The edge-list text format is "n m" on the first line followed by m lines
"u v". Lines that are blank or start with '#' are ignored on input.
"""

from .graph import Graph, from_edge_list

__all__ = ["from_graph6", "to_graph6", "parse_edge_list", "format_edge_list"]

GRAPH6_HEADER = ">>graph6<<"

_MAX_G6_ORDER = 258047


def _triangle_pairs(n):
    for j in range(1, n):
        for i in range(j):
            yield i, j


def to_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 string (no header)."""
    n = g.n
    if n > _MAX_G6_ORDER:
        raise ValueError(f"graph6 encoding supports at most {_MAX_G6_ORDER} vertices")
    if n < 63:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    chunks = []
    group = 0
    filled = 0
    for i, j in _triangle_pairs(n):
        group = (group << 1) | (1 if j in g.adj[i] else 0)
        filled += 1
        if filled == 6:
            chunks.append(chr(group + 63))
            group = 0
            filled = 0
    if filled:
        chunks.append(chr((group << (6 - filled)) + 63))
    return head + "".join(chunks)


def from_graph6(text: str) -> Graph:
    """Decode a graph6 string, tolerating the optional '>>graph6<<' header.

    Raises
    ------
    ValueError
        On characters outside chr(63)..chr(126), a truncated or overlong
        bit stream, or nonzero padding bits.
    """
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise ValueError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise ValueError(f"invalid graph6 character {ch!r}")
    if s[0] == "~":
        if len(s) < 4:
            raise ValueError("truncated graph6 order field")
        if s[1] == "~":
            raise ValueError("graph6 orders above 258047 are not supported")
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) < nbytes:
        raise ValueError("truncated graph6 bit stream")
    if len(body) > nbytes:
        raise ValueError("trailing data after graph6 bit stream")
    bits = 0
    for ch in body:
        bits = (bits << 6) | (ord(ch) - 63)
    pad = 6 * nbytes - nbits
    if pad and bits & ((1 << pad) - 1):
        raise ValueError("nonzero padding bits in graph6 stream")
    bits >>= pad
    edges = []
    pos = nbits - 1
    for i, j in _triangle_pairs(n):
        if (bits >> pos) & 1:
            edges.append((i, j))
        pos -= 1
    return from_edge_list(n, edges)


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list text format."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"expected 'n m' header, got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError(f"non-integer edge-list header {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"expected 'u v' edge line, got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"non-integer edge line {ln!r}") from None
    return from_edge_list(n, edges)


def format_edge_list(g: Graph) -> str:
    """Render a graph in the edge-list text format, edges sorted."""
    lines = [f"{g.n} {g.num_edges()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
