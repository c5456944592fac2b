"""Immutable simple undirected graphs with dense 0..n-1 vertex ids.

Two exchange formats are supported: a plain edge-list text format and
graph6 byte strings. All surgery (induced subgraphs, vertex deletion)
returns a fresh graph plus an explicit old->new id mapping so that
results computed on the smaller graph can be lifted back.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator


class FormatError(ValueError):
    """Raised for malformed edge-list or graph6 input."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus sorted adjacency lists.

    Invariants (checked on construction): adjacency is symmetric, each
    list is strictly increasing, no self-loops, all ids in [0, n).
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    _sets: tuple[frozenset[int], ...] = field(
        init=False, repr=False, compare=False, default=()
    )

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length differs from vertex count")
        for v, nbrs in enumerate(self.adj):
            for i, u in enumerate(nbrs):
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise ValueError(f"self-loop at vertex {v}")
                if i > 0 and nbrs[i - 1] >= u:
                    raise ValueError(f"adjacency of {v} not strictly increasing")
        sets = tuple(frozenset(nbrs) for nbrs in self.adj)
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if v not in sets[u]:
                    raise ValueError(f"edge {v}-{u} not symmetric")
        object.__setattr__(self, "_sets", sets)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge collection; duplicate edges collapse."""
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._sets[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)


def parse_edge_list(text: str | bytes) -> Graph:
    """Parse the edge-list format: a vertex-count line, then 'u v' lines.

    '#' starts a comment (whole line or trailing). Duplicate edge lines
    collapse to a single edge; self-loops and out-of-range ids are
    rejected with the offending line number.
    """
    if isinstance(text, bytes):
        text = text.decode("ascii")
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise FormatError(f"line {lineno}: expected a vertex count")
            try:
                n = int(fields[0])
            except ValueError:
                raise FormatError(f"line {lineno}: bad vertex count {fields[0]!r}")
            if n < 0:
                raise FormatError(f"line {lineno}: negative vertex count")
            continue
        if len(fields) != 2:
            raise FormatError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer vertex id")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"line {lineno}: vertex id out of range [0, {n})")
        if u == v:
            raise FormatError(f"line {lineno}: self-loop at {u}")
        edges.append((u, v))
    if n is None:
        raise FormatError("empty input: missing vertex count line")
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    """Inverse of parse_edge_list (one canonical rendering)."""
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


_G6_HEADER = b">>graph6<<"


def _g6_decode_n(data: bytes) -> tuple[int, int]:
    """Return (n, offset of first adjacency byte)."""
    if not data:
        raise FormatError("empty graph6 string")
    if data[0] == 126:  # '~'
        if len(data) >= 2 and data[1] == 126:
            raise FormatError("graph6 order beyond 258047 not supported")
        if len(data) < 4:
            raise FormatError("truncated graph6 order field")
        vals = []
        for b in data[1:4]:
            if not 63 <= b <= 126:
                raise FormatError(f"graph6 byte {b} outside [63, 126]")
            vals.append(b - 63)
        n = (vals[0] << 12) | (vals[1] << 6) | vals[2]
        if n < 63:
            raise FormatError("non-canonical long graph6 order field")
        return n, 4
    b = data[0]
    if not 63 <= b <= 126:
        raise FormatError(f"graph6 byte {b} outside [63, 126]")
    return b - 63, 1


def parse_graph6(data: bytes | str) -> Graph:
    """Parse one graph6 value (optionally prefixed with '>>graph6<<')."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER):]
    n, off = _g6_decode_n(data)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[off:]
    if len(body) != nbytes:
        raise FormatError(
            f"graph6 payload for n={n} needs {nbytes} bytes, got {len(body)}"
        )
    bits = 0
    for b in body:
        if not 63 <= b <= 126:
            raise FormatError(f"graph6 byte {b} outside [63, 126]")
        bits = (bits << 6) | (b - 63)
    pad = 6 * nbytes - nbits
    if pad and bits & ((1 << pad) - 1):
        raise FormatError("graph6 trailing padding bits are nonzero")
    bits >>= pad
    edges = []
    # Upper-triangle bits in column order: (0,1), (0,2), (1,2), (0,3), ...
    pos = nbits
    for v in range(1, n):
        for u in range(v):
            pos -= 1
            if (bits >> pos) & 1:
                edges.append((u, v))
    return Graph.from_edges(n, edges)


def to_graph6(g: Graph) -> bytes:
    """Encode a graph as canonical graph6 bytes (no trailing newline)."""
    n = g.n
    if n <= 62:
        head = bytes([n + 63])
    elif n <= 258047:
        head = bytes([126, 63 + (n >> 12), 63 + ((n >> 6) & 63), 63 + (n & 63)])
    else:
        raise FormatError("graph6 order beyond 258047 not supported")
    bits = 0
    nbits = n * (n - 1) // 2
    for v in range(1, n):
        row = g._sets[v]
        for u in range(v):
            bits <<= 1
            if u in row:
                bits |= 1
    nbytes = (nbits + 5) // 6
    bits <<= 6 * nbytes - nbits
    out = bytearray(head)
    for i in range(nbytes - 1, -1, -1):
        out.append(63 + ((bits >> (6 * i)) & 63))
    return bytes(out)


def max_degree(g: Graph) -> int:
    return max((len(a) for a in g.adj), default=0)


def is_subcubic(g: Graph) -> bool:
    return max_degree(g) <= 3


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the connected components, sorted by smallest member."""
    seen = [False] * g.n
    parts: list[tuple[int, ...]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack = [s]
        part = [s]
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
                    part.append(u)
        parts.append(tuple(sorted(part)))
    return parts


def is_connected(g: Graph) -> bool:
    return g.n == 0 or len(connected_components(g)) == 1


def cut_vertices(g: Graph) -> list[int]:
    """Articulation vertices, found with one iterative lowpoint DFS."""
    disc = [-1] * g.n
    low = [0] * g.n
    cut = [False] * g.n
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        root_children = 0
        # Stack frames: (vertex, parent, iterator index into adj).
        stack: list[list[int]] = [[root, -1, 0]]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            frame = stack[-1]
            v, parent, i = frame
            if i < len(g.adj[v]):
                frame[2] += 1
                u = g.adj[v][i]
                if u == parent:
                    frame[1] = -2  # consume one parent edge only
                    continue
                if disc[u] == -1:
                    disc[u] = low[u] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append([u, v, 0])
                else:
                    if low[v] > disc[u]:
                        low[v] = disc[u]
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[p] > low[v]:
                        low[p] = low[v]
                    if p != root and low[v] >= disc[p]:
                        cut[p] = True
        if root_children > 1:
            cut[root] = True
    return [v for v in range(g.n) if cut[v]]


def is_two_connected(g: Graph) -> bool:
    """True iff n >= 3, connected, and free of cut vertices."""
    if g.n < 3:
        return False
    return is_connected(g) and not cut_vertices(g)


def induced_subgraph(
    g: Graph, keep: Iterable[int]
) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by `keep`, plus the order-preserving old->new map."""
    kept = sorted(set(keep))
    for v in kept:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    remap = {old: new for new, old in enumerate(kept)}
    edges = [
        (remap[u], remap[v])
        for u, v in g.edges()
        if u in remap and v in remap
    ]
    return Graph.from_edges(len(kept), edges), remap


def delete_vertices(
    g: Graph, drop: Iterable[int]
) -> tuple[Graph, dict[int, int]]:
    """Complement of induced_subgraph; same mapping contract."""
    dropped = set(drop)
    for v in dropped:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    return induced_subgraph(g, (v for v in range(g.n) if v not in dropped))


def closed_neighborhood(g: Graph, v: int) -> tuple[int, ...]:
    """{v} together with its neighbors, sorted."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return tuple(sorted({v, *g.adj[v]}))
