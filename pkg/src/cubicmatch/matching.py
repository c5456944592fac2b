"""Matchings and the two predicates everything else is built on.

A matching is *induced* when the subgraph induced by its covered
vertices is 1-regular, and *uniquely restricted* when it is the unique
perfect matching of that subgraph (equivalently, when no alternating
cycle exists).

Uniqueness is decided by bridge peeling: a graph whose perfect matching
is unique always contains a matched bridge, and removing the endpoints
of a matched bridge preserves uniqueness of the rest, so peeling
succeeds in full exactly for uniquely restricted matchings. Witness
cycles are recovered from a second perfect matching via the symmetric
difference.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .blossom import matching_edges, maximum_matching
from .graph import Graph, induced_subgraph


@dataclass(frozen=True)
class Matching:
    """Vertex-disjoint edge set, normalized to sorted (u, v) pairs u < v."""

    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "Matching":
        norm = sorted((u, v) if u < v else (v, u) for u, v in pairs)
        return cls(tuple(norm))

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def to_labels(self) -> list[str]:
        """CLI serialization: sorted "u-v" strings."""
        return [f"{u}-{v}" for u, v in self.edges]


@dataclass(frozen=True)
class AlternatingCycleWitness:
    """Even closed vertex sequence alternating matched/unmatched edges,
    starting with a matched edge; refutes unique restriction."""

    cycle: tuple[int, ...]

    def edges(self) -> list[tuple[int, int]]:
        c = self.cycle
        return [
            (c[i], c[(i + 1) % len(c)]) if c[i] < c[(i + 1) % len(c)]
            else (c[(i + 1) % len(c)], c[i])
            for i in range(len(c))
        ]


def matching_defects(g: Graph, pairs: Iterable[tuple[int, int]]) -> list[str]:
    """Human-readable reasons why `pairs` is not a matching of g."""
    defects = []
    seen: set[int] = set()
    for u, v in pairs:
        if not (0 <= u < g.n and 0 <= v < g.n):
            defects.append(f"{u}-{v}: vertex id out of range")
            continue
        if u == v:
            defects.append(f"{u}-{v}: degenerate edge")
            continue
        if not g.has_edge(u, v):
            defects.append(f"{u}-{v}: not an edge of the graph")
        if u in seen or v in seen:
            defects.append(f"{u}-{v}: shares a vertex with another pair")
        seen.add(u)
        seen.add(v)
    return defects


def is_matching(g: Graph, pairs: Iterable[tuple[int, int]]) -> bool:
    """True iff the pairs are edges of g and pairwise vertex-disjoint."""
    return not matching_defects(g, list(pairs))


def matching_from(g: Graph, pairs: Iterable[tuple[int, int]]) -> Matching:
    """Validate and normalize; raises ValueError on a bad proposal."""
    pairs = list(pairs)
    defects = matching_defects(g, pairs)
    if defects:
        raise ValueError("not a matching: " + "; ".join(defects))
    return Matching.from_pairs(pairs)


def _as_matching(g: Graph, m: Matching | Iterable[tuple[int, int]]) -> Matching:
    if isinstance(m, Matching):
        if matching_defects(g, m.edges):
            raise ValueError("matching does not fit this graph")
        return m
    return matching_from(g, m)


def matched_subgraph(g: Graph, m: Matching | Iterable[tuple[int, int]]) -> Graph:
    """The subgraph induced by the vertices covered by the matching."""
    mm = _as_matching(g, m)
    sub, _ = induced_subgraph(g, sorted(mm.vertices))
    return sub


def is_induced_matching(g: Graph, m: Matching | Iterable[tuple[int, int]]) -> bool:
    """True iff no edge of g joins two matched vertices besides the
    matched pairs themselves (the covered subgraph is 1-regular)."""
    mm = _as_matching(g, m)
    partner: dict[int, int] = {}
    for u, v in mm.edges:
        partner[u] = v
        partner[v] = u
    for v in partner:
        for w in g.adj[v]:
            if w in partner and w != partner[v]:
                return False
    return True


def _peel_uniquely_restricted(
    g: Graph, medges: tuple[tuple[int, int], ...]
) -> bool:
    """Bridge peeling on the covered subgraph; True iff the matching is
    its unique perfect matching."""
    alive = set(v for e in medges for v in e)
    remaining = {e for e in medges}
    while remaining:
        bridges = _bridges_within(g, alive)
        peelable = [e for e in remaining if e in bridges]
        if not peelable:
            return False
        for u, v in peelable:
            alive.discard(u)
            alive.discard(v)
            remaining.discard((u, v))
    return True


def _bridges_within(g: Graph, alive: set[int]) -> set[tuple[int, int]]:
    """Bridges of the subgraph of g induced by `alive` (original ids)."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    bridges: set[tuple[int, int]] = set()
    timer = 0
    for root in alive:
        if root in disc:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack: list[list[int]] = [[root, -1, 0]]
        while stack:
            frame = stack[-1]
            v, parent, i = frame
            nbrs = g.adj[v]
            if i < len(nbrs):
                frame[2] += 1
                u = nbrs[i]
                if u not in alive:
                    continue
                if u == parent:
                    frame[1] = -2
                    continue
                if u in disc:
                    if low[v] > disc[u]:
                        low[v] = disc[u]
                else:
                    disc[u] = low[u] = timer
                    timer += 1
                    stack.append([u, v, 0])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[p] > low[v]:
                        low[p] = low[v]
                    if low[v] > disc[p]:
                        bridges.add((p, v) if p < v else (v, p))
    return bridges


def is_uniquely_restricted(
    g: Graph, m: Matching | Iterable[tuple[int, int]]
) -> bool:
    """True iff the matching is the unique perfect matching of its
    covered subgraph (no alternating cycle exists)."""
    mm = _as_matching(g, m)
    return _peel_uniquely_restricted(g, mm.edges)


def find_alternating_cycle(
    g: Graph, m: Matching | Iterable[tuple[int, int]]
) -> AlternatingCycleWitness | None:
    """A witness alternating cycle, or None when the matching is
    uniquely restricted."""
    mm = _as_matching(g, m)
    if _peel_uniquely_restricted(g, mm.edges):
        return None
    verts = sorted(mm.vertices)
    sub, remap = induced_subgraph(g, verts)
    back = verts  # new id -> original id
    local_m = sorted((remap[u], remap[v]) for u, v in mm.edges)
    # A second perfect matching of the covered subgraph must avoid some
    # matched edge; force that by deleting one matched edge at a time.
    other: list[tuple[int, int]] | None = None
    for skip in local_m:
        adj = [
            tuple(w for w in sub.adj[v] if (min(v, w), max(v, w)) != skip)
            for v in range(sub.n)
        ]
        mate = maximum_matching(sub.n, adj)
        if all(x != -1 for x in mate):
            other = matching_edges(mate)
            break
    if other is None:  # unreachable: non-unique means some edge is avoidable
        raise AssertionError("second perfect matching not found")
    diff = (set(local_m) | set(other)) - (set(local_m) & set(other))
    partner_m = {}
    partner_o = {}
    for u, v in diff:
        if (u, v) in set(local_m):
            partner_m[u], partner_m[v] = v, u
        else:
            partner_o[u], partner_o[v] = v, u
    # Walk one component of the symmetric difference: it alternates
    # between edges of the two matchings, so it is an alternating cycle.
    start = min(partner_m.keys() & partner_o.keys())
    seq = [start]
    v, use_m = start, True
    while True:
        v = partner_m[v] if use_m else partner_o[v]
        use_m = not use_m
        if v == start:
            break
        seq.append(v)
    cycle = tuple(back[v] for v in seq)
    return AlternatingCycleWitness(_canonical_rotation(cycle))


def _canonical_rotation(cycle: tuple[int, ...]) -> tuple[int, ...]:
    """Smallest tuple among alternation-preserving rotations/reflections."""
    k = len(cycle)
    candidates = []
    for off in range(0, k, 2):
        rot = cycle[off:] + cycle[:off]
        candidates.append(rot)
        # Reflect and realign so the first edge is still a matched one.
        refl = (rot[1], rot[0]) + tuple(reversed(rot[2:]))
        candidates.append(refl)
    return min(candidates)


def validate_alternating_cycle(
    g: Graph,
    m: Matching | Iterable[tuple[int, int]],
    witness: AlternatingCycleWitness,
) -> bool:
    """Replay all witness invariants against the graph and matching."""
    mm = _as_matching(g, m)
    c = witness.cycle
    k = len(c)
    if k < 4 or k % 2:
        return False
    if len(set(c)) != k:
        return False
    medges = set(mm.edges)
    for i in range(k):
        u, v = c[i], c[(i + 1) % k]
        if not g.has_edge(u, v):
            return False
        in_m = (min(u, v), max(u, v)) in medges
        if in_m != (i % 2 == 0):
            return False
    return True
