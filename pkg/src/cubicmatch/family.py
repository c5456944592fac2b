"""Ladder-shaped equality families: generators, recognizers, and the
closed-form induced matching.

A ladder of parameter k has two rails (paths u_1..u_k and v_1..v_k) and
k rung vertices w_i, each adjacent to u_i and v_i. Family one seals each
end with one of three options: leave it open, join the two rail ends by
an edge, or glue a cap vertex over them; the unordered end pair gives
six classes. Family two closes the ladder with two long edges whose
attachment pattern depends on the parity of k. Members are recognized
by generating the (at most four) candidates of the right order and
testing isomorphism.

Vertex ids are position-major: position i occupies ids 3(i-1) (u_i),
3(i-1)+1 (v_i), 3(i-1)+2 (w_i); cap vertices are appended at the end.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .graph import Graph, is_subcubic, is_two_connected
from .matching import Matching, is_induced_matching


class EndType(enum.Enum):
    OPEN = "open"
    EDGE = "edge"
    CAP = "cap"

    @property
    def rank(self) -> int:
        return ("open", "edge", "cap").index(self.value)


@dataclass
class FamilySpec:
    """Symbolic description of a family member, with a role labeling
    (u1..uk, v1..vk, w1..wk, plus w1'/wk' for caps) into vertex ids."""

    variant: str  # "B1" or "B2"
    k: int
    ends: tuple[EndType, EndType] | None = None
    labeling: dict[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.variant == "B1":
            if self.ends is None:
                raise ValueError("B1 spec needs end types")
            if self.k < 1 or (self.k == 1 and self.ends != (EndType.OPEN, EndType.OPEN)):
                raise ValueError("B1 requires k >= 2 (k = 1 only fully open)")
        elif self.variant == "B2":
            if self.k < 3:
                raise ValueError("B2 requires k >= 3")
            if self.ends is not None:
                raise ValueError("B2 spec has no end types")
        else:
            raise ValueError(f"unknown variant {self.variant!r}")

    def to_json(self) -> dict:
        out: dict = {"variant": self.variant, "k": self.k}
        if self.ends is not None:
            out["ends"] = [e.value for e in self.ends]
        return out


def _ladder_edges(k: int) -> tuple[list[tuple[int, int]], dict[str, int]]:
    labeling: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    for i in range(1, k + 1):
        base = 3 * (i - 1)
        labeling[f"u{i}"] = base
        labeling[f"v{i}"] = base + 1
        labeling[f"w{i}"] = base + 2
        edges.append((base, base + 2))      # rung to u_i
        edges.append((base + 1, base + 2))  # rung to v_i
        if i < k:
            edges.append((base, base + 3))      # u rail
            edges.append((base + 1, base + 4))  # v rail
    return edges, labeling


def ladder(k: int) -> tuple[Graph, FamilySpec]:
    """Plain (fully open) ladder of order 3k; k >= 1."""
    if k < 1:
        raise ValueError("ladder requires k >= 1")
    edges, labeling = _ladder_edges(k)
    g = Graph.from_edges(3 * k, edges)
    spec = FamilySpec("B1", k, (EndType.OPEN, EndType.OPEN), labeling)
    return g, spec


def end_variant_ladder(
    k: int, left: EndType, right: EndType
) -> tuple[Graph, FamilySpec]:
    """Ladder with each end open, edge-sealed, or capped; k >= 2.

    The end pair is unordered: it is canonicalized before construction,
    so the two argument orders produce the same labeled graph.
    """
    if k < 2:
        raise ValueError("end-variant ladders require k >= 2")
    left, right = sorted((left, right), key=lambda e: e.rank)
    edges, labeling = _ladder_edges(k)
    n = 3 * k
    for end, pos in ((left, 1), (right, k)):
        u = labeling[f"u{pos}"]
        v = labeling[f"v{pos}"]
        if end is EndType.EDGE:
            edges.append((u, v))
        elif end is EndType.CAP:
            cap = n
            n += 1
            labeling["w1'" if pos == 1 else f"w{k}'"] = cap
            edges.append((u, cap))
            edges.append((v, cap))
    g = Graph.from_edges(n, edges)
    assert is_subcubic(g) and is_two_connected(g)
    return g, FamilySpec("B1", k, (left, right), labeling)


def closed_ladder(k: int) -> tuple[Graph, FamilySpec]:
    """Ladder closed by two long edges, crosswise for odd k (u1-vk and
    v1-uk) and straight for even k (u1-uk and v1-vk); k >= 3."""
    if k < 3:
        raise ValueError("closed ladders require k >= 3")
    edges, labeling = _ladder_edges(k)
    u1, v1 = labeling["u1"], labeling["v1"]
    uk, vk = labeling[f"u{k}"], labeling[f"v{k}"]
    if k % 2:
        edges.append((min(u1, vk), max(u1, vk)))
        edges.append((min(v1, uk), max(v1, uk)))
    else:
        edges.append((u1, uk))
        edges.append((v1, vk))
    g = Graph.from_edges(3 * k, edges)
    assert is_subcubic(g) and is_two_connected(g)
    for x in (u1, v1, uk, vk):
        assert g.degree(x) == 3
    return g, FamilySpec("B2", k, None, labeling)


def canonical_induced_matching(spec: FamilySpec) -> Matching:
    """The size-k induced matching that pairs each rung with a rail
    vertex, alternating rails along the ladder: v_j w_j at odd
    positions, u_j w_j at even positions."""
    need = [f"u{j}" for j in range(1, spec.k + 1)]
    need += [f"v{j}" for j in range(1, spec.k + 1)]
    need += [f"w{j}" for j in range(1, spec.k + 1)]
    missing = [r for r in need if r not in spec.labeling]
    if missing:
        raise ValueError(f"spec labeling lacks roles {missing}")
    pairs = []
    for j in range(1, spec.k + 1):
        rail = f"v{j}" if j % 2 else f"u{j}"
        pairs.append((spec.labeling[rail], spec.labeling[f"w{j}"]))
    return Matching.from_pairs(pairs)


def _refine_colors(g: Graph) -> tuple[int, ...]:
    """Stable vertex colors from iterated neighbor-degree refinement."""
    colors = tuple(g.degree(v) for v in range(g.n))
    for _ in range(g.n):
        sigs = tuple(
            (colors[v], tuple(sorted(colors[u] for u in g.adj[v])))
            for v in range(g.n)
        )
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = tuple(palette[s] for s in sigs)
        if len(set(new)) == len(set(colors)):
            return new
        colors = new
    return colors


def iso_certificate(g: Graph) -> tuple:
    """Cheap isomorphism-invariant key for bucketing; not complete."""
    colors = _refine_colors(g)
    return (g.n, g.m, tuple(sorted(colors)))


def find_isomorphism(g: Graph, h: Graph) -> dict[int, int] | None:
    """An adjacency-preserving bijection g -> h, or None.

    Backtracking over vertices ordered by connectivity to the mapped
    part, pruned by refined color classes.
    """
    if g.n != h.n or g.m != h.m:
        return None
    cg, ch = _refine_colors(g), _refine_colors(h)
    if sorted(cg) != sorted(ch):
        return None
    by_color: dict[int, list[int]] = {}
    for v in range(h.n):
        by_color.setdefault(ch[v], []).append(v)

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def next_vertex() -> int:
        best, best_key = -1, (-1, 0)
        for v in range(g.n):
            if v in mapping:
                continue
            anchored = sum(1 for u in g.adj[v] if u in mapping)
            key = (anchored, -len(by_color[cg[v]]))
            if key > best_key:
                best, best_key = v, key
        return best

    def extend() -> bool:
        if len(mapping) == g.n:
            return True
        v = next_vertex()
        want = {mapping[u] for u in g.adj[v] if u in mapping}
        for c in by_color[cg[v]]:
            if c in used or g.degree(v) != h.degree(c):
                continue
            if {x for x in h.adj[c] if x in used} != want:
                continue
            mapping[v] = c
            used.add(c)
            if extend():
                return True
            del mapping[v]
            used.discard(c)
        return False

    return dict(mapping) if extend() else None


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def members_of_order(n: int) -> list[tuple[Graph, FamilySpec]]:
    """All family members with exactly n vertices, one per isomorphism
    class. Empty when no parameter produces that order."""
    raw: list[tuple[Graph, FamilySpec]] = []
    if n % 3 == 0:
        k = n // 3
        if k >= 2:
            for ends in (
                (EndType.OPEN, EndType.OPEN),
                (EndType.OPEN, EndType.EDGE),
                (EndType.EDGE, EndType.EDGE),
            ):
                raw.append(end_variant_ladder(k, *ends))
        if k >= 3:
            raw.append(closed_ladder(k))
    elif n % 3 == 1:
        k = (n - 1) // 3
        if k >= 2:
            raw.append(end_variant_ladder(k, EndType.OPEN, EndType.CAP))
            raw.append(end_variant_ladder(k, EndType.EDGE, EndType.CAP))
    else:
        k = (n - 2) // 3
        if k >= 2:
            raw.append(end_variant_ladder(k, EndType.CAP, EndType.CAP))
    out: list[tuple[Graph, FamilySpec]] = []
    for g, spec in raw:
        if not any(is_isomorphic(g, g2) for g2, _ in out):
            out.append((g, spec))
    return out


def recognize_with_mapping(
    g: Graph,
) -> tuple[FamilySpec, dict[int, int]] | None:
    """Family membership with the witnessing isomorphism from the
    generated member onto the input graph."""
    degs = sorted(g.degree(v) for v in range(g.n))
    for cand, spec in members_of_order(g.n):
        if cand.m != g.m:
            continue
        if sorted(cand.degree(v) for v in range(cand.n)) != degs:
            continue
        mapping = find_isomorphism(cand, g)
        if mapping is not None:
            return spec, mapping
    return None


def recognize(g: Graph) -> FamilySpec | None:
    """Membership test for the ladder families (None if not a member)."""
    hit = recognize_with_mapping(g)
    return hit[0] if hit else None


def equality_certified(g: Graph, budget=None) -> bool:
    """True when the two matching numbers provably coincide: graphs of
    order at most 20 are solved exactly, larger ones qualify exactly
    when they belong to the ladder families."""
    if g.n <= 20:
        from .exact import max_induced_matching, max_uniquely_restricted_matching

        nu_s, _ = max_induced_matching(g, budget)
        nu_ur, _ = max_uniquely_restricted_matching(g, budget)
        return nu_s == nu_ur
    return recognize(g) is not None


def validate_family_graph(g: Graph, spec: FamilySpec) -> bool:
    """Cross-check a generated pair: structure and canonical matching."""
    if not is_subcubic(g):
        return False
    cm = canonical_induced_matching(spec)
    return len(cm) == spec.k and is_induced_matching(g, cm)
