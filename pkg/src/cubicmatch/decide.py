"""Deciding whether the induced and uniquely restricted matching
numbers of a subcubic graph coincide.

Both halves of the decision share one shape: repeatedly commit a
pendant edge (an edge with a degree-1 endpoint) to the matching and
shrink the graph, then certify every leftover component. A component
certifies when its two matching numbers provably agree: small ones are
solved exactly, large ones must be ladder-family members. The two
halves differ in what they delete per pendant edge (just its endpoints
for the uniquely restricted half, the whole closed neighborhood of the
internal endpoint for the induced half) and in which optimum they take
on certified components. Equality holds exactly when both halves return
matchings of the same size.

`local_pair_violations` extracts refutation certificates from a maximum
induced matching: an uncovered edge that lies on no 4-cycle through a
matched edge, or a local pair (two disjoint pendant edges hanging off a
matched edge) with none of its three admissible closures, each implying
a strictly larger uniquely restricted matching.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exact import max_induced_matching, max_uniquely_restricted_matching
from .family import canonical_induced_matching, recognize_with_mapping
from .graph import Graph, induced_subgraph, is_subcubic
from .matching import (
    Matching,
    is_induced_matching,
    is_matching,
    is_uniquely_restricted,
    matching_from,
)


@dataclass(frozen=True)
class PeelOutcome:
    """Either a matching in original vertex ids, or the component of the
    reduced graph that failed certification."""

    matching: Matching | None = None
    failing_component: tuple[int, ...] | None = None


@dataclass(frozen=True)
class FailingComponent:
    vertices: tuple[int, ...]

    def to_json(self) -> dict:
        return {"kind": "component", "vertices": list(self.vertices)}


@dataclass(frozen=True)
class SizeMismatch:
    ur_size: int
    induced_size: int

    def to_json(self) -> dict:
        return {
            "kind": "size-mismatch",
            "ur_size": self.ur_size,
            "induced_size": self.induced_size,
        }


@dataclass
class DecisionReport:
    equal: bool
    nu_s: int | None = None
    nu_ur: int | None = None
    induced_witness: Matching | None = None
    ur_witness: Matching | None = None
    refutation: FailingComponent | SizeMismatch | None = None

    def to_json(self) -> dict:
        return {
            "equal": self.equal,
            "nu_s": self.nu_s,
            "nu_ur": self.nu_ur,
            "induced_witness": (
                self.induced_witness.to_labels()
                if self.induced_witness is not None
                else None
            ),
            "ur_witness": (
                self.ur_witness.to_labels()
                if self.ur_witness is not None
                else None
            ),
            "refutation": (
                self.refutation.to_json() if self.refutation else None
            ),
        }


def _require_subcubic(g: Graph) -> None:
    if not is_subcubic(g):
        raise ValueError(
            "decision procedure is defined for subcubic graphs only "
            "(max degree at most 3); use the exact solvers instead"
        )


def _peel_pendants(g: Graph, drop_neighborhood: bool):
    """Commit pendant edges deterministically (smallest degree-1 vertex
    first) and return the committed pairs plus the surviving vertices."""
    alive = [True] * g.n
    deg = [g.degree(v) for v in range(g.n)]
    committed: list[tuple[int, int]] = []
    while True:
        u = next((v for v in range(g.n) if alive[v] and deg[v] == 1), None)
        if u is None:
            break
        v = next(w for w in g.adj[u] if alive[w])
        committed.append((u, v) if u < v else (v, u))
        if drop_neighborhood:
            kill = [v] + [w for w in g.adj[v] if alive[w]]
        else:
            kill = [u, v]
        for x in kill:
            alive[x] = False
        for x in kill:
            for y in g.adj[x]:
                if alive[y]:
                    deg[y] -= 1
    return committed, alive


def _alive_components(g: Graph, alive: list[bool]) -> list[tuple[int, ...]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if not alive[s] or seen[s]:
            continue
        seen[s] = True
        stack, part = [s], [s]
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if alive[u] and not seen[u]:
                    seen[u] = True
                    stack.append(u)
                    part.append(u)
        comps.append(tuple(sorted(part)))
    return comps


def _certify_component(
    g: Graph, comp: tuple[int, ...]
) -> tuple[list[tuple[int, int]], list[tuple[int, int]]] | None:
    """Certified maximum (uniquely restricted, induced) matchings of the
    component in original ids, or None when certification fails."""
    sub, remap = induced_subgraph(g, comp)
    back = {new: old for old, new in remap.items()}
    if sub.n <= 20:
        nu_s, ms = max_induced_matching(sub)
        nu_ur, mur = max_uniquely_restricted_matching(sub)
        if nu_s != nu_ur:
            return None
        lift = lambda mm: [(back[a], back[b]) for a, b in mm.edges]
        return lift(mur), lift(ms)
    hit = recognize_with_mapping(sub)
    if hit is None:
        return None
    spec, onto_sub = hit
    cm = canonical_induced_matching(spec)
    lifted = [
        (back[onto_sub[a]], back[onto_sub[b]]) for a, b in cm.edges
    ]
    # The canonical matching is induced of size k, and k is also the
    # uniquely restricted optimum for family members, so it serves both.
    return lifted, lifted


def _peel_and_certify(g: Graph, drop_neighborhood: bool, take_induced: bool):
    committed, alive = _peel_pendants(g, drop_neighborhood)
    collected = list(committed)
    for comp in _alive_components(g, alive):
        if len(comp) == 1:
            continue  # isolated vertex: trivially certified, empty optimum
        sol = _certify_component(g, comp)
        if sol is None:
            return PeelOutcome(failing_component=comp)
        collected.extend(sol[1] if take_induced else sol[0])
    return PeelOutcome(matching=Matching.from_pairs(collected))


def peel_ur(g: Graph) -> PeelOutcome:
    """Maximum uniquely restricted matching of a subcubic graph, or the
    failing component when the equality cannot hold.

    Each pendant edge is committed and both its endpoints removed. When
    every leftover component certifies, the returned matching is a
    maximum uniquely restricted matching of the input.
    """
    _require_subcubic(g)
    out = _peel_and_certify(g, drop_neighborhood=False, take_induced=False)
    if out.matching is not None:
        assert is_uniquely_restricted(g, out.matching)
    return out


def peel_induced(g: Graph) -> PeelOutcome:
    """An induced matching of a subcubic graph, or the failing component.

    Each pendant edge is committed and the closed neighborhood of its
    internal endpoint removed. The result is always an induced matching;
    it is maximum whenever the two matching numbers of the input agree.
    """
    _require_subcubic(g)
    out = _peel_and_certify(g, drop_neighborhood=True, take_induced=True)
    if out.matching is not None:
        assert is_induced_matching(g, out.matching)
    return out


def decide_equality(g: Graph, compute_induced_value: bool = False) -> DecisionReport:
    """Run both peeling halves and compare their sizes.

    When the verdict is negative because of a size mismatch, the
    uniquely restricted number is still reported (that half is
    unconditionally correct when it returns a matching). Pass
    `compute_induced_value=True` to also solve the induced optimum
    exactly in that case (small inputs only).
    """
    _require_subcubic(g)
    ur = peel_ur(g)
    if ur.matching is None:
        return DecisionReport(
            equal=False,
            refutation=FailingComponent(ur.failing_component),
        )
    ind = peel_induced(g)
    if ind.matching is None:
        return DecisionReport(
            equal=False,
            nu_ur=len(ur.matching),
            ur_witness=ur.matching,
            refutation=FailingComponent(ind.failing_component),
        )
    if len(ur.matching) == len(ind.matching):
        value = len(ur.matching)
        return DecisionReport(
            equal=True,
            nu_s=value,
            nu_ur=value,
            induced_witness=ind.matching,
            ur_witness=ur.matching,
        )
    report = DecisionReport(
        equal=False,
        nu_ur=len(ur.matching),
        ur_witness=ur.matching,
        refutation=SizeMismatch(len(ur.matching), len(ind.matching)),
    )
    if compute_induced_value:
        nu_s, ms = max_induced_matching(g)
        report.nu_s = nu_s
        report.induced_witness = ms
    return report


@dataclass(frozen=True)
class Violation:
    """A configuration refuting equality relative to an induced matching,
    with the strictly larger uniquely restricted matching it implies."""

    kind: str  # "uncovered-edge" or "local-pair"
    edges: tuple[tuple[int, int], ...]
    implied_matching: Matching

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "edges": [f"{u}-{v}" for u, v in self.edges],
            "implied_matching": self.implied_matching.to_labels(),
        }


def local_pair_violations(
    g: Graph, m: Matching | list[tuple[int, int]]
) -> list[Violation]:
    """Scan an induced matching for the two refutation patterns.

    Uncovered edge: an edge disjoint from the covered vertices that lies
    on no 4-cycle through a matched edge (adding it keeps the matching
    uniquely restricted). Local pair: disjoint edges a-x and b-y with
    a-b matched, where x,y are non-adjacent, the crosswise closures a-y,
    b-x are absent, and no matched edge c-d completes the 6-cycle
    a-x-c-d-y-b (swapping a-b for the two pendant edges then gains one).
    Every emitted violation is re-validated before being returned.
    """
    mm = m if isinstance(m, Matching) else matching_from(g, m)
    if not is_induced_matching(g, mm):
        raise ValueError("violation scan requires an induced matching")
    medges = list(mm.edges)
    covered = mm.vertices
    out: list[Violation] = []

    def check(implied: list[tuple[int, int]]) -> Matching:
        better = Matching.from_pairs(implied)
        assert is_matching(g, better.edges)
        assert is_uniquely_restricted(g, better)
        assert len(better) > len(mm)
        return better

    for u, v in g.edges():
        if u in covered or v in covered:
            continue
        on_four_cycle = any(
            (g.has_edge(v, a) and g.has_edge(u, b))
            or (g.has_edge(v, b) and g.has_edge(u, a))
            for a, b in medges
        )
        if not on_four_cycle:
            better = check(medges + [(u, v)])
            out.append(Violation("uncovered-edge", ((u, v),), better))

    for a, b in medges:
        others = [e for e in medges if e != (a, b)]
        for x in g.adj[a]:
            if x == b:
                continue
            for y in g.adj[b]:
                if y == a or y == x:
                    continue
                if g.has_edge(x, y):
                    continue
                if g.has_edge(a, y) and g.has_edge(b, x):
                    continue
                six_cycle = any(
                    c not in (x, y)
                    and d not in (x, y)
                    and (
                        (g.has_edge(x, c) and g.has_edge(y, d))
                        or (g.has_edge(x, d) and g.has_edge(y, c))
                    )
                    for c, d in others
                )
                if six_cycle:
                    continue
                implied = others + [
                    (min(a, x), max(a, x)),
                    (min(b, y), max(b, y)),
                ]
                better = check(implied)
                pair = ((a, b), (min(a, x), max(a, x)), (min(b, y), max(b, y)))
                out.append(Violation("local-pair", pair, better))
    return out
