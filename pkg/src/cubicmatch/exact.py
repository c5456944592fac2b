"""Exact solvers for the three matching numbers.

The plain matching number comes from the blossom algorithm. The induced
and uniquely restricted numbers are computed by depth-first search over
edges in id order (include/exclude). Both predicates are hereditary, so
prefix feasibility checks are sound. Two admissible bounds prune the
search: a per-suffix optimum table (bootstrapped backwards with
node-capped decision searches; a capped entry falls back to the always
valid previous entry plus one) and a free-vertex capacity count.

The incremental uniqueness check exploits bridges: if the new edge is a
bridge of the grown covered subgraph, the grown matching stays uniquely
restricted; otherwise a full bridge-peeling pass decides it.

`oracle_equality` is a deliberately unclever cross-check: it enumerates
every matching outright and evaluates the definitions directly, sharing
no code path with the branch-and-bound solvers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blossom import matching_size, maximum_matching
from .graph import Graph
from .matching import Matching, is_induced_matching, is_uniquely_restricted


class BudgetError(RuntimeError):
    """Solve aborted because a resource cap was hit (never a wrong answer)."""


@dataclass(frozen=True)
class SolveBudget:
    max_order: int = 26
    max_nodes: int = 100_000_000
    force: bool = False

    def __post_init__(self) -> None:
        if self.max_order <= 0 or self.max_nodes <= 0:
            raise ValueError("budget values must be positive")


_DEFAULT_BUDGET = SolveBudget()
_ORACLE_BUDGET = SolveBudget(max_order=16)


def _check_order(g: Graph, budget: SolveBudget) -> None:
    if g.n > budget.max_order and not budget.force:
        raise BudgetError(
            f"order {g.n} exceeds max_order {budget.max_order}; "
            "pass force=True to override"
        )


def max_matching(g: Graph) -> tuple[int, Matching]:
    """Maximum matching size and its lexicographically smallest witness."""
    size = matching_size(maximum_matching(g.n, g.adj))
    chosen: list[tuple[int, int]] = []
    used: set[int] = set()
    for u, v in g.edges():
        if len(chosen) == size:
            break
        if u in used or v in used:
            continue
        banned = used | {u, v}
        adj = [
            tuple(w for w in g.adj[x] if w not in banned and x not in banned)
            for x in range(g.n)
        ]
        rest = matching_size(maximum_matching(g.n, adj))
        if rest == size - len(chosen) - 1:
            chosen.append((u, v))
            used |= {u, v}
    return size, Matching.from_pairs(chosen)


class _EntryCap(Exception):
    """Internal: a relaxation sub-search ran past its node cap."""


class _EdgeSubsetSolver:
    """Shared engine for the induced and uniquely restricted optima.

    The pruning bound at a node with edges before index j committed is
    the optimum of a relaxation: the largest standalone-feasible edge
    set within edges j.. that avoids the vertices the prefix has already
    touched (covered vertices, plus their neighborhoods in the induced
    mode). Hereditarity makes this admissible. Relaxation optima are
    memoized by their interface state (j, touched vertices among the
    suffix's vertices) and computed lazily by this same engine, so
    structured instances collapse to a small table while worst cases
    stay plain branch and bound.
    """

    ENTRY_CAP = 30_000     # nodes per relaxation sub-search
    MEMO_LIMIT = 400_000   # max cached relaxation entries

    def __init__(self, g: Graph, mode: str, budget: SolveBudget):
        self.g = g
        self.mode = mode
        self.induced = mode == "induced"
        self.budget = budget
        self.edges = list(g.edges())
        self.m = len(self.edges)
        self.nodes = 0
        self.deadline: int | None = None
        self.adjm = [0] * g.n
        for u, v in self.edges:
            self.adjm[u] |= 1 << v
            self.adjm[v] |= 1 << u
        self.vmask = [(1 << u) | (1 << v) for u, v in self.edges]
        if self.induced:
            self.block = [
                self.vmask[i] | self.adjm[u] | self.adjm[v]
                for i, (u, v) in enumerate(self.edges)
            ]
        suffix = [0] * (self.m + 1)
        for i in range(self.m - 1, -1, -1):
            suffix[i] = suffix[i + 1] | self.vmask[i]
        self.suffix_vmask = suffix
        self.memo: dict[tuple[int, int], int] = {}
        self.in_progress: set[tuple[int, int]] = set()
        # Search state (mutated along the DFS).
        self.used = 0
        self.blocked = 0
        self.cur: list[tuple[int, int]] = []
        self.best_size = 0
        self.best_edges: list[tuple[int, int]] = []

    def _is_bridge(self, x: int, y: int, alive: int) -> bool:
        """Is edge x-y a bridge of the covered subgraph (mask `alive`)?"""
        adjm = self.adjm
        ybit = 1 << y
        seen = 1 << x
        frontier = adjm[x] & alive & ~ybit & ~seen
        while frontier:
            if frontier & ybit:
                return False
            seen |= frontier
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= adjm[b.bit_length() - 1]
            frontier = nxt & alive & ~seen
        return True

    def _bridges_masked(self, alive: int) -> set[tuple[int, int]]:
        """All bridges of the covered subgraph, by lowpoint DFS."""
        adjm = self.adjm
        disc: dict[int, int] = {}
        low: dict[int, int] = {}
        bridges: set[tuple[int, int]] = set()
        timer = 0
        rest = alive
        while rest:
            rbit = rest & -rest
            root = rbit.bit_length() - 1
            if root in disc:
                rest ^= rbit
                continue
            disc[root] = low[root] = timer
            timer += 1
            stack = [[root, adjm[root] & alive]]
            while stack:
                frame = stack[-1]
                v, nbrs = frame
                if nbrs:
                    b = nbrs & -nbrs
                    frame[1] ^= b
                    u = b.bit_length() - 1
                    if u in disc:
                        if low[v] > disc[u]:
                            low[v] = disc[u]
                    else:
                        disc[u] = low[u] = timer
                        timer += 1
                        stack.append([u, adjm[u] & alive & ~(1 << v)])
                else:
                    stack.pop()
                    if stack:
                        p = stack[-1][0]
                        if low[p] > low[v]:
                            low[p] = low[v]
                        if low[v] > disc[p]:
                            bridges.add((p, v) if p < v else (v, p))
            rest ^= rbit
        return bridges

    def _ur_full(self, alive: int, new_edge: tuple[int, int]) -> bool:
        """Full bridge peeling of the grown covered subgraph."""
        remaining = set(self.cur)
        remaining.add(new_edge)
        while remaining:
            bridges = self._bridges_masked(alive)
            peel = remaining & bridges
            if not peel:
                return False
            for u, v in peel:
                alive &= ~((1 << u) | (1 << v))
            remaining -= peel
        return True

    def _compute_entry(self, key: tuple[int, int], cap: int) -> int:
        """Solve one relaxation exactly (node-capped; a capped entry
        stores the capacity bound, which stays admissible)."""
        j, mask = key
        self.in_progress.add(key)
        saved = (
            self.used,
            self.blocked,
            self.cur,
            self.best_size,
            self.best_edges,
            self.deadline,
        )
        self.used = mask
        self.blocked = mask
        self.cur = []
        self.best_size = 0
        self.best_edges = []
        entry_deadline = self.nodes + self.ENTRY_CAP
        if self.deadline is None or entry_deadline < self.deadline:
            self.deadline = entry_deadline
        try:
            self._maximize(j, 0)
            val = self.best_size
        except _EntryCap:
            val = cap
            if saved[5] is not None and self.nodes > saved[5]:
                (
                    self.used,
                    self.blocked,
                    self.cur,
                    self.best_size,
                    self.best_edges,
                    self.deadline,
                ) = saved
                self.in_progress.discard(key)
                self.memo[key] = val
                raise  # an enclosing entry is over its own cap too
        (
            self.used,
            self.blocked,
            self.cur,
            self.best_size,
            self.best_edges,
            self.deadline,
        ) = saved
        self.in_progress.discard(key)
        self.memo[key] = val
        return val

    def _maximize(self, j: int, size: int) -> None:
        """Incumbent search; records the first (lex-least) optimum.

        The loop body is inlined: it runs once per candidate edge index
        and dominates the solver's runtime.
        """
        nodes = self.nodes = self.nodes + 1
        if nodes > self.budget.max_nodes:
            raise BudgetError(
                f"search exceeded max_nodes {self.budget.max_nodes}"
            )
        if self.deadline is not None and nodes > self.deadline:
            raise _EntryCap
        if size > self.best_size:
            self.best_size = size
            self.best_edges = list(self.cur)
        m = self.m
        induced = self.induced
        vmask = self.vmask
        suffix = self.suffix_vmask
        memo = self.memo
        adjm = self.adjm
        edges = self.edges
        state = self.blocked if induced else self.used
        while j < m:
            sj = suffix[j]
            room = (sj & ~state).bit_count() >> 1
            if room > 1:
                key = (j, state & sj)
                val = memo.get(key)
                if (
                    val is None
                    and key not in self.in_progress
                    and len(memo) < self.MEMO_LIMIT
                ):
                    val = self._compute_entry(key, room)
                if val is not None and val < room:
                    room = val
            if size + room <= self.best_size:
                return
            vm = vmask[j]
            if not vm & state:
                if induced:
                    ok = True
                else:
                    x, y = edges[j]
                    used = self.used
                    if adjm[x] & used and adjm[y] & used:
                        grown = used | vm
                        ok = self._is_bridge(x, y, grown) or self._ur_full(
                            grown, edges[j]
                        )
                    else:
                        ok = True  # pendant in the covered subgraph
                if ok:
                    saved_used = self.used
                    saved_blocked = self.blocked
                    self.used |= vm
                    if induced:
                        self.blocked |= self.block[j]
                    self.cur.append(edges[j])
                    self._maximize(j + 1, size + 1)
                    self.used = saved_used
                    self.blocked = saved_blocked
                    self.cur.pop()
                    state = self.blocked if induced else self.used
            j += 1

    def solve(self) -> tuple[int, Matching]:
        if self.m == 0:
            return 0, Matching(())
        import sys

        # Nested relaxation solves strictly advance the edge index, so
        # the stack is bounded by edge count squared plus slack.
        need = 4 * self.m * self.m + 2000
        if sys.getrecursionlimit() < need:
            sys.setrecursionlimit(need)
        self._maximize(0, 0)
        return self.best_size, Matching.from_pairs(self.best_edges)


def max_induced_matching(
    g: Graph, budget: SolveBudget | None = None
) -> tuple[int, Matching]:
    """Exact maximum induced matching with witness."""
    budget = budget or _DEFAULT_BUDGET
    _check_order(g, budget)
    size, witness = _EdgeSubsetSolver(g, "induced", budget).solve()
    if not is_induced_matching(g, witness):
        raise AssertionError("solver returned a non-induced witness")
    return size, witness


def max_uniquely_restricted_matching(
    g: Graph, budget: SolveBudget | None = None
) -> tuple[int, Matching]:
    """Exact maximum uniquely restricted matching with witness."""
    budget = budget or _DEFAULT_BUDGET
    _check_order(g, budget)
    size, witness = _EdgeSubsetSolver(g, "ur", budget).solve()
    if not is_uniquely_restricted(g, witness):
        raise AssertionError("solver returned a non-UR witness")
    return size, witness


def count_perfect_matchings(g: Graph) -> int:
    """Number of perfect matchings, by direct enumeration."""
    if g.n % 2:
        return 0
    full = (1 << g.n) - 1

    def rec(covered: int) -> int:
        if covered == full:
            return 1
        rest = ~covered & full
        v = (rest & -rest).bit_length() - 1
        total = 0
        for u in g.adj[v]:
            if not covered & (1 << u):
                total += rec(covered | (1 << v) | (1 << u))
        return total

    return rec(0)


def oracle_equality(
    g: Graph, budget: SolveBudget | None = None
) -> tuple[int, int, bool]:
    """Ground-truth (nu_s, nu_ur, equal) by enumerating every matching
    and applying the definitions directly. Default order cap is 16."""
    budget = budget or _ORACLE_BUDGET
    _check_order(g, budget)
    edges = list(g.edges())
    m = len(edges)
    best_s = 0
    best_ur = 0

    cover: dict[int, int] = {}  # vertex -> partner, for the current set

    def induced_now() -> bool:
        for v in cover:
            p = cover[v]
            for w in g.adj[v]:
                if w in cover and w != p:
                    return False
        return True

    def ur_now() -> bool:
        verts = sorted(cover)
        idx = {v: i for i, v in enumerate(verts)}
        k = len(verts)
        adj = [tuple(idx[w] for w in g.adj[v] if w in idx) for v in verts]
        full = (1 << k) - 1

        def pm(covered: int) -> int:
            if covered == full:
                return 1
            rest = ~covered & full
            v = (rest & -rest).bit_length() - 1
            total = 0
            for u in adj[v]:
                if not covered & (1 << u):
                    total += pm(covered | (1 << v) | (1 << u))
                    if total > 1:
                        return total
            return total

        return pm(0) == 1

    def rec(i: int, size: int) -> None:
        nonlocal best_s, best_ur
        if size > best_ur and ur_now():
            best_ur = size
        if size > best_s and induced_now():
            best_s = size
        for j in range(i, m):
            u, v = edges[j]
            if u in cover or v in cover:
                continue
            cover[u] = v
            cover[v] = u
            rec(j + 1, size + 1)
            del cover[u]
            del cover[v]

    rec(0, 0)
    return best_s, best_ur, best_s == best_ur
