"""Corpus generation and batch verification.

Exhaustive generation works by orderly augmentation: every connected
graph with max degree 3 on n+1 vertices arises from one on n vertices
by attaching a new vertex to one, two, or three vertices of degree
below 3, so levels are grown and deduplicated up to isomorphism.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Iterable, Iterator

from .decide import DecisionReport, decide_equality
from .exact import BudgetError, SolveBudget, oracle_equality
from .family import is_isomorphic, iso_certificate, recognize
from .graph import (
    FormatError,
    Graph,
    is_subcubic,
    is_two_connected,
    parse_graph6,
)


def exhaustive_connected_subcubic(
    n_max: int, force: bool = False
) -> Iterator[Graph]:
    """Every connected subcubic graph on at most n_max vertices, one
    representative per isomorphism class, smaller orders first."""
    if n_max > 10 and not force:
        raise BudgetError(
            f"exhaustive generation capped at order 10 (asked {n_max}); "
            "pass force=True to override"
        )
    if n_max < 1:
        return
    level = [Graph.from_edges(1, [])]
    yield level[0]
    for n in range(1, n_max):
        buckets: dict[tuple, list[Graph]] = {}
        nxt: list[Graph] = []
        for g in level:
            open_verts = [v for v in range(n) if g.degree(v) < 3]
            for size in (1, 2, 3):
                for subset in _subsets(open_verts, size):
                    child = Graph.from_edges(
                        n + 1, list(g.edges()) + [(v, n) for v in subset]
                    )
                    key = iso_certificate(child)
                    bucket = buckets.setdefault(key, [])
                    if not any(is_isomorphic(child, h) for h in bucket):
                        bucket.append(child)
                        nxt.append(child)
        level = nxt
        yield from level


def _subsets(items: list[int], size: int) -> Iterator[tuple[int, ...]]:
    from itertools import combinations

    return combinations(items, size)


def random_subcubic(n: int, seed: int, require: str = "none") -> Graph:
    """Seed-deterministic random subcubic graph by repeated random edge
    insertion, resampled until the requirement holds.

    require: "none", "min_degree_2", or "two_connected".
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    if require not in ("none", "min_degree_2", "two_connected"):
        raise ValueError(f"unknown requirement {require!r}")
    rng = random.Random(f"subcubic:{n}:{seed}:{require}")
    max_m = 3 * n // 2
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for _ in range(200):
        if require == "none":
            target = rng.randint(max(0, n - 2), max_m) if n > 1 else 0
        else:
            target = rng.randint(min(max_m, (5 * n) // 4), max_m)
        rng.shuffle(pairs)
        deg = [0] * n
        edges = []
        for u, v in pairs:
            if len(edges) >= target:
                break
            if deg[u] < 3 and deg[v] < 3:
                edges.append((u, v))
                deg[u] += 1
                deg[v] += 1
        g = Graph.from_edges(n, edges)
        if require == "none":
            return g
        if require == "min_degree_2" and n >= 3 and min(deg) >= 2:
            return g
        if require == "two_connected" and is_two_connected(g):
            return g
    raise ValueError(
        f"requirement {require!r} unsatisfied for n={n} after 200 attempts"
    )


@dataclass
class VerifyRecord:
    index: int
    error: str | None = None
    n: int | None = None
    m: int | None = None
    subcubic: bool | None = None
    two_connected: bool | None = None
    decision: DecisionReport | None = None
    skip: str | None = None
    oracle: tuple[int, int] | None = None
    agree: bool | None = None
    in_family: bool | None = None
    family_mismatch: bool | None = None

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "error": self.error,
            "n": self.n,
            "m": self.m,
            "subcubic": self.subcubic,
            "two_connected": self.two_connected,
            "decision": self.decision.to_json() if self.decision else None,
            "skip": self.skip,
            "oracle": (
                {"nu_s": self.oracle[0], "nu_ur": self.oracle[1]}
                if self.oracle
                else None
            ),
            "agree": self.agree,
            "in_family": self.in_family,
            "family_mismatch": self.family_mismatch,
        }


@dataclass
class VerifySummary:
    records: int = 0
    errors: int = 0
    decided: int = 0
    equal: int = 0
    oracle_checked: int = 0
    oracle_disagreements: int = 0
    family_checked: int = 0
    family_mismatches: int = 0

    def update(self, rec: VerifyRecord) -> None:
        self.records += 1
        if rec.error is not None:
            self.errors += 1
        if rec.decision is not None:
            self.decided += 1
            if rec.decision.equal:
                self.equal += 1
        if rec.agree is not None:
            self.oracle_checked += 1
            if not rec.agree:
                self.oracle_disagreements += 1
        if rec.family_mismatch is not None:
            self.family_checked += 1
            if rec.family_mismatch:
                self.family_mismatches += 1

    @property
    def ok(self) -> bool:
        return (
            self.errors == 0
            and self.oracle_disagreements == 0
            and self.family_mismatches == 0
        )

    def to_json(self) -> dict:
        return {
            "records": self.records,
            "errors": self.errors,
            "decided": self.decided,
            "equal": self.equal,
            "oracle_checked": self.oracle_checked,
            "oracle_disagreements": self.oracle_disagreements,
            "family_checked": self.family_checked,
            "family_mismatches": self.family_mismatches,
            "ok": self.ok,
        }


def verify_one(
    indexed_line: tuple[int, str],
    run_oracle: bool = False,
    oracle_max_n: int = 12,
    check_family: bool = False,
) -> VerifyRecord:
    """Verify a single graph6 line; never raises on bad records."""
    index, line = indexed_line
    rec = VerifyRecord(index=index)
    try:
        g = parse_graph6(line)
    except FormatError as exc:
        rec.error = str(exc)
        return rec
    try:
        rec.n, rec.m = g.n, g.m
        rec.subcubic = is_subcubic(g)
        rec.two_connected = is_two_connected(g)
        rec.in_family = recognize(g) is not None
        if rec.subcubic:
            rec.decision = decide_equality(g)
        else:
            rec.skip = "not subcubic"
        if run_oracle and g.n <= oracle_max_n:
            budget = SolveBudget(max_order=oracle_max_n, force=True)
            nu_s, nu_ur, eq = oracle_equality(g, budget)
            rec.oracle = (nu_s, nu_ur)
            if rec.decision is not None:
                rec.agree = rec.decision.equal == eq
        if (
            check_family
            and rec.subcubic
            and rec.two_connected
            and g.n >= 21
            and rec.decision is not None
        ):
            rec.family_mismatch = rec.decision.equal != rec.in_family
    except (BudgetError, ValueError) as exc:
        rec.error = f"{type(exc).__name__}: {exc}"
    return rec


def verify_lines(
    lines: Iterable[str],
    run_oracle: bool = False,
    oracle_max_n: int = 12,
    check_family: bool = False,
    jobs: int = 1,
) -> Iterator[VerifyRecord]:
    """Verify a graph6 stream, yielding records in input order. Blank
    lines are skipped; malformed records are reported, not fatal."""
    indexed = (
        (i, line)
        for i, line in enumerate(s.strip() for s in lines)
        if line
    )
    worker = partial(
        verify_one,
        run_oracle=run_oracle,
        oracle_max_n=oracle_max_n,
        check_family=check_family,
    )
    if jobs <= 1:
        for item in indexed:
            yield worker(item)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            yield from pool.map(worker, indexed, chunksize=8)
