"""General maximum cardinality matching via augmenting paths with
blossom contraction. Works on raw adjacency lists; no weights.
"""

from __future__ import annotations

from typing import Sequence


def maximum_matching(n: int, adj: Sequence[Sequence[int]]) -> list[int]:
    """Return the mate array of a maximum matching (-1 for exposed)."""
    mate = [-1] * n
    # Greedy seed keeps the number of augmentation phases small.
    for v in range(n):
        if mate[v] == -1:
            for u in adj[v]:
                if mate[u] == -1:
                    mate[v] = u
                    mate[u] = v
                    break
    for v in range(n):
        if mate[v] == -1:
            _augment_from(n, adj, mate, v)
    return mate


def _augment_from(n, adj, mate, root) -> bool:
    parent = [-1] * n          # even vertex leading here via an unmatched edge
    base = list(range(n))      # blossom base of each vertex
    in_queue = [False] * n
    in_path = [False] * n
    queue = [root]
    in_queue[root] = True

    def lca(a, b):
        used = [False] * n
        while True:
            a = base[a]
            used[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if used[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v, b, child):
        while base[v] != b:
            in_path[base[v]] = True
            in_path[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    def contract(u, v):
        b = lca(u, v)
        for w in range(n):
            in_path[w] = False
        mark_path(u, b, v)
        mark_path(v, b, u)
        for w in range(n):
            if in_path[base[w]]:
                base[w] = b
                if not in_queue[w]:
                    in_queue[w] = True
                    queue.append(w)

    qi = 0
    while qi < len(queue):
        v = queue[qi]
        qi += 1
        for u in adj[v]:
            if base[u] == base[v] or mate[v] == u:
                continue
            if u == root or (mate[u] != -1 and parent[mate[u]] != -1):
                contract(u, v)
            elif parent[u] == -1:
                parent[u] = v
                if mate[u] == -1:
                    # Augment along the alternating path back to the root.
                    while u != -1:
                        pv = parent[u]
                        nxt = mate[pv]
                        mate[u] = pv
                        mate[pv] = u
                        u = nxt
                    return True
                else:
                    w = mate[u]
                    if not in_queue[w]:
                        in_queue[w] = True
                        queue.append(w)
    return False


def matching_size(mate: Sequence[int]) -> int:
    return sum(1 for v, u in enumerate(mate) if u > v)


def matching_edges(mate: Sequence[int]) -> list[tuple[int, int]]:
    return [(v, u) for v, u in enumerate(mate) if u > v]


def has_perfect_matching(n: int, adj: Sequence[Sequence[int]]) -> bool:
    if n % 2:
        return False
    return matching_size(maximum_matching(n, adj)) * 2 == n
