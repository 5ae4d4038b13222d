"""Plane count conditions, decided by the (2,3)-pebble game.

A graph on n >= 2 vertices is sparse when every subgraph H with at least two
vertices has |E(H)| <= 2|V(H)| - 3, and tight when additionally |E| = 2n - 3
(Laman's conditions). The pebble game decides this in O(n m): every vertex
starts with two pebbles, and an edge is accepted once four pebbles sit on its
endpoints, after which the edge is oriented and paid for with one pebble of
its tail. Pebbles are pulled toward an endpoint by reversing directed paths.

On rejection, the set of vertices reachable from the offending edge's
endpoints in the pebble digraph induces a subgraph with |E| >= 2|V| - 2,
which is the violation witness reported here.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import TooFewVertices, TooLarge
from .graphs import Graph


@dataclass(frozen=True)
class SparsityReport:
    is_sparse: bool
    is_tight: bool
    witness: tuple[int, ...] | None
    edge_count: int
    target: int


def pebble_sparsity(g: Graph) -> SparsityReport:
    """Run the (2,3)-pebble game over the edges in sorted order."""
    n = g.n
    if n < 2:
        raise TooFewVertices(f"need at least 2 vertices, got {n}")
    target = 2 * n - 3
    pebbles = [2] * n
    out: list[list[int]] = [[] for _ in range(n)]
    visited = [0] * n
    parent = [-1] * n
    stamp = 0

    def gather(root: int, u: int, v: int) -> bool:
        # DFS from root along the digraph for a free pebble outside {u, v};
        # on success reverse the path and move the pebble to root.
        nonlocal stamp
        stamp += 1
        visited[root] = stamp
        parent[root] = -1
        stack = [root]
        while stack:
            x = stack.pop()
            for y in out[x]:
                if visited[y] == stamp:
                    continue
                visited[y] = stamp
                parent[y] = x
                if y != u and y != v and pebbles[y] > 0:
                    pebbles[y] -= 1
                    pebbles[root] += 1
                    node = y
                    while node != root:
                        prev = parent[node]
                        out[prev].remove(node)
                        out[node].append(prev)
                        node = prev
                    return True
                stack.append(y)
        return False

    def reach(u: int, v: int) -> list[int]:
        nonlocal stamp
        stamp += 1
        visited[u] = visited[v] = stamp
        stack = [u, v]
        region = [u, v]
        while stack:
            x = stack.pop()
            for y in out[x]:
                if visited[y] != stamp:
                    visited[y] = stamp
                    region.append(y)
                    stack.append(y)
        return region

    for u, v in g.sorted_edges:
        while pebbles[u] + pebbles[v] < 4:
            if pebbles[u] < 2 and gather(u, u, v):
                continue
            if pebbles[v] < 2 and gather(v, u, v):
                continue
            # Neither endpoint can pull in another pebble: the reachable
            # region is closed and carries at most 3 pebbles, all on u, v.
            witness = tuple(sorted(reach(u, v)))
            return SparsityReport(
                is_sparse=False,
                is_tight=False,
                witness=witness,
                edge_count=g.m,
                target=target,
            )
        pebbles[u] -= 1
        out[u].append(v)

    return SparsityReport(
        is_sparse=True,
        is_tight=g.m == target,
        witness=None,
        edge_count=g.m,
        target=target,
    )


def laman_check(g: Graph) -> bool:
    """True iff the graph is (2,3)-tight."""
    return pebble_sparsity(g).is_tight


def brute_force_laman(g: Graph) -> bool:
    """Check the count conditions literally, over every vertex subset.

    Independent of the pebble game; usable as an oracle up to n = 14.
    """
    n = g.n
    if n > 14:
        raise TooLarge(f"enumeration bound is 14 vertices, got {n}")
    if g.m != 2 * n - 3:
        return False
    adj = [0] * n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    for subset in range(1, 1 << n):
        k = subset.bit_count()
        if k < 2:
            continue
        inner = 0
        rest = subset
        while rest:
            low = rest & -rest
            inner += (adj[low.bit_length() - 1] & subset).bit_count()
            rest ^= low
        if inner // 2 > 2 * k - 3:
            return False
    return True
