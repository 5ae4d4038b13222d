"""Symmetric three-tree edge partitions: construction and verification.

The certificate dual to a construction sequence is a partition of the edge
set into three trees with every vertex in exactly two of them, cyclically
permuted by the rotation. It is built by replaying the sequence and updating
the three trees after each move; the update rules place the new orbit's
edges so that both the tree property and the rotation equivariance survive.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .certify import (
    EDGE_SPLIT,
    VERTEX_ADDITION,
    ConstructionSequence,
    apply_move,
)
from .errors import InternalInvariantBroken
from .graphs import Edge, SymGraph, edge
from .pebble import pebble_sparsity


@dataclass(frozen=True)
class TreePartition:
    """Edge sets of the three trees, indexed so the rotation maps i to i+1."""

    trees: tuple[frozenset[Edge], frozenset[Edge], frozenset[Edge]]

    def tree_vertices(self, i: int) -> frozenset[int]:
        return frozenset(v for e in self.trees[i] for v in e)

    def as_json_dict(self) -> dict:
        return {
            f"T{i}": [list(e) for e in sorted(self.trees[i])] for i in range(3)
        }


@dataclass(frozen=True)
class PartitionReport:
    """One boolean per verified property of a claimed partition."""

    partitions_edges: bool
    trees_are_trees: bool
    two_trees_per_vertex: bool
    rotation_cycles_trees: bool
    proper: bool

    @property
    def ok(self) -> bool:
        return (
            self.partitions_edges
            and self.trees_are_trees
            and self.two_trees_per_vertex
            and self.rotation_cycles_trees
            and self.proper
        )

    def failures(self) -> tuple[str, ...]:
        names = (
            "partitions_edges",
            "trees_are_trees",
            "two_trees_per_vertex",
            "rotation_cycles_trees",
            "proper",
        )
        return tuple(name for name in names if not getattr(self, name))

    def as_json_dict(self) -> dict:
        return {
            "partitions_edges": self.partitions_edges,
            "trees_are_trees": self.trees_are_trees,
            "two_trees_per_vertex": self.two_trees_per_vertex,
            "rotation_cycles_trees": self.rotation_cycles_trees,
            "proper": self.proper,
            "ok": self.ok,
        }


def _is_tree(edges: frozenset[Edge]) -> bool:
    if not edges:
        return False
    vertices = {v for e in edges for v in e}
    if len(edges) != len(vertices) - 1:
        return False
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    start = next(iter(vertices))
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == len(vertices)


def verify_tree_partition(sg: SymGraph, tp: TreePartition) -> PartitionReport:
    """Check every defining property; failures are report entries, not errors."""
    act = sg.require_action()
    g = sg.graph
    t0, t1, t2 = tp.trees

    union = t0 | t1 | t2
    total = len(t0) + len(t1) + len(t2)
    partitions_edges = union == g.edges and total == g.m

    trees_are_trees = _is_tree(t0) and _is_tree(t1) and _is_tree(t2)

    counts = [0] * g.n
    for tree in tp.trees:
        for v in {x for e in tree for x in e}:
            counts[v] += 1
    two_trees_per_vertex = all(c == 2 for c in counts)

    rotation_cycles_trees = all(
        {act.map_edge(e) for e in tp.trees[i]} == set(tp.trees[(i + 1) % 3])
        for i in range(3)
    )

    # Properness (no two non-trivial subtrees of distinct trees share a
    # span) is equivalent to the subgraph counts holding everywhere, which
    # the pebble game decides.
    proper = g.n >= 2 and pebble_sparsity(g).is_sparse

    return PartitionReport(
        partitions_edges=partitions_edges,
        trees_are_trees=trees_are_trees,
        two_trees_per_vertex=two_trees_per_vertex,
        rotation_cycles_trees=rotation_cycles_trees,
        proper=proper,
    )


def build_tree_partition(seq: ConstructionSequence) -> TreePartition:
    """Replay the sequence, carrying the three trees through each move.

    The result partitions the replayed graph; compose with the sequence's
    relabeling to certify the graph the sequence was extracted from.
    """
    sg = seq.base
    trees: list[set[Edge]] = [{(0, 1)}, {(1, 2)}, {(0, 2)}]

    for move in seq.moves:
        act = sg.action
        gamma, gamma2 = act.gamma, act.gamma2
        v, w, z = move.new_vertices
        vsets = [{x for e in t for x in e} for t in trees]

        if move.kind == VERTEX_ADDITION:
            v1, v2 = move.anchors
            for l in range(3):
                if v1 in vsets[l] and v2 in vsets[(l + 1) % 3]:
                    break
            else:
                raise InternalInvariantBroken("no tree index fits the anchor pair")
            trees[l] |= {edge(v, v1), edge(z, gamma2[v2])}
            trees[(l + 1) % 3] |= {edge(v, v2), edge(w, gamma[v1])}
            trees[(l + 2) % 3] |= {edge(w, gamma[v2]), edge(z, gamma2[v1])}

        elif move.kind == EDGE_SPLIT:
            v1, v2, v3 = move.anchors
            base_edge = edge(v1, v2)
            for a in range(3):
                if base_edge in trees[a]:
                    break
            else:
                raise InternalInvariantBroken("split edge missing from every tree")
            b, c = (a + 1) % 3, (a + 2) % 3
            eb = edge(gamma[v1], gamma[v2])
            ec = edge(gamma2[v1], gamma2[v2])
            if eb not in trees[b] or ec not in trees[c]:
                raise InternalInvariantBroken("edge orbit not spread over the trees")
            if v3 in vsets[b]:
                trees[a] = (trees[a] - {base_edge}) | {
                    edge(v, v1),
                    edge(v, v2),
                    edge(z, gamma2[v3]),
                }
                trees[b] = (trees[b] - {eb}) | {
                    edge(w, gamma[v1]),
                    edge(w, gamma[v2]),
                    edge(v, v3),
                }
                trees[c] = (trees[c] - {ec}) | {
                    edge(z, gamma2[v1]),
                    edge(z, gamma2[v2]),
                    edge(w, gamma[v3]),
                }
            elif v3 in vsets[c]:
                trees[a] = (trees[a] - {base_edge}) | {
                    edge(v, v1),
                    edge(v, v2),
                    edge(w, gamma[v3]),
                }
                trees[b] = (trees[b] - {eb}) | {
                    edge(w, gamma[v1]),
                    edge(w, gamma[v2]),
                    edge(z, gamma2[v3]),
                }
                trees[c] = (trees[c] - {ec}) | {
                    edge(z, gamma2[v1]),
                    edge(z, gamma2[v2]),
                    edge(v, v3),
                }
            else:
                raise InternalInvariantBroken("third anchor sits in no usable tree")

        else:  # delta extension
            (v0,) = move.anchors
            for l in range(3):
                if v0 in vsets[l]:
                    break
            else:
                raise InternalInvariantBroken("delta anchor sits in no tree")
            trees[l] |= {edge(v, v0), edge(v, w)}
            trees[(l + 1) % 3] |= {edge(w, gamma[v0]), edge(w, z)}
            trees[(l + 2) % 3] |= {edge(z, gamma2[v0]), edge(z, v)}

        sg = apply_move(sg, move)

    return TreePartition((frozenset(trees[0]), frozenset(trees[1]), frozenset(trees[2])))


def relabel_partition(tp: TreePartition, perm: tuple[int, ...]) -> TreePartition:
    """Apply a vertex renaming to every edge of every tree."""
    return TreePartition(
        tuple(frozenset(edge(perm[u], perm[v]) for u, v in t) for t in tp.trees)
    )
