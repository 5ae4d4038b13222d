"""Simple graphs carrying a designated 3-fold symmetry.

Vertices are the integers 0..n-1. Edges are unordered pairs of distinct
vertices, stored as sorted tuples. The symmetry is an order-3 automorphism
``gamma`` in one-line form (``gamma[i]`` is the image of vertex i); for the
cyclic rotation group of order three the whole action is determined by this
single generator, so only homomorphic type assignments are representable.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property

from .errors import (
    LoopOrDuplicateEdge,
    MissingAction,
    NotAPermutation,
    NotAnAutomorphism,
    NotOrderThree,
    SchemaError,
)

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Normalize an unordered vertex pair to a sorted tuple."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A finite simple graph on vertices 0..n-1."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.n < 0:
            raise SchemaError("vertex count must be non-negative")
        for u, v in self.edges:
            if u == v:
                raise LoopOrDuplicateEdge(f"loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise SchemaError(f"edge ({u}, {v}) out of range for n={self.n}")

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self.edges

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.sorted_edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg


@dataclass(frozen=True)
class C3Action:
    """An order-3 automorphism candidate: a permutation with gamma^3 = id.

    ``gamma2`` (the square) is derived once and cached. The identity is
    rejected: trivially symmetric graphs go through the plain count checks,
    not the symmetric ones.
    """

    gamma: tuple[int, ...]
    gamma2: tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        n = len(self.gamma)
        gamma = tuple(self.gamma)
        object.__setattr__(self, "gamma", gamma)
        seen = [False] * n
        for img in gamma:
            if not isinstance(img, int) or not 0 <= img < n or seen[img]:
                raise NotAPermutation(f"{list(gamma)} is not a permutation of 0..{n - 1}")
            seen[img] = True
        g2 = tuple(gamma[gamma[i]] for i in range(n))
        g3 = tuple(gamma[g2[i]] for i in range(n))
        identity = tuple(range(n))
        if g3 != identity or gamma == identity:
            raise NotOrderThree(f"{list(gamma)} does not have order three")
        object.__setattr__(self, "gamma2", g2)

    @property
    def n(self) -> int:
        return len(self.gamma)

    def orbit(self, v: int) -> tuple[int, int, int]:
        return (v, self.gamma[v], self.gamma2[v])

    def fixed_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.gamma[v] == v)

    def map_edge(self, e: Edge) -> Edge:
        return edge(self.gamma[e[0]], self.gamma[e[1]])


@dataclass(frozen=True)
class SymGraph:
    """A graph together with an (optional) validated 3-fold symmetry action."""

    graph: Graph
    action: C3Action | None = None

    def __post_init__(self):
        act = self.action
        if act is None:
            return
        if act.n != self.graph.n:
            raise SchemaError(
                f"symmetry acts on {act.n} vertices but the graph has {self.graph.n}"
            )
        edges = self.graph.edges
        for e in self.graph.sorted_edges:
            if act.map_edge(e) not in edges:
                raise NotAnAutomorphism(
                    f"edge {list(e)} maps to the non-edge {list(act.map_edge(e))}",
                    witness_edge=e,
                )

    def require_action(self) -> C3Action:
        if self.action is None:
            raise MissingAction("this operation needs the 3-fold symmetry (key 'c3')")
        return self.action


@dataclass(frozen=True)
class FixedCounts:
    """Counts of vertices and edges mapped to themselves by the rotation."""

    j: int
    b: int


def count_fixed(sg: SymGraph) -> FixedCounts:
    """Count fixed vertices (j) and fixed edges (b) of the action.

    An order-3 permutation cannot swap an edge's endpoints, so a fixed edge
    has both endpoints fixed; in particular j = 0 forces b = 0.
    """
    act = sg.require_action()
    j = len(act.fixed_vertices())
    b = sum(1 for e in sg.graph.edges if act.map_edge(e) == e)
    return FixedCounts(j=j, b=b)


def orbit(action: C3Action, v: int) -> tuple[int, int, int]:
    """The symmetry orbit of v in rotation order: (v, gamma v, gamma^2 v)."""
    if not 0 <= v < action.n:
        raise SchemaError(f"vertex {v} out of range")
    return action.orbit(v)


def relabel_symgraph(sg: SymGraph, perm: tuple[int, ...]) -> SymGraph:
    """Rename vertex x to perm[x]; the action is conjugated along."""
    g = sg.graph
    edges = frozenset(edge(perm[u], perm[v]) for u, v in g.edges)
    graph = Graph(g.n, edges)
    action = None
    if sg.action is not None:
        gamma = [0] * g.n
        for x in range(g.n):
            gamma[perm[x]] = perm[sg.action.gamma[x]]
        action = C3Action(tuple(gamma))
    return SymGraph(graph, action)


_ALLOWED_KEYS = {"vertices", "edges", "c3"}


def parse_graph(document: str | bytes | dict) -> SymGraph:
    """Parse and validate a graph document.

    The document is either JSON text or an already-decoded mapping with keys
    ``vertices`` (int), ``edges`` (list of pairs) and optionally ``c3`` (the
    rotation in one-line form). Without ``c3`` the result carries no action
    and only the plain count operations apply.
    """
    if isinstance(document, (str, bytes)):
        try:
            obj = json.loads(document)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"not valid JSON: {exc}") from exc
    else:
        obj = document
    if not isinstance(obj, dict):
        raise SchemaError("top-level value must be an object")
    unknown = set(obj) - _ALLOWED_KEYS
    if unknown:
        raise SchemaError(f"unknown keys: {sorted(unknown)}")
    if "vertices" not in obj or "edges" not in obj:
        raise SchemaError("keys 'vertices' and 'edges' are required")
    n = obj["vertices"]
    if type(n) is not int or n < 0:
        raise SchemaError("'vertices' must be a non-negative integer")
    raw_edges = obj["edges"]
    if not isinstance(raw_edges, list):
        raise SchemaError("'edges' must be a list of pairs")
    edges: set[Edge] = set()
    for item in raw_edges:
        if (
            not isinstance(item, (list, tuple))
            or len(item) != 2
            or any(type(x) is not int for x in item)
        ):
            raise SchemaError(f"edge entry {item!r} is not a pair of integers")
        u, v = item
        if not (0 <= u < n and 0 <= v < n):
            raise SchemaError(f"edge {item!r} out of range for n={n}")
        if u == v:
            raise LoopOrDuplicateEdge(f"loop at vertex {u}")
        e = edge(u, v)
        if e in edges:
            raise LoopOrDuplicateEdge(f"edge {list(e)} appears twice")
        edges.add(e)
    graph = Graph(n, frozenset(edges))
    action = None
    if "c3" in obj:
        raw = obj["c3"]
        if not isinstance(raw, list) or any(type(x) is not int for x in raw):
            raise SchemaError("'c3' must be a list of integers")
        if len(raw) != n:
            raise NotAPermutation(f"'c3' has length {len(raw)}, expected {n}")
        action = C3Action(tuple(raw))
    return SymGraph(graph, action)


def serialize_graph(sg: SymGraph) -> dict:
    """Inverse of parse_graph: a JSON-ready document for the graph."""
    doc: dict = {
        "vertices": sg.graph.n,
        "edges": [[u, v] for u, v in sg.graph.sorted_edges],
    }
    if sg.action is not None:
        doc["c3"] = list(sg.action.gamma)
    return doc
