"""Symmetric isostaticity decision, symmetric moves, and construction sequences.

A graph with a 3-fold symmetry and n >= 3 vertices is generically isostatic
under that symmetry exactly when it is (2,3)-tight and the rotation fixes no
vertex. Such graphs are generated from the triangle base by three symmetric
moves, each adding one full vertex orbit:

* vertex addition: a new orbit of valence-2 vertices hung on an anchor pair,
* edge split: an edge orbit is removed, a new orbit subdivides it against a
  third anchor vertex,
* delta extension: a new triangle orbit attached by one spoke per vertex.

``extract_sequence`` inverts these moves down to the triangle and returns a
replayable certificate; ``replay_sequence`` rebuilds the graph, validating
every intermediate step.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import (
    AtBaseCase,
    DegenerateMove,
    FixedAnchor,
    IntermediateNotTight,
    InternalInvariantBroken,
    InvalidAnchor,
    MissingEdge,
    NotIsostatic,
    TooFewVertices,
)
from .graphs import C3Action, Edge, Graph, SymGraph, count_fixed, edge, relabel_symgraph
from .pebble import laman_check, pebble_sparsity

VERTEX_ADDITION = "VertexAddition"
EDGE_SPLIT = "EdgeSplit"
DELTA_EXTENSION = "DeltaExtension"

_KINDS = (VERTEX_ADDITION, EDGE_SPLIT, DELTA_EXTENSION)


@dataclass(frozen=True)
class Move:
    """One symmetric move; the new orbit always takes the next three indices."""

    kind: str
    anchors: tuple[int, ...]
    new_vertices: tuple[int, int, int]

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise InvalidAnchor(f"unknown move kind {self.kind!r}")

    def as_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "anchors": list(self.anchors),
            "new": list(self.new_vertices),
        }


@dataclass(frozen=True)
class C3Verdict:
    """Outcome of the symmetric isostaticity test, with failure reasons."""

    isostatic: bool
    reasons: tuple[str, ...]
    witness: tuple[int, ...] | int | None


def check_c3_isostatic(sg: SymGraph) -> C3Verdict:
    """Tight counts plus no fixed vertex; reasons name what failed."""
    act = sg.require_action()
    if sg.graph.n < 3:
        raise TooFewVertices(f"need at least 3 vertices, got {sg.graph.n}")
    report = pebble_sparsity(sg.graph)
    reasons: list[str] = []
    witness: tuple[int, ...] | int | None = None
    if report.edge_count != report.target:
        reasons.append("count")
    if not report.is_sparse:
        reasons.append("subgraph_sparsity")
        witness = report.witness
    fixed = act.fixed_vertices()
    if fixed:
        reasons.append("fixed_vertex")
        if witness is None:
            witness = fixed[0]
    return C3Verdict(isostatic=not reasons, reasons=tuple(reasons), witness=witness)


def _extend_action(act: C3Action) -> C3Action:
    n = act.n
    return C3Action(act.gamma + (n + 1, n + 2, n))


def apply_vertex_addition(sg: SymGraph, v1: int, v2: int) -> SymGraph:
    """Hang a new orbit of valence-2 vertices on the anchor pair (v1, v2)."""
    act = sg.require_action()
    n = sg.graph.n
    if not (0 <= v1 < n and 0 <= v2 < n):
        raise InvalidAnchor(f"anchors ({v1}, {v2}) out of range")
    if v1 == v2:
        raise InvalidAnchor("anchor vertices must be distinct")
    v, w, z = n, n + 1, n + 2
    gamma, gamma2 = act.gamma, act.gamma2
    new_edges = {
        edge(v, v1),
        edge(v, v2),
        edge(w, gamma[v1]),
        edge(w, gamma[v2]),
        edge(z, gamma2[v1]),
        edge(z, gamma2[v2]),
    }
    if len(new_edges) != 6:
        raise DegenerateMove("the six new edges are not pairwise distinct")
    graph = Graph(n + 3, sg.graph.edges | frozenset(new_edges))
    return SymGraph(graph, _extend_action(act))


def apply_edge_split(sg: SymGraph, v1: int, v2: int, v3: int) -> SymGraph:
    """Remove the edge orbit of {v1, v2}; join a new orbit to v1, v2, v3."""
    act = sg.require_action()
    n = sg.graph.n
    if not all(0 <= x < n for x in (v1, v2, v3)):
        raise InvalidAnchor(f"anchors ({v1}, {v2}, {v3}) out of range")
    if not sg.graph.has_edge(v1, v2):
        raise MissingEdge(f"({v1}, {v2}) is not an edge")
    if v3 == v1 or v3 == v2:
        raise InvalidAnchor("the third anchor must differ from the split edge")
    gamma, gamma2 = act.gamma, act.gamma2
    removed = {edge(v1, v2), edge(gamma[v1], gamma[v2]), edge(gamma2[v1], gamma2[v2])}
    if len(removed) != 3:
        raise DegenerateMove("the split edge is fixed by the rotation")
    v, w, z = n, n + 1, n + 2
    added = set()
    for i in (v1, v2, v3):
        added.add(edge(v, i))
        added.add(edge(w, gamma[i]))
        added.add(edge(z, gamma2[i]))
    graph = Graph(n + 3, (sg.graph.edges - frozenset(removed)) | frozenset(added))
    return SymGraph(graph, _extend_action(act))


def apply_delta_extension(sg: SymGraph, v0: int) -> SymGraph:
    """Attach a new triangle orbit by one spoke to each vertex of v0's orbit."""
    act = sg.require_action()
    n = sg.graph.n
    if not 0 <= v0 < n:
        raise InvalidAnchor(f"anchor {v0} out of range")
    if act.gamma[v0] == v0:
        raise FixedAnchor(f"vertex {v0} is fixed by the rotation")
    v, w, z = n, n + 1, n + 2
    added = {
        edge(v, w),
        edge(w, z),
        edge(z, v),
        edge(v, v0),
        edge(w, act.gamma[v0]),
        edge(z, act.gamma2[v0]),
    }
    graph = Graph(n + 3, sg.graph.edges | frozenset(added))
    return SymGraph(graph, _extend_action(act))


def apply_move(sg: SymGraph, move: Move) -> SymGraph:
    n = sg.graph.n
    if move.new_vertices != (n, n + 1, n + 2):
        raise InvalidAnchor(
            f"move expects new vertices {move.new_vertices}, graph has {n} vertices"
        )
    if move.kind == VERTEX_ADDITION:
        return apply_vertex_addition(sg, *move.anchors)
    if move.kind == EDGE_SPLIT:
        return apply_edge_split(sg, *move.anchors)
    return apply_delta_extension(sg, *move.anchors)


def canonical_base() -> SymGraph:
    """The triangle on 0, 1, 2 with the rotation 0 -> 1 -> 2 -> 0."""
    graph = Graph(3, frozenset({(0, 1), (1, 2), (0, 2)}))
    return SymGraph(graph, C3Action((1, 2, 0)))


@dataclass(frozen=True)
class ConstructionSequence:
    """A replayable build recipe from the triangle base.

    ``relabeling`` maps each replay-side vertex to the vertex of the graph
    the sequence was extracted from, so the round trip can be checked by a
    direct relabel instead of an isomorphism search.
    """

    base: SymGraph
    moves: tuple[Move, ...]
    relabeling: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.base != canonical_base():
            raise InvalidAnchor("sequence base must be the canonical triangle")

    def as_json_dict(self) -> dict:
        from .graphs import serialize_graph

        doc = {
            "base": serialize_graph(self.base),
            "moves": [m.as_json_dict() for m in self.moves],
        }
        if self.relabeling is not None:
            doc["relabeling"] = list(self.relabeling)
        return doc


def iter_replay(seq: ConstructionSequence):
    """Yield the graph after each move, validating tightness and symmetry."""
    sg = seq.base
    for move in seq.moves:
        sg = apply_move(sg, move)
        if not laman_check(sg.graph) or count_fixed(sg).j != 0:
            raise IntermediateNotTight(
                f"replay produced a bad intermediate after {move.kind}"
            )
        yield sg


def replay_sequence(seq: ConstructionSequence) -> SymGraph:
    sg = seq.base
    for sg in iter_replay(seq):
        pass
    return sg


def _compact(
    sg: SymGraph, removed: tuple[int, int, int], added_edges: set[Edge]
) -> tuple[SymGraph, list[int], list[int]]:
    """Drop an orbit, renumber the survivors, splice in replacement edges.

    Returns the reduced graph, the old->new map (only meaningful on
    survivors) and the survivor list in ascending order.
    """
    g = sg.graph
    act = sg.action
    gone = set(removed)
    survivors = [x for x in range(g.n) if x not in gone]
    down = [-1] * g.n
    for i, old in enumerate(survivors):
        down[old] = i
    kept = {
        (down[u], down[v])
        for u, v in g.edges
        if u not in gone and v not in gone
    }
    for u, v in added_edges:
        kept.add(edge(down[u], down[v]))
    gamma = [0] * len(survivors)
    for old in survivors:
        gamma[down[old]] = down[act.gamma[old]]
    reduced = SymGraph(Graph(len(survivors), frozenset(kept)), C3Action(tuple(gamma)))
    return reduced, down, survivors


def _reduce_step(sg: SymGraph) -> tuple[SymGraph, Move, tuple[int, ...]]:
    """One inverse move, chosen deterministically.

    Returns the reduced graph, the forward move that rebuilds the input from
    it, and the vertex map from the rebuilt labels back to the input labels
    (survivors first in order, then the removed orbit in rotation order).
    """
    verdict = check_c3_isostatic(sg)
    if not verdict.isostatic:
        raise NotIsostatic(f"failed conditions: {', '.join(verdict.reasons)}")
    g = sg.graph
    act = sg.action
    n = g.n
    if n == 3:
        raise AtBaseCase("the triangle base cannot be reduced")
    gamma, gamma2 = act.gamma, act.gamma2
    deg = g.degrees()
    adj = g.adjacency()

    low2 = [x for x in range(n) if deg[x] == 2]
    if low2:
        v = low2[0]
        orbit = (v, gamma[v], gamma2[v])
        if any(g.has_edge(a, b) for a, b in combinations(orbit, 2)):
            raise InternalInvariantBroken("valence-2 orbit is not independent")
        v1, v2 = sorted(adj[v])
        reduced, down, survivors = _compact(sg, orbit, set())
        move = Move(VERTEX_ADDITION, (down[v1], down[v2]), (n - 3, n - 2, n - 1))
        return _finish_reduction(sg, reduced, move, survivors, orbit)

    low3 = [x for x in range(n) if deg[x] == 3]
    if not low3:
        raise InternalInvariantBroken("tight graph without a valence-2 or -3 vertex")
    v = low3[0]
    orbit = (v, gamma[v], gamma2[v])
    neighbors = sorted(adj[v])

    if gamma[v] in adj[v]:
        # The orbit spans a triangle: undo a delta extension on the one
        # neighbor outside the orbit.
        rest = [x for x in neighbors if x not in orbit]
        if len(rest) != 1:
            raise InternalInvariantBroken("triangle orbit with malformed spokes")
        v0 = rest[0]
        reduced, down, survivors = _compact(sg, orbit, set())
        move = Move(DELTA_EXTENSION, (down[v0],), (n - 3, n - 2, n - 1))
        return _finish_reduction(sg, reduced, move, survivors, orbit)

    rep = neighbors[0]
    rep_orbit = {rep, gamma[rep], gamma2[rep]}
    triangle = {
        edge(rep, gamma[rep]),
        edge(gamma[rep], gamma2[rep]),
        edge(gamma2[rep], rep),
    }
    if set(neighbors) == rep_orbit and not (triangle & g.edges):
        # The whole neighborhood is one orbit: undo an edge split whose
        # removed orbit is the triangle on that orbit. A tight graph can
        # never already hold one of the triangle edges here, but if it did
        # the tried-pair reduction below still applies, so fall through.
        reduced, down, survivors = _compact(sg, orbit, triangle)
        a, b = sorted((down[rep], down[gamma[rep]]))
        move = Move(EDGE_SPLIT, (a, b, down[gamma2[rep]]), (n - 3, n - 2, n - 1))
        return _finish_reduction(sg, reduced, move, survivors, orbit)

    # Tried-pair reduction: find the first anchor pair whose re-knit of the
    # single-vertex deletion is tight, then remove the whole orbit and add
    # that pair's edge orbit.
    chosen = None
    for a, b in combinations(neighbors, 2):
        if g.has_edge(a, b):
            continue
        if _tight_after_revertex(g, v, a, b):
            chosen = (a, b)
            break
    if chosen is None:
        raise InternalInvariantBroken("no anchor pair re-knits the deletion")
    a, b = chosen
    c = next(x for x in neighbors if x not in chosen)
    pair_orbit = {edge(a, b), edge(gamma[a], gamma[b]), edge(gamma2[a], gamma2[b])}
    if len(pair_orbit) != 3 or (pair_orbit & (g.edges - _orbit_edges(g, act, orbit))):
        raise InternalInvariantBroken("chosen pair orbit collides with the graph")
    reduced, down, survivors = _compact(sg, orbit, pair_orbit)
    move = Move(EDGE_SPLIT, (down[a], down[b], down[c]), (n - 3, n - 2, n - 1))
    return _finish_reduction(sg, reduced, move, survivors, orbit)


def _orbit_edges(g: Graph, act: C3Action, orbit: tuple[int, int, int]) -> frozenset[Edge]:
    gone = set(orbit)
    return frozenset(e for e in g.edges if e[0] in gone or e[1] in gone)


def _tight_after_revertex(g: Graph, v: int, a: int, b: int) -> bool:
    # Delete the single vertex v and add {a, b}; test tightness.
    down = [0] * g.n
    i = 0
    for x in range(g.n):
        if x != v:
            down[x] = i
            i += 1
    kept = {(down[u], down[w]) for u, w in g.edges if u != v and w != v}
    kept.add(edge(down[a], down[b]))
    return laman_check(Graph(g.n - 1, frozenset(kept)))


def _finish_reduction(sg, reduced, move, survivors, orbit):
    if not check_c3_isostatic(reduced).isostatic:
        raise InternalInvariantBroken("reduction lost isostaticity")
    iso = tuple(survivors) + tuple(orbit)
    return reduced, move, iso


def reduce_once(sg: SymGraph) -> tuple[SymGraph, Move]:
    """Peel off one orbit; returns the smaller graph and the forward move."""
    reduced, move, _ = _reduce_step(sg)
    return reduced, move


def extract_sequence(sg: SymGraph) -> ConstructionSequence:
    """Reduce to the triangle, reverse the moves, verify the round trip."""
    steps = []
    cur = sg
    verdict = check_c3_isostatic(cur)
    if not verdict.isostatic:
        raise NotIsostatic(f"failed conditions: {', '.join(verdict.reasons)}")
    while cur.graph.n > 3:
        cur, move, iso = _reduce_step(cur)
        steps.append((move, iso))

    # Normalize the reduced triangle onto the canonical base; the only other
    # possible action is the opposite rotation, absorbed by swapping 1 and 2.
    psi = [0, 1, 2] if cur.action.gamma == (1, 2, 0) else [0, 2, 1]

    moves = []
    for move, iso in reversed(steps):
        k = len(psi)
        if move.new_vertices != (k, k + 1, k + 2):
            raise InternalInvariantBroken("reduction sizes are inconsistent")
        inv = [0] * k
        for x, y in enumerate(psi):
            inv[y] = x
        moves.append(Move(move.kind, tuple(inv[a] for a in move.anchors), (k, k + 1, k + 2)))
        psi = [iso[y] for y in psi] + [iso[k], iso[k + 1], iso[k + 2]]

    seq = ConstructionSequence(canonical_base(), tuple(moves), tuple(psi))
    if relabel_symgraph(replay_sequence(seq), seq.relabeling) != sg:
        raise InternalInvariantBroken("round trip does not reproduce the input")
    return seq
