import random

import pytest

from c3rig import (
    DELTA_EXTENSION,
    EDGE_SPLIT,
    VERTEX_ADDITION,
    ConstructionSequence,
    Move,
    apply_vertex_addition,
    canonical_base,
    check_c3_isostatic,
    count_fixed,
    extract_sequence,
    iter_replay,
    laman_check,
    parse_graph,
    reduce_once,
    relabel_symgraph,
    replay_sequence,
)
from c3rig.errors import (
    AtBaseCase,
    InvalidAnchor,
    MissingAction,
    MissingEdge,
    NotIsostatic,
)
from tests.corpus import (
    k13_hub,
    k3,
    k33,
    octahedron,
    perturb_edge_swap,
    prism,
    random_tight_symgraph,
)


def test_check_k3():
    verdict = check_c3_isostatic(k3())
    assert verdict.isostatic
    assert verdict.reasons == ()


def test_check_prism():
    assert check_c3_isostatic(prism()).isostatic


def test_check_fixed_hub():
    verdict = check_c3_isostatic(k13_hub())
    assert not verdict.isostatic
    assert "fixed_vertex" in verdict.reasons
    assert verdict.witness == 3


def test_check_hexagon_with_hub():
    # hexagon plus a hub tied to alternating corners; the hub is fixed
    sg = parse_graph(
        {
            "vertices": 7,
            "edges": [[i, (i + 1) % 6] for i in range(6)] + [[6, 0], [6, 2], [6, 4]],
            "c3": [2, 3, 4, 5, 0, 1, 6],
        }
    )
    verdict = check_c3_isostatic(sg)
    assert not verdict.isostatic
    assert "fixed_vertex" in verdict.reasons


def test_check_octahedron_overcount():
    verdict = check_c3_isostatic(octahedron())
    assert not verdict.isostatic
    assert "count" in verdict.reasons


def test_check_requires_action():
    with pytest.raises(MissingAction):
        check_c3_isostatic(parse_graph('{"vertices":3, "edges":[[0,1],[1,2],[2,0]]}'))


def test_reduce_prism_to_triangle():
    reduced, move = reduce_once(prism())
    assert reduced == canonical_base()
    assert move == Move(DELTA_EXTENSION, (0,), (3, 4, 5))


def test_reduce_vertex_addition_shape():
    sg = apply_vertex_addition(k3(), 0, 1)
    reduced, move = reduce_once(sg)
    assert reduced == canonical_base()
    assert move == Move(VERTEX_ADDITION, (0, 1), (3, 4, 5))


def test_reduce_k33_via_edge_split():
    reduced, move = reduce_once(k33())
    assert reduced == canonical_base()
    assert move.kind == EDGE_SPLIT
    assert move.new_vertices == (3, 4, 5)


def test_reduce_rejects_base_case_and_bad_graphs():
    with pytest.raises(AtBaseCase):
        reduce_once(k3())
    with pytest.raises(NotIsostatic):
        reduce_once(octahedron())
    with pytest.raises(NotIsostatic):
        reduce_once(k13_hub())


def test_extract_k3_is_empty():
    seq = extract_sequence(k3())
    assert seq.moves == ()
    assert replay_sequence(seq) == k3()


def test_extract_prism():
    seq = extract_sequence(prism())
    assert [m.kind for m in seq.moves] == [DELTA_EXTENSION]
    assert relabel_symgraph(replay_sequence(seq), seq.relabeling) == prism()


def test_extract_k33():
    seq = extract_sequence(k33())
    assert [m.kind for m in seq.moves] == [EDGE_SPLIT]
    assert relabel_symgraph(replay_sequence(seq), seq.relabeling) == k33()


def test_extract_handles_reversed_rotation():
    # same triangle, opposite rotation: the base normalization absorbs it
    sg = parse_graph('{"vertices":3, "edges":[[0,1],[1,2],[2,0]], "c3":[2,0,1]}')
    seq = extract_sequence(sg)
    assert seq.moves == ()
    assert seq.relabeling == (0, 2, 1)
    assert relabel_symgraph(replay_sequence(seq), seq.relabeling) == sg


def test_extract_round_trip_on_corpus():
    rng = random.Random(5150)
    for n in (6, 9, 12, 15):
        for _ in range(8):
            sg = random_tight_symgraph(rng, n)
            seq = extract_sequence(sg)
            assert len(seq.moves) == (n - 3) // 3
            assert relabel_symgraph(replay_sequence(seq), seq.relabeling) == sg
            for step in iter_replay(seq):
                assert laman_check(step.graph)
                assert count_fixed(step).j == 0


def test_extraction_survives_arbitrary_labelings():
    # corpus builders always append orbits at the top indices; shuffling
    # the labels exercises extraction on arbitrary orbit index patterns
    rng = random.Random(31337)
    for _ in range(15):
        sg = random_tight_symgraph(rng, 3 * rng.randint(2, 6))
        perm = list(range(sg.graph.n))
        rng.shuffle(perm)
        moved = relabel_symgraph(sg, tuple(perm))
        seq = extract_sequence(moved)
        assert relabel_symgraph(replay_sequence(seq), seq.relabeling) == moved


def test_tight_graph_with_fixed_vertices_fails_symmetry_only():
    # both plain counts hold, so the fixed vertex is the single obstacle
    sg = parse_graph(
        {
            "vertices": 5,
            "edges": [[3, 4], [3, 0], [3, 1], [3, 2], [4, 0], [4, 1], [4, 2]],
            "c3": [1, 2, 0, 3, 4],
        }
    )
    assert laman_check(sg.graph)
    verdict = check_c3_isostatic(sg)
    assert verdict.reasons == ("fixed_vertex",)
    assert verdict.witness == 3


def test_decision_matches_extraction_on_perturbed_corpus():
    rng = random.Random(616)
    for _ in range(25):
        sg = perturb_edge_swap(rng, random_tight_symgraph(rng, 3 * rng.randint(2, 5)))
        verdict = check_c3_isostatic(sg).isostatic
        try:
            extract_sequence(sg)
            extracted = True
        except NotIsostatic:
            extracted = False
        assert verdict == extracted


def test_all_reduction_shapes_occur_in_corpus():
    # the extractor has three forward move kinds; a fixed corpus must hit
    # every one, or a precedence regression could hide a dead branch
    rng = random.Random(321)
    kinds = {VERTEX_ADDITION: 0, EDGE_SPLIT: 0, DELTA_EXTENSION: 0}
    for _ in range(40):
        sg = random_tight_symgraph(rng, 3 * rng.randint(2, 8))
        for move in extract_sequence(sg).moves:
            kinds[move.kind] += 1
    assert all(count > 0 for count in kinds.values()), kinds


def test_decision_against_independent_oracle():
    # brute-force subset enumeration plus a direct fixed scan; no pebble
    # game or reduction machinery on this side
    from c3rig import brute_force_laman

    def oracle(sg):
        free = all(sg.action.gamma[v] != v for v in range(sg.graph.n))
        return brute_force_laman(sg.graph) and free

    rng = random.Random(271828)
    for _ in range(40):
        sg = random_tight_symgraph(rng, 3 * rng.randint(2, 4))
        cases = [sg, perturb_edge_swap(rng, sg)]
        perm = list(range(sg.graph.n))
        rng.shuffle(perm)
        cases.append(relabel_symgraph(sg, tuple(perm)))
        for case in cases:
            assert check_c3_isostatic(case).isostatic == oracle(case)
    assert not oracle(k13_hub())
    assert not oracle(octahedron())


def test_sequence_base_is_pinned():
    with pytest.raises(InvalidAnchor):
        ConstructionSequence(prism(), ())


def test_replay_propagates_move_errors():
    bad = ConstructionSequence(
        canonical_base(), (Move(EDGE_SPLIT, (0, 1, 5), (3, 4, 5)),)
    )
    with pytest.raises(InvalidAnchor):
        replay_sequence(bad)
    missing = ConstructionSequence(
        canonical_base(),
        (
            Move(VERTEX_ADDITION, (0, 1), (3, 4, 5)),
            Move(EDGE_SPLIT, (3, 4, 0), (6, 7, 8)),
        ),
    )
    with pytest.raises(MissingEdge):
        replay_sequence(missing)
