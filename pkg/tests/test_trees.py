import random

from c3rig import (
    TreePartition,
    build_tree_partition,
    extract_sequence,
    relabel_partition,
    relabel_symgraph,
    replay_sequence,
    verify_tree_partition,
)
from tests.corpus import k3, k33, perturb_edge_swap, prism, random_tight_symgraph

PRISM_PARTITION = TreePartition(
    (
        frozenset({(0, 1), (0, 3), (3, 4)}),
        frozenset({(1, 2), (1, 4), (4, 5)}),
        frozenset({(0, 2), (2, 5), (3, 5)}),
    )
)


def test_base_partition():
    seq = extract_sequence(k3())
    tp = build_tree_partition(seq)
    assert tp.trees == (frozenset({(0, 1)}), frozenset({(1, 2)}), frozenset({(0, 2)}))
    assert verify_tree_partition(k3(), tp).ok


def test_prism_partition_matches_update_rules():
    seq = extract_sequence(prism())
    tp = relabel_partition(build_tree_partition(seq), seq.relabeling)
    assert tp == PRISM_PARTITION
    report = verify_tree_partition(prism(), tp)
    assert report.ok
    assert report.failures() == ()


def test_k33_partition():
    seq = extract_sequence(k33())
    tp = build_tree_partition(seq)
    assert tp.trees == (
        frozenset({(0, 3), (1, 3), (1, 5)}),
        frozenset({(1, 4), (2, 4), (2, 3)}),
        frozenset({(2, 5), (0, 5), (0, 4)}),
    )
    assert verify_tree_partition(replay_sequence(seq), tp).ok
    relabeled = relabel_partition(tp, seq.relabeling)
    assert verify_tree_partition(k33(), relabeled).ok


def test_swapped_spokes_break_equivariance():
    trees = (
        frozenset({(0, 1), (1, 4), (3, 4)}),
        frozenset({(1, 2), (0, 3), (4, 5)}),
        frozenset({(0, 2), (2, 5), (3, 5)}),
    )
    report = verify_tree_partition(prism(), TreePartition(trees))
    assert report.partitions_edges
    assert not report.rotation_cycles_trees
    assert not report.ok


def test_missing_edge_breaks_partition():
    trees = (
        frozenset({(0, 1), (0, 3)}),
        frozenset({(1, 2), (1, 4), (4, 5)}),
        frozenset({(0, 2), (2, 5), (3, 5)}),
    )
    assert not verify_tree_partition(prism(), TreePartition(trees)).partitions_edges


def test_cycle_is_not_a_tree():
    sg = prism()
    trees = (
        frozenset({(0, 1), (1, 2), (0, 2)}),
        frozenset({(3, 4), (4, 5), (3, 5)}),
        frozenset({(0, 3), (1, 4), (2, 5)}),
    )
    report = verify_tree_partition(sg, TreePartition(trees))
    assert report.partitions_edges
    assert not report.trees_are_trees


def test_overbraced_graph_fails_properness():
    # swap one edge orbit so a symmetric subgraph goes over the count; the
    # carried-over partition then fails the properness leg
    rng = random.Random(13)
    sg = random_tight_symgraph(rng, 9)
    seq = extract_sequence(sg)
    tp = relabel_partition(build_tree_partition(seq), seq.relabeling)
    assert verify_tree_partition(sg, tp).proper
    for _ in range(100):
        swapped = perturb_edge_swap(rng, sg)
        if not verify_tree_partition(swapped, tp).proper:
            break
    else:
        raise AssertionError("no perturbation broke sparsity")


def test_partition_implies_global_count():
    rng = random.Random(45)
    for _ in range(10):
        sg = random_tight_symgraph(rng, 3 * rng.randint(2, 5))
        seq = extract_sequence(sg)
        tp = build_tree_partition(seq)
        total = sum(len(t) for t in tp.trees)
        assert total == 2 * sg.graph.n - 3


def test_corpus_partitions_verify():
    rng = random.Random(8080)
    for n in (6, 9, 12, 15):
        for _ in range(6):
            sg = random_tight_symgraph(rng, n)
            seq = extract_sequence(sg)
            tp = build_tree_partition(seq)
            assert verify_tree_partition(replay_sequence(seq), tp).ok
            assert verify_tree_partition(
                sg, relabel_partition(tp, seq.relabeling)
            ).ok


def test_relabel_partition_round_trip():
    perm = (3, 4, 5, 0, 1, 2)
    inverse = (3, 4, 5, 0, 1, 2)
    moved = relabel_partition(PRISM_PARTITION, perm)
    assert relabel_partition(moved, inverse) == PRISM_PARTITION
    assert verify_tree_partition(relabel_symgraph(prism(), perm), moved).ok


def test_json_shape():
    doc = PRISM_PARTITION.as_json_dict()
    assert set(doc) == {"T0", "T1", "T2"}
    assert doc["T0"] == [[0, 1], [0, 3], [3, 4]]
