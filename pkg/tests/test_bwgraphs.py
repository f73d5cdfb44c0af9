import json

import pytest

from ratsign import bwgraphs as bw
from ratsign.verify import fixture_graphs


def test_example_signed_sums():
    assert bw.signed_sums((3, 2, 1, 1), (3, 2, 2)) == (2, 2)


def test_example_graph_signs():
    top, bottom = fixture_graphs()
    assert bw.real_sequences(top) == ((1, 3, 2, 2, 2, 1), (4, 3, 2, 2, 6))
    assert bw.sign(top) == bw.SignBreakdown(12, 2, 1)
    assert bw.real_sequences(bottom) == ((3, 4), (2, 2, 3))
    assert bw.sign(bottom) == bw.SignBreakdown(0, 1, -1)


def test_smallest_type_has_two_graphs():
    graphs = bw.enumerate_graphs((2,), (2,))
    assert len(graphs) == 2
    assert {G.first_color for G in graphs} == {bw.WHITE, bw.BLACK}
    assert all(bw.sign(G) == bw.SignBreakdown(0, 1, -1) for G in graphs)


def test_mismatched_sizes_are_rejected():
    with pytest.raises(ValueError):
        bw.enumerate_graphs((3,), (2,))


@pytest.mark.parametrize("d", range(2, 7))
def test_invariance(d):
    assert bw.verify_invariance(d) == []


@pytest.mark.parametrize("d", range(2, 7))
def test_enumerated_graphs_are_valid_and_distinct(d):
    for lw in bw.partitions(d):
        for lb in bw.partitions(d):
            graphs = bw.enumerate_graphs(lw, lb)
            assert len(set(graphs)) == len(graphs)
            for G in graphs:
                assert bw.check_invariants(G) == []
                assert G.type() == (lw, lb)


@pytest.mark.parametrize("d", range(2, 8))
def test_flip_and_rotation_properties(d):
    assert bw.flip_rotation_violations(d) == []


def test_rotate_needs_near_symmetry():
    top, _ = fixture_graphs()
    assert not bw.is_nearly_symmetric(top)
    with pytest.raises(bw.PreconditionError):
        bw.rotate(top)
    symmetric = next(G for G in bw.all_graphs(4) if bw.is_nearly_symmetric(G))
    with pytest.raises(bw.PreconditionError):
        bw.symmetrize(symmetric)


def test_flip_rejects_different_vertex_types():
    top, _ = fixture_graphs()
    with pytest.raises(bw.TypeMismatchError):
        bw.flip(top, 1, 2)


def test_reverse_twice_is_identity():
    for G in bw.all_graphs(5):
        assert bw.reverse(bw.reverse(G)) == G


def test_graph_json_roundtrip():
    for G in bw.all_graphs(5):
        text = json.dumps(G.to_json(), sort_keys=True)
        assert bw.RealBwGraph.from_json(json.loads(text)) == G


def test_invalid_graphs_are_rejected():
    with pytest.raises(ValueError):
        bw.RealBwGraph(bw.WHITE, ((), ()), 2)
    with pytest.raises(ValueError):
        bw.RealBwGraph(bw.WHITE, ((bw.PlaneTree(bw.WHITE),), ()), 1)
    with pytest.raises(ValueError):
        bw.PlaneTree(bw.WHITE, (bw.PlaneTree(bw.WHITE),))


def test_partitions():
    assert list(bw.partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
