import json
from math import prod

import pytest
from hypothesis import given, strategies as st

from tspread.hypergraph import (DegenerateInstance, InstanceError, PartitionFamily,
                                SpreadInstance, brute_force_edges, diagonal_matching,
                                edge_ideal, enumerate_edges, instance_from_json,
                                load_instance, maximum_matching, prepare)

from conftest import spread_instances

GAP_EDGES = [(1, 5, 8, 12), (1, 5, 8, 13), (1, 5, 9, 13), (1, 7, 9, 13), (2, 5, 8, 12),
              (2, 5, 8, 13), (2, 5, 9, 13), (2, 7, 9, 13), (3, 7, 9, 13)]


def gap_vertex():
    return SpreadInstance.from_parts([[1, 2, 3], [5, 7], [8, 9, 11], [12, 13]], [3, 2, 4])


def test_gap_vertex_edges_and_pruning():
    pruned, h = prepare(gap_vertex())
    assert sorted(h.edges) == GAP_EDGES
    assert pruned.removed == (11,)
    assert pruned.vertices == (1, 2, 3, 5, 7, 8, 9, 12, 13)


def test_validation():
    with pytest.raises(InstanceError):
        PartitionFamily(((1, 2), (2, 3)))
    with pytest.raises(InstanceError):
        SpreadInstance.from_parts([[1], [3]], [0])
    with pytest.raises(InstanceError):
        SpreadInstance.from_parts([[1], [3]], [1, 1])
    with pytest.raises(DegenerateInstance):
        prepare(SpreadInstance.from_parts([[1], [2]], [5]))


@given(spread_instances(max_vertices=12))
def test_dfs_matches_exhaustive_filter(inst):
    assert list(enumerate_edges(inst).edges) == brute_force_edges(inst)
    assert all(inst.is_spread_edge(e) for e in enumerate_edges(inst).edges)


@given(st.lists(st.integers(1, 4), min_size=1, max_size=4), st.integers(1, 3))
def test_one_spread_contiguous_is_complete_multipartite(sizes, start):
    intervals, s = [], start
    for n in sizes:
        intervals.append((s, s + n - 1))
        s += n
    inst = SpreadInstance.from_intervals(intervals, [1] * (len(sizes) - 1))
    assert len(enumerate_edges(inst).edges) == prod(sizes)


@given(spread_instances(max_vertices=12))
def test_pruning_is_sound(inst):
    # random_instance already prunes; re-preparing changes nothing
    pruned, h = prepare(inst)
    assert pruned.parts == inst.parts
    assert h.edges == enumerate_edges(inst).edges


@given(spread_instances(max_vertices=10))
def test_matching_is_a_matching_and_diagonals_fit(inst):
    _, h = prepare(inst)
    nu, witness = maximum_matching(h)
    assert len(witness) == nu
    assert len({v for e in witness for v in e}) == nu * inst.d
    diag = diagonal_matching(inst)
    assert all(inst.is_spread_edge(e) for e in diag)
    assert len(diag) == nu


def test_json_forms(tmp_path):
    a = instance_from_json({"parts": [[1, 3], [5, 5], [7, 7]], "t": [3, 2]})
    b = instance_from_json({"parts": [{"from": 1, "to": 3}, {"from": 5, "to": 5},
                                      {"from": 7, "to": 7}], "t": [3, 2]})
    c = instance_from_json({"explicit_parts": [[1, 2, 3], [5], [7]], "t": [3, 2]})
    assert a.parts == b.parts == c.parts and c.interval_form
    assert instance_from_json(a.to_json()).parts == a.parts
    f = tmp_path / "i.json"
    f.write_text(json.dumps({"parts": [[1, 2]], "t": []}))
    assert load_instance(f).parts == ((1, 2),)
    for bad in ({"t": []}, {"parts": [[3, 1]], "t": []}, {"parts": [["a", 2]], "t": []}, []):
        with pytest.raises(InstanceError):
            instance_from_json(bad)


def test_edge_ideal_is_lex_descending():
    _, h = prepare(gap_vertex())
    I = edge_ideal(h)
    assert str(I.gens[0]) == "x1*x5*x8*x12" and str(I.gens[-1]) == "x3*x7*x9*x13"
