from itertools import combinations

import numpy as np
from hypothesis import given, strategies as st

from tspread.hypergraph import SpreadInstance, edge_ideal, prepare
from tspread.monomials import Monomial, MonomialIdeal
from tspread.powers import to_matrix
from tspread.sorting import (analytic_spread, check_l_exchange, check_sortable,
                             compare_exchange_readings, depth_asymptotics,
                             exchange_binomials_literal, fiber_hilbert_check,
                             is_sorted_tuple, linear_relation_graph,
                             rees_groebner_binomials, sort_tuple, verify_exchange_binomial)

from conftest import spread_instances


def ideal_of(inst):
    pruned, h = prepare(inst)
    return pruned, edge_ideal(h)


def gap_vertex():
    return ideal_of(SpreadInstance.from_parts(
        [[1, 2, 3], [5, 7], [8, 9, 11], [12, 13]], [3, 2, 4]))


squarefree_tuples = st.integers(2, 4).flatmap(lambda d: st.lists(
    st.sets(st.integers(1, 9), min_size=d, max_size=d).map(Monomial.from_support),
    min_size=1, max_size=4))


@given(squarefree_tuples)
def test_sorting_preserves_product_and_is_idempotent(monos):
    s = sort_tuple(monos)
    prod_before = Monomial.one()
    for m in monos:
        prod_before = prod_before * m
    prod_after = Monomial.one()
    for m in s:
        prod_after = prod_after * m
    assert prod_before == prod_after
    assert sort_tuple(s) == s and is_sorted_tuple(s)


def test_non_sortable_pair_is_reported():
    ok, pair = check_sortable(MonomialIdeal.parse(["x1*x2", "x3*x4"]))
    assert not ok and {str(m) for m in pair} == {"x1*x2", "x3*x4"}


def test_gap_vertex_rees_binomials():
    _, I = gap_vertex()
    bins = rees_groebner_binomials(I)
    assert sum(b.kind == "sort" for b in bins) == 6
    assert sum(b.kind == "exchange" for b in bins) == 12
    assert "t[x1x5x9x13]*t[x2x5x8x12] - t[x1x5x8x12]*t[x2x5x9x13]" in map(str, bins)
    cmp = compare_exchange_readings(I)
    assert (cmp["primary"], cmp["literal"], cmp["agree"]) == (12, 0, False)


@given(spread_instances(max_vertices=10))
def test_binomials_are_homogeneous_relations(inst):
    _, I = ideal_of(inst)
    for b in rees_groebner_binomials(I):
        if b.kind == "sort":
            assert b.u * b.v == b.u_prime * b.v_prime
            assert is_sorted_tuple((b.u_prime, b.v_prime))
            assert not is_sorted_tuple((b.u, b.v))
        else:
            assert verify_exchange_binomial(I, b)
            assert b.u in I.gens and b.v in I.gens


@given(spread_instances(max_vertices=10))
def test_literal_reading_is_vacuous_for_squarefree(inst):
    # x_i already divides v, so x_i v / x_k is squarefree only for k = i;
    # the clause can never pick a j > i
    _, I = ideal_of(inst)
    assert exchange_binomials_literal(I) == []


@given(spread_instances(max_vertices=10))
def test_fiber_counts_and_exchange(inst):
    _, I = ideal_of(inst)
    if len(I) <= 15:
        assert all(c.ok for c in fiber_hilbert_check(I, 3))
    assert check_l_exchange(I, 2).holds


def test_gap_vertex_fiber_counts():
    _, I = gap_vertex()
    assert [(c.distinct_products, c.sorted_tuples) for c in fiber_hilbert_check(I, 3)] == [
        (9, 9), (39, 39), (119, 119)]
    assert check_l_exchange(I, 2).pairs_checked == 777


def _components_by_definition(I):
    verts = list(I.support())
    adj = {v: set() for v in verts}
    for u, w in combinations(I.gens, 2):
        for i in verts:
            for j in verts:
                if i != j and u * Monomial({i: 1}) == w * Monomial({j: 1}):
                    adj[i].add(j)
                    adj[j].add(i)
    seen, comps = set(), 0
    for v in verts:
        if v in seen:
            continue
        comps += 1
        stack = [v]
        while stack:
            x = stack.pop()
            if x not in seen:
                seen.add(x)
                stack.extend(adj[x])
    return len(verts), comps


@given(spread_instances(max_vertices=12))
def test_relation_graph_and_analytic_spread(inst):
    pruned, I = ideal_of(inst)
    g = linear_relation_graph(I)
    assert (len(g.vertices), g.component_count) == _components_by_definition(I)
    assert g.component_count == pruned.d
    # for equigenerated monomial ideals the fiber ring is toric of
    # dimension rank(exponent matrix)
    rank = np.linalg.matrix_rank(to_matrix(I.gens, I.support()).astype(float))
    assert analytic_spread(I, pruned) == rank == len(pruned.vertices) - pruned.d + 1


def test_gap_vertex_spread_and_depth_bounds():
    pruned, I = gap_vertex()
    assert analytic_spread(I, pruned) == 6
    da = depth_asymptotics(pruned)
    assert (da.limit_depth, da.dstab_bound) == (3, 5)
    assert da.provenance == "theorem-derived, not measured"


def test_relation_graph_keeps_isolated_variables():
    # a single part of singletons in the middle contributes an isolated variable
    pruned, I = ideal_of(SpreadInstance.from_parts([[1, 2], [4], [6, 7]], [1, 1]))
    g = linear_relation_graph(I)
    assert 4 in g.isolated and g.component_count == 3
