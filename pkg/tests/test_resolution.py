from math import comb

import pytest
from hypothesis import given

from tspread.hypergraph import SpreadInstance, edge_ideal, prepare
from tspread.monomials import MonomialIdeal
from tspread.resolution import (LinearQuotientsFailure, UnsupportedIdeal, betti_table,
                                set_u_closed_form, set_u_oracle, verify_linear_quotients)

from conftest import spread_instances


def gap_vertex():
    pruned, h = prepare(SpreadInstance.from_parts(
        [[1, 2, 3], [5, 7], [8, 9, 11], [12, 13]], [3, 2, 4]))
    return pruned, edge_ideal(h)


def test_gap_vertex_betti_table_from_prefix_colons():
    pruned, I = gap_vertex()
    oracle = betti_table(I, route="oracle")
    closed = betti_table(I, pruned, route="closed")
    assert oracle.beta == closed.beta == [9, 12, 4]
    assert sorted(oracle.q_of_u.values()) == [0, 1, 1, 1, 1, 2, 2, 2, 2]
    assert (oracle.q_I, oracle.pd_SmodI, oracle.depth_SmodI) == (2, 3, 6)


@given(spread_instances(max_vertices=12))
def test_closed_form_set_u_matches_colon(inst):
    _, h = prepare(inst)
    I = edge_ideal(h)
    wit = verify_linear_quotients(I)
    assert wit.linear
    for u, s in zip(wit.ordering, wit.colon_sets):
        assert set_u_closed_form(u, inst) == set_u_oracle(I, u) == s


@given(spread_instances(max_vertices=12))
def test_betti_identities(inst):
    _, h = prepare(inst)
    I = edge_ideal(h)
    b = betti_table(I, inst)
    assert b.beta[0] == len(I)
    assert b.depth_SmodI + b.pd_SmodI == len(inst.vertices)
    # alternating sum of the linear strand: the Hilbert-series numerator at 1
    assert sum((-1) ** i * bi for i, bi in enumerate(b.beta)) == sum(
        (-1) ** i * comb(q, i) for q in b.q_of_u.values() for i in range(q + 1))


def test_failure_witness_for_nonlinear_quotients():
    I = MonomialIdeal.parse(["x1*x2", "x3*x4"])
    wit = verify_linear_quotients(I)
    assert not wit.linear and isinstance(wit.failure, LinearQuotientsFailure)
    with pytest.raises(LinearQuotientsFailure):
        betti_table(I, route="oracle")
    with pytest.raises(UnsupportedIdeal):
        betti_table(MonomialIdeal.parse(["x1", "x2*x3"]))
