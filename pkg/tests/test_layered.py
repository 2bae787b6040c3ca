import pytest

import oracles
from romapprox.errors import DomainError
from romapprox.instances import GraphInstance, SetFamilyInstance
from romapprox.layered import (
    StageSubgraph,
    bd_is_view,
    bd_maximal_is,
    bd_vc_2approx,
    bd_vc_view,
    bounded_mult_hs,
)
from romapprox.layers import enumerate_stage
from romapprox.meter import with_meter

PATH4 = GraphInstance(4, [(1, 2), (2, 3), (3, 4)])
STAR = GraphInstance(4, [(1, 2), (1, 3), (1, 4)])


def test_bd_vc_frozen():
    assert list(bd_vc_2approx(PATH4)) == [1, 3]
    assert list(bd_vc_2approx(STAR)) == [1]
    assert list(bd_vc_2approx(GraphInstance(3, []))) == []


def test_bd_is_frozen():
    assert list(bd_maximal_is(PATH4)) == [2, 4]
    assert list(bd_maximal_is(STAR)) == [2, 3, 4]
    assert list(bd_maximal_is(GraphInstance(3, []))) == [1, 2, 3]


def test_stage_subgraph_wiring():
    view = bd_vc_view(PATH4)
    sub = StageSubgraph(view.level(0), 1)
    assert sub.out(1) == 2
    assert sub.out(2) == 1
    assert sub.out(3) == 2
    assert list(sub.in_nbrs(2)) == [1, 3]
    assert list(sub.in_nbrs(4)) == []


def test_declared_degree_validated():
    with pytest.raises(DomainError):
        list(bd_vc_2approx(STAR, max_degree=2))
    assert list(bd_vc_2approx(PATH4, max_degree=5)) == [1, 3]


def test_stage_layers_are_disjoint():
    g = GraphInstance(
        8,
        [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 1), (1, 5)],
    )
    view = bd_vc_view(g)
    seen = []
    for i in range(1, view.depth + 1):
        seen.extend(enumerate_stage(view, i, "S"))
    assert len(seen) == len(set(seen))


def test_bd_vc_random_graphs_cover_within_factor_two():
    rng = oracles.make_rng(101)
    for _ in range(60):
        n = rng.randint(1, 9)
        edges = oracles.random_graph_max_degree(rng, n, 0.35, 4)
        g = GraphInstance(n, edges)
        got = list(bd_vc_2approx(g))
        assert oracles.is_vertex_cover(edges, got)
        assert len(got) == len(set(got))
        assert len(got) <= 2 * oracles.tau(n, edges)


def test_bd_vc_modes_agree():
    rng = oracles.make_rng(102)
    for _ in range(25):
        n = rng.randint(1, 7)
        edges = oracles.random_graph_max_degree(rng, n, 0.4, 3)
        g = GraphInstance(n, edges)
        assert list(bd_vc_2approx(g)) == list(bd_vc_2approx(g, space_audit=True))


def test_bd_is_random_graphs_maximal():
    rng = oracles.make_rng(103)
    for _ in range(60):
        n = rng.randint(1, 9)
        edges = oracles.random_graph_max_degree(rng, n, 0.35, 4)
        g = GraphInstance(n, edges)
        got = list(bd_maximal_is(g))
        assert oracles.is_maximal_independent(n, edges, got)


def test_bd_is_modes_agree():
    rng = oracles.make_rng(104)
    for _ in range(25):
        n = rng.randint(1, 7)
        edges = oracles.random_graph_max_degree(rng, n, 0.4, 3)
        g = GraphInstance(n, edges)
        assert list(bd_maximal_is(g)) == list(bd_maximal_is(g, space_audit=True))


def test_bd_metered_run_balances():
    g = GraphInstance(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)])

    def body(meter):
        return list(bd_vc_2approx(g, meter=meter, space_audit=True))

    got, snap = with_meter(body)
    assert oracles.is_vertex_cover(g.edges, got)
    assert snap.charged_peak > 0
    assert snap.pass_estimate >= 2


def test_bounded_mult_hs_frozen():
    f = SetFamilyInstance(4, 2, [(1, 2), (2, 3), (3, 4)])
    assert list(bounded_mult_hs(f)) == [1, 2, 3, 4]
    singles = SetFamilyInstance(1, 1, [(1,), (1,), (1,)])
    assert list(bounded_mult_hs(singles)) == [1]
    disjoint = SetFamilyInstance(5, 2, [(1, 2), (3,), (4, 5)])
    assert list(bounded_mult_hs(disjoint)) == [1, 2, 3, 4, 5]
    empty = SetFamilyInstance(3, 2, [])
    assert list(bounded_mult_hs(empty)) == []


def test_bounded_mult_hs_random_families():
    rng = oracles.make_rng(105)
    for _ in range(50):
        n = rng.randint(1, 8)
        m = rng.randint(0, 6)
        d = rng.randint(1, 3)
        sets = [
            tuple(rng.sample(range(1, n + 1), rng.randint(1, min(d, n))))
            for _ in range(m)
        ]
        f = SetFamilyInstance(n, d, sets)
        got = list(bounded_mult_hs(f))
        assert oracles.hits_all(sets, got)
        assert len(got) == len(set(got))
        assert len(got) <= d * oracles.min_hitting_size(sets)


def test_bounded_mult_hs_modes_agree():
    rng = oracles.make_rng(106)
    for _ in range(15):
        n = rng.randint(1, 6)
        m = rng.randint(0, 4)
        sets = [
            tuple(rng.sample(range(1, n + 1), rng.randint(1, min(2, n))))
            for _ in range(m)
        ]
        f = SetFamilyInstance(n, 2, sets)
        assert list(bounded_mult_hs(f)) == list(bounded_mult_hs(f, space_audit=True))


def test_bounded_mult_hs_declared_multiplicity():
    f = SetFamilyInstance(3, 2, [(1, 2), (2, 3)])
    with pytest.raises(DomainError):
        list(bounded_mult_hs(f, max_multiplicity=1))
    assert list(bounded_mult_hs(f, max_multiplicity=4)) == list(bounded_mult_hs(f))
