import pytest

import oracles
from romapprox.errors import DomainError
from romapprox.instances import DigraphInstance, GraphInstance
from romapprox.meter import WorkspaceMeter, with_meter
from romapprox.treefunc import (
    EulerTourCursor,
    RootedTreeView,
    component_rep,
    functional_max_is,
    functional_min_vc,
    tree_max_is,
    tree_min_vc,
    tree_vertices,
)


def path(n):
    return GraphInstance(n, [(i, i + 1) for i in range(1, n)])


def test_tree_min_vc_frozen():
    assert list(tree_min_vc(path(4), root=1)) == [1, 3]
    assert list(tree_min_vc(path(4), root=2)) == [2, 3]
    assert list(tree_max_is(path(4), root=1)) == [2, 4]
    assert list(tree_min_vc(GraphInstance(1, []))) == []
    assert list(tree_min_vc(GraphInstance(2, [(1, 2)]), root=1)) == [1]
    assert list(tree_min_vc(GraphInstance(2, [(1, 2)]), root=2)) == [2]


def test_tree_min_vc_leaf_first_child_regression():
    # 1-2, 2-3 (leaf), 2-4, 4-5: vertex 2 sees leaf 3 before internal 4.
    t = GraphInstance(5, [(1, 2), (2, 3), (2, 4), (4, 5)])
    got = list(tree_min_vc(t, root=1))
    assert got == [2, 4]
    assert oracles.is_vertex_cover(t.edges, got)
    assert len(got) == oracles.tau(5, t.edges)


def test_star_any_root_is_optimal():
    star = GraphInstance(5, [(1, 2), (1, 3), (1, 4), (1, 5)])
    assert list(tree_min_vc(star, root=1)) == [1]
    assert list(tree_min_vc(star, root=2)) == [1]


def test_tree_rejects_non_trees_and_bad_roots():
    with pytest.raises(DomainError):
        list(tree_min_vc(GraphInstance(3, [(1, 2), (2, 3), (1, 3)])))
    with pytest.raises(DomainError):
        list(tree_min_vc(path(3), root=9))


def test_euler_tour_frozen_and_lengths():
    t = path(3)
    assert list(EulerTourCursor(t, 2)) == [(2, 1), (1, 2), (2, 3), (3, 2)]
    single = GraphInstance(1, [])
    assert EulerTourCursor(single, 1).step() is None
    rng = oracles.make_rng(5)
    for _ in range(25):
        n = rng.randint(2, 12)
        t = GraphInstance(n, oracles.random_tree_edges(rng, n))
        root = rng.randint(1, n)
        steps = list(EulerTourCursor(t, root))
        assert len(steps) == 2 * (n - 1)
        assert steps[0][0] == root and steps[-1][1] == root


def test_euler_tour_charges_primitive_words_only():
    def body(meter):
        return list(EulerTourCursor(path(5), 1, meter=meter))

    steps, snap = with_meter(body)
    assert len(steps) == 8
    assert snap.primitive_words == 8
    assert snap.charged_peak == 0
    assert snap.input_accesses > 0


def test_tree_vertices_enumerates_once():
    rng = oracles.make_rng(9)
    for _ in range(25):
        n = rng.randint(1, 12)
        t = GraphInstance(n, oracles.random_tree_edges(rng, n))
        root = rng.randint(1, n)
        view = RootedTreeView(t, root)
        seen = list(tree_vertices(view, root))
        assert sorted(seen) == list(range(1, n + 1))


def test_tree_metered_matches_fast_and_oracle():
    rng = oracles.make_rng(21)
    for _ in range(60):
        n = rng.randint(1, 10)
        edges = oracles.random_tree_edges(rng, n)
        t = GraphInstance(n, edges)
        root = rng.randint(1, n)
        fast = list(tree_min_vc(t, root=root))
        metered = list(tree_min_vc(t, root=root, metered=True))
        assert fast == metered
        assert oracles.is_vertex_cover(edges, fast)
        assert len(fast) == oracles.tree_tau_dp(n, edges, root=1)
        indep = list(tree_max_is(t, root=root))
        assert sorted(fast + indep) == list(range(1, n + 1))
        assert oracles.is_independent(edges, indep)


def test_functional_frozen_examples():
    dipath = DigraphInstance(3, [(1, 2), (2, 3)])
    assert list(functional_min_vc(dipath)) == [2]
    assert list(functional_max_is(dipath)) == [1, 3]

    triangle = DigraphInstance(3, [(1, 2), (2, 3), (3, 1)])
    assert list(functional_min_vc(triangle)) == [1, 3]
    assert list(functional_max_is(triangle)) == [2]

    two_cycle = DigraphInstance(2, [(1, 2), (2, 1)])
    assert list(functional_min_vc(two_cycle)) == [1]

    tailed = DigraphInstance(3, [(1, 2), (2, 1), (3, 1)])
    assert list(functional_min_vc(tailed)) == [1]

    star_sink = DigraphInstance(4, [(2, 1), (3, 1), (4, 3)])
    assert list(functional_min_vc(star_sink)) == [1, 3]

    lonely = DigraphInstance(3, [])
    assert list(functional_min_vc(lonely)) == []
    assert list(functional_max_is(lonely)) == [1, 2, 3]


def test_component_rep_frozen():
    d = DigraphInstance(6, [(1, 2), (2, 3), (5, 4), (4, 5), (6, 5)])
    assert component_rep(d, 1) == 3
    assert component_rep(d, 3) == 3
    assert component_rep(d, 6) == 4
    assert component_rep(d, 5) == 4


def test_functional_rejects_branching():
    with pytest.raises(DomainError):
        list(functional_min_vc(DigraphInstance(3, [(1, 2), (1, 3)])))
    with pytest.raises(DomainError):
        component_rep(DigraphInstance(3, [(1, 2), (1, 3)]), 1)


def test_functional_modes_match_and_are_optimal():
    rng = oracles.make_rng(33)
    for _ in range(120):
        n = rng.randint(1, 10)
        arcs = oracles.random_functional_arcs(rng, n)
        d = DigraphInstance(n, arcs)
        edges = d.underlying_edges()
        fast = list(functional_min_vc(d))
        metered = list(functional_min_vc(d, metered=True))
        assert fast == metered
        assert oracles.is_vertex_cover(edges, fast)
        assert len(fast) == oracles.tau(n, edges)
        indep = list(functional_max_is(d))
        assert indep == list(functional_max_is(d, metered=True))
        assert sorted(fast + indep) == list(range(1, n + 1))
        assert oracles.is_independent(edges, indep)
        assert len(indep) == oracles.mis_size(n, edges)


def test_metered_walks_balance_the_meter():
    d = DigraphInstance(5, [(1, 2), (2, 3), (3, 1), (4, 3), (5, 4)])

    def body(meter):
        return list(functional_min_vc(d, meter=meter, metered=True))

    got, snap = with_meter(body)
    assert oracles.is_vertex_cover(d.underlying_edges(), got)
    assert snap.charged_peak > 0
    assert snap.input_accesses > 0


def test_outputs_are_repeatable():
    d = DigraphInstance(7, [(1, 2), (2, 3), (3, 1), (5, 4), (6, 4), (7, 6)])
    assert list(functional_min_vc(d)) == list(functional_min_vc(d))
    m = WorkspaceMeter()
    first = list(functional_min_vc(d, meter=m, metered=True))
    peak_one = m.charged_peak
    m2 = WorkspaceMeter()
    second = list(functional_min_vc(d, meter=m2, metered=True))
    assert first == second
    assert peak_one == m2.charged_peak
