import pytest

from romapprox.errors import DomainError
from romapprox.instances import GraphInstance, SetFamilyInstance
from romapprox.layers import (
    WORDS_PER_LEVEL,
    LayeredFamilyView,
    LayeredGraphView,
    StagePredicate,
    delete_element_min_live_id,
    delete_high_degree,
    delete_isolated,
    delete_min_live_id,
    delete_uncovered_elements,
    enumerate_stage,
)
from romapprox.meter import WorkspaceMeter, with_meter

PATH4 = GraphInstance(4, [(1, 2), (2, 3), (3, 4)])
FAMILY = SetFamilyInstance(4, 2, [(1, 2), (2, 3), (3, 4)])


def test_min_id_stack_layers():
    view = LayeredGraphView(PATH4, [delete_min_live_id(), delete_min_live_id()])
    assert list(enumerate_stage(view, 1, "S")) == [1]
    assert list(enumerate_stage(view, 2, "S")) == [2]
    assert list(enumerate_stage(view, 2, "V")) == [3, 4]
    assert list(enumerate_stage(view, 2, "E")) == [(3, 4)]
    assert list(enumerate_stage(view, 1, "V")) == [2, 3, 4]
    assert list(enumerate_stage(view, 0, "V")) == [1, 2, 3, 4]


def test_isolated_stage_on_edgeless_graph():
    g = GraphInstance(3, [])
    view = LayeredGraphView(g, [delete_isolated()])
    assert list(enumerate_stage(view, 1, "S")) == [1, 2, 3]
    assert list(enumerate_stage(view, 1, "V")) == []


def test_high_degree_stage():
    star = GraphInstance(5, [(1, 2), (1, 3), (1, 4), (1, 5)])
    view = LayeredGraphView(star, [delete_high_degree(3)])
    assert list(enumerate_stage(view, 1, "S")) == [1]
    assert list(enumerate_stage(view, 1, "E")) == []


def test_family_stack_layers():
    stages = [delete_element_min_live_id(), delete_element_min_live_id()]
    view = LayeredFamilyView(FAMILY, stages)
    assert list(enumerate_stage(view, 1, "S")) == [1]
    assert list(enumerate_stage(view, 2, "S")) == [2]
    assert list(enumerate_stage(view, 2, "U")) == [3, 4]
    assert list(enumerate_stage(view, 1, "F")) == [2, 3]
    assert list(enumerate_stage(view, 2, "F")) == [3]


def test_uncovered_elements_stage():
    f = SetFamilyInstance(5, 2, [(1, 2)])
    view = LayeredFamilyView(f, [delete_uncovered_elements()])
    assert list(enumerate_stage(view, 1, "S")) == [3, 4, 5]
    assert list(enumerate_stage(view, 1, "U")) == [1, 2]
    assert list(enumerate_stage(view, 1, "F")) == [1]


def test_set_dies_with_first_deleted_element():
    view = LayeredFamilyView(FAMILY, [delete_element_min_live_id()])
    assert view.set_live(0, 1)
    assert not view.set_live(1, 1)
    assert view.set_live(1, 2)
    assert view.stage_deleted(1, 1)
    assert not view.stage_deleted(1, 2)


def test_edge_live_rejects_non_edges():
    view = LayeredGraphView(PATH4, [delete_min_live_id()])
    with pytest.raises(DomainError):
        view.edge_live(1, 1, 3)
    assert view.edge_live(0, 1, 2)
    assert not view.edge_live(1, 1, 2)


def test_level_bounds_checked():
    view = LayeredGraphView(PATH4, [delete_min_live_id()])
    with pytest.raises(DomainError):
        view.vertex_live(2, 1)
    with pytest.raises(DomainError):
        list(enumerate_stage(view, 0, "S"))
    with pytest.raises(DomainError):
        list(enumerate_stage(view, 1, "F"))


def test_predicate_budget_validated():
    with pytest.raises(DomainError):
        StagePredicate("too-big", lambda level, v: False, words_budget=WORDS_PER_LEVEL + 1)
    with pytest.raises(DomainError):
        StagePredicate("zero", lambda level, v: False, words_budget=0)


def test_depth_query_charge_bounded():
    stages = [delete_min_live_id(), delete_isolated(), delete_min_live_id()]

    def body(meter):
        view = LayeredGraphView(PATH4, stages, meter=meter)
        return [view.vertex_live(3, v) for v in range(1, 5)]

    result, snap = with_meter(body)
    assert result == [False, False, True, True]
    budgets = sum(p.words_budget for p in stages)
    assert snap.charged_peak <= budgets
    assert snap.charged_peak <= 4 * WORDS_PER_LEVEL
    assert snap.input_accesses > 0


def test_repeated_queries_have_identical_charge_profiles():
    stages = [delete_min_live_id(), delete_isolated()]

    def profile():
        meter = WorkspaceMeter()
        view = LayeredGraphView(PATH4, stages, meter=meter)
        view.vertex_live(2, 3)
        return meter.snapshot()

    first = profile()
    second = profile()
    assert first == second


def _stack_pool_graph():
    return [
        lambda: delete_min_live_id(),
        lambda: delete_isolated(),
        lambda: delete_high_degree(2),
    ]


def test_memoized_matches_recursive_graph():
    import random

    rng = random.Random(7)
    pool = _stack_pool_graph()
    for _ in range(40):
        n = rng.randint(1, 8)
        edges = [
            (u, v)
            for u in range(1, n + 1)
            for v in range(u + 1, n + 1)
            if rng.random() < 0.4
        ]
        g = GraphInstance(n, edges)
        depth = rng.randint(1, 4)
        makers = [rng.choice(pool) for _ in range(depth)]
        plain = LayeredGraphView(g, [mk() for mk in makers])
        memo = LayeredGraphView(g, [mk() for mk in makers], memoized=True)
        for i in range(depth + 1):
            assert list(enumerate_stage(plain, i, "V")) == list(
                enumerate_stage(memo, i, "V")
            )
            assert list(enumerate_stage(plain, i, "E")) == list(
                enumerate_stage(memo, i, "E")
            )
        for i in range(1, depth + 1):
            assert list(enumerate_stage(plain, i, "S")) == list(
                enumerate_stage(memo, i, "S")
            )


def test_memoized_matches_recursive_family():
    import random

    rng = random.Random(11)
    pool = [delete_element_min_live_id, delete_uncovered_elements]
    for _ in range(40):
        n = rng.randint(1, 7)
        m = rng.randint(0, 6)
        sets = []
        for _ in range(m):
            size = rng.randint(1, min(2, n))
            sets.append(tuple(rng.sample(range(1, n + 1), size)))
        f = SetFamilyInstance(n, 2, sets)
        depth = rng.randint(1, 4)
        makers = [rng.choice(pool) for _ in range(depth)]
        plain = LayeredFamilyView(f, [mk() for mk in makers])
        memo = LayeredFamilyView(f, [mk() for mk in makers], memoized=True)
        for i in range(depth + 1):
            assert list(enumerate_stage(plain, i, "U")) == list(
                enumerate_stage(memo, i, "U")
            )
            assert list(enumerate_stage(plain, i, "F")) == list(
                enumerate_stage(memo, i, "F")
            )
        for i in range(1, depth + 1):
            assert list(enumerate_stage(plain, i, "S")) == list(
                enumerate_stage(memo, i, "S")
            )
