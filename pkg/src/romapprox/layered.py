"""Stage-layered approximation algorithms.

Degree-bounded vertex cover and maximal independent set run one stage
per adjacency position 1..max degree.  Stage i looks at the graph left
by stages 1..i-1 and wires each live vertex to its i-th base neighbor
(when live), an out-degree-one subgraph solved exactly by the functional
machinery.  For covers the solved set is the stage's deletions, and the
union covers within factor 2: every base edge shows up in some stage
subgraph while both endpoints live.

For independent sets the stage subgraph hides base edges ranked away
from i at both endpoints, so the machine's choice is filtered down to
the greedy ascending-id independent set it induces in the live base
graph; the stage deletes the kept set plus its live neighborhood, and
one extra stage (whose subgraph is empty by construction) sweeps up the
survivors.  Every vertex is deleted exactly once, at that moment either
kept or base-adjacent to a kept vertex, so the union of kept sets is an
independent set no outside vertex can extend.

Bounded-multiplicity hitting set does the same over a set family: stage
i collects the live sets that are some live element's i-th set, takes a
maximal independent set of their intersection graph, and deletes every
element of the chosen sets.  Chosen sets are pairwise disjoint, so each
costs at most its d elements against any optimum that must hit it.
"""

from .errors import DomainError
from .instances import GraphInstance
from .layers import (
    LayeredFamilyView,
    LayeredGraphView,
    StagePredicate,
    enumerate_stage,
)
from .meter import coerce_meter
from .treefunc import component_cover_member, fast_cover_members


class StageSubgraph:
    """Stage i's out-degree-one subgraph over the level's live vertices,
    exposed through the rooted-forest protocol."""

    __slots__ = ("level", "i")

    def __init__(self, level, i):
        self.level = level
        self.i = i

    def contains(self, v):
        return self.level.vertex_live(v)

    def out(self, v):
        w = self.level.ith_neighbor(v, self.i)
        if w is None or not self.level.vertex_live(w):
            return None
        return w

    def in_nbrs(self, v):
        level = self.level
        i = self.i
        for w in level.neighbors_live(v):
            if level.ith_neighbor(w, i) == v:
                yield w


class _CoverStage(StagePredicate):
    """Deletes the canonical minimum cover of the stage subgraph."""

    def __init__(self, i):
        super().__init__(f"cover-stage-{i}", words_budget=24)
        self.i = i
        self._cache = None

    def check(self, level, v):
        sub = StageSubgraph(level, self.i)
        if level.view.memoized:
            if self._cache is None:
                live = [u for u in range(1, level.n + 1) if level.vertex_live(u)]
                self._cache = fast_cover_members(sub, live)
            return self._cache.get(v, False)
        return component_cover_member(sub, v, level.n)


KEPT_FRAME_WORDS = 4


class _IndepStage(StagePredicate):
    """Deletes the stage's kept set together with its live neighborhood.

    The machine solves the stage subgraph exactly, but that subgraph
    omits base edges whose adjacency rank differs from i at both ends,
    so the machine's set need not be independent in the live base graph.
    The kept set is the greedy repair: a machine vertex survives iff no
    smaller machine vertex adjacent to it in the live base graph
    survived.  Kept vertices are pairwise non-adjacent in the base
    graph, and every machine vertex is kept or base-adjacent to a kept
    one, so the whole machine set dies with the stage.
    """

    def __init__(self, i):
        super().__init__(f"independent-stage-{i}", words_budget=28)
        self.i = i
        self._cache = None
        self._kept_cache = None

    def _machine(self, level, v):
        sub = StageSubgraph(level, self.i)
        if level.view.memoized:
            if self._cache is None:
                self._cache = self._solve(level)
            return self._cache.get(v, False)
        return not component_cover_member(sub, v, level.n)

    def _solve(self, level):
        live = [u for u in range(1, level.n + 1) if level.vertex_live(u)]
        cover = fast_cover_members(StageSubgraph(level, self.i), live)
        machine = {}
        for v in live:
            machine[v] = not cover.get(v, True)
        return machine

    def _kept(self, level, v):
        if level.view.memoized:
            if self._kept_cache is None:
                self._kept_cache = self._keep(level)
            return self._kept_cache.get(v, False)
        if not self._machine(level, v):
            return False
        meter = level.view.meter
        meter.alloc(KEPT_FRAME_WORDS)
        try:
            for w in level.neighbors_live(v):
                if w < v and self._kept(level, w):
                    return False
            return True
        finally:
            meter.release(KEPT_FRAME_WORDS)

    def _keep(self, level):
        kept = {}
        for v in range(1, level.n + 1):
            if not (level.vertex_live(v) and self._machine(level, v)):
                continue
            blocked = False
            for w in level.neighbors_live(v):
                if w < v and kept.get(w, False):
                    blocked = True
                    break
            kept[v] = not blocked
        return kept

    def check(self, level, v):
        if self._kept(level, v):
            return True
        for w in level.neighbors_live(v):
            if self._kept(level, w):
                return True
        return False

    def chosen(self, level, v):
        return self._kept(level, v)


def _resolve_max_degree(g, max_degree):
    if max_degree is None:
        return g.max_degree()
    if max_degree < g.max_degree():
        raise DomainError(
            f"declared max degree {max_degree} below actual {g.max_degree()}"
        )
    return max_degree


def bd_vc_view(g, max_degree=None, meter=None, memoized=True):
    """The layered view whose stage deletions form the 2-approximate cover."""
    if not isinstance(g, GraphInstance):
        raise DomainError("bd_vc_2approx needs a GraphInstance")
    delta = _resolve_max_degree(g, max_degree)
    stages = [_CoverStage(i) for i in range(1, delta + 1)]
    return LayeredGraphView(g, stages, meter=meter, memoized=memoized)


def bd_vc_2approx(g, max_degree=None, meter=None, space_audit=False):
    """Stream a vertex cover of at most twice the optimum size.

    Stage-major order, ascending ids within a stage.  ``space_audit``
    switches to the non-memoized recursion the meter reports on.
    """
    view = bd_vc_view(g, max_degree, meter=meter, memoized=not space_audit)
    for i in range(1, view.depth + 1):
        for v in enumerate_stage(view, i, "S"):
            yield v


def bd_is_view(g, max_degree=None, meter=None, memoized=True):
    """The layered view whose stage keeps form the maximal independent set.

    One stage per adjacency rank plus a final sweep stage whose subgraph
    is empty (no vertex has a neighbor at rank max degree + 1), so any
    vertex still live there is machine-chosen and kept unless a smaller
    live survivor blocks it.
    """
    if not isinstance(g, GraphInstance):
        raise DomainError("bd_maximal_is needs a GraphInstance")
    delta = _resolve_max_degree(g, max_degree)
    stages = [_IndepStage(i) for i in range(1, delta + 2)]
    return LayeredGraphView(g, stages, meter=meter, memoized=memoized)


def bd_maximal_is(g, max_degree=None, meter=None, space_audit=False):
    """Stream a maximal independent set, stage-major.

    Stage i deletes its kept set plus that set's live neighborhood;
    only the kept vertices are emitted.  Every vertex dies in exactly
    one stage, at that point either kept or base-adjacent to a kept
    vertex, so the union is independent and maximal in the input graph.
    """
    view = bd_is_view(g, max_degree, meter=meter, memoized=not space_audit)
    for i in range(1, view.depth + 1):
        stage = view.stages[i - 1]
        level = view.level(i - 1)
        view.meter.tick_pass()
        for v in range(1, g.n + 1):
            if view.vertex_live(i - 1, v) and stage.chosen(level, v):
                yield v


class _HsStage(StagePredicate):
    """Deletes every element of the sets chosen at this stage.

    The stage's candidate sets are the live sets that are some live
    element's i-th set; choices are a maximal independent set of their
    intersection graph, so chosen sets never share elements.
    """

    def __init__(self, i, set_bound, mult_bound):
        super().__init__(f"hitting-stage-{i}", words_budget=28)
        self.i = i
        self.inner_degree = max(0, set_bound * (mult_bound - 1))
        self._cache = None

    def _stage_sets(self, level):
        positions = []
        for j in range(1, level.base.m + 1):
            if not level.set_live(j):
                continue
            for e in level.set_elements(j):
                if level.element_live(e) and level.ith_set_of(e, self.i) == j:
                    positions.append(j)
                    break
        return positions

    def _chosen_sets(self, level):
        if level.view.memoized and self._cache is not None:
            return self._cache
        positions = self._stage_sets(level)
        h = len(positions)
        members = [set(level.base.set_elements(j)) for j in positions]
        edges = [
            (a, b)
            for a in range(1, h + 1)
            for b in range(a + 1, h + 1)
            if members[a - 1] & members[b - 1]
        ]
        igraph = GraphInstance(h, edges)
        chosen = frozenset(
            positions[p - 1]
            for p in bd_maximal_is(
                igraph,
                max_degree=max(self.inner_degree, igraph.max_degree()),
                meter=level.view.meter,
                space_audit=not level.view.memoized,
            )
        )
        if level.view.memoized:
            self._cache = chosen
        return chosen

    def check(self, level, e):
        chosen = self._chosen_sets(level)
        for j in level.base.sets_containing(e):
            if j in chosen:
                return True
        return False


def bounded_mult_hs(f, max_multiplicity=None, meter=None, space_audit=False):
    """Stream a hitting set at most ``d`` times the optimum, stage-major.

    One stage per multiplicity rank 1..max multiplicity; stage i's
    chosen sets are pairwise disjoint and each forces one optimum
    element, so charging its at most d elements to that optimum element
    gives the factor.
    """
    meter = coerce_meter(meter)
    if max_multiplicity is None:
        delta = f.max_multiplicity()
    else:
        if max_multiplicity < f.max_multiplicity():
            raise DomainError(
                f"declared multiplicity {max_multiplicity} below actual "
                f"{f.max_multiplicity()}"
            )
        delta = max_multiplicity
    stages = [_HsStage(i, f.d, delta) for i in range(1, delta + 1)]
    view = LayeredFamilyView(f, stages, meter=meter, memoized=not space_audit)
    for i in range(1, view.depth + 1):
        for e in enumerate_stage(view, i, "S"):
            yield e


def hs_view(f, max_multiplicity=None, meter=None, memoized=True):
    """Layered family view matching :func:`bounded_mult_hs`."""
    delta = f.max_multiplicity() if max_multiplicity is None else max_multiplicity
    stages = [_HsStage(i, f.d, delta) for i in range(1, delta + 1)]
    return LayeredFamilyView(f, stages, meter=meter, memoized=memoized)
