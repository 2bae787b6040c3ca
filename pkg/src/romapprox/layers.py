"""Layered deletion oracles.

An algorithm in this package runs in stages: stage i inspects the instance
as it stands after stages 1..i-1 and deletes a set of items.  Nothing is
ever materialized by default.  Liveness at depth i is answered recursively:

* a vertex is live at depth i when it is live at depth i-1 and the stage-i
  predicate declines to delete it;
* a base edge is live when both endpoints are;
* a family element is live when it survived every stage so far;
* a set is live when none of its elements has been deleted.

Each stage predicate declares a words budget no larger than the module
constant ``WORDS_PER_LEVEL``; a liveness query at depth i allocates one
budget frame per level on the way down, so its charged peak is at most
``(i+1) * WORDS_PER_LEVEL``.  Predicates receive a read handle fixed to
the level below them, which makes consulting the wrong level impossible
by construction.

The recursive mode recomputes everything and is what the space audits
run against.  ``memoized=True`` caches liveness per level; answers are
identical, but cached charge profiles are not audit material.
"""

from .errors import DomainError
from .instances import GraphInstance, SetFamilyInstance
from .meter import coerce_meter

WORDS_PER_LEVEL = 32


class StagePredicate:
    """One deletion stage.

    ``check(level, item)`` returns True when the stage deletes ``item``;
    it is only ever asked about items live at the level below.  The
    declared ``words_budget`` must cover every local the check keeps
    while it runs, recursive liveness queries excluded (they carry their
    own frames).
    """

    def __init__(self, name, check=None, words_budget=16):
        if not 1 <= words_budget <= WORDS_PER_LEVEL:
            raise DomainError(
                f"words budget {words_budget} outside 1..{WORDS_PER_LEVEL}"
            )
        self.name = name
        self.words_budget = words_budget
        self._fn = check

    def check(self, level, item):
        return self._fn(level, item)

    def __repr__(self):
        return f"StagePredicate({self.name!r})"


class GraphLevel:
    """Read handle to the graph after the first ``i`` stages."""

    __slots__ = ("view", "i")

    def __init__(self, view, i):
        self.view = view
        self.i = i

    @property
    def base(self):
        return self.view.base

    @property
    def n(self):
        return self.view.base.n

    def vertex_live(self, v):
        return self.view.vertex_live(self.i, v)

    def edge_live(self, u, v):
        return self.view.edge_live(self.i, u, v)

    def vertices(self):
        view = self.view
        i = self.i
        view.meter.tick_pass()
        for v in range(1, view.base.n + 1):
            if view.vertex_live(i, v):
                yield v

    def neighbors_live(self, v):
        view = self.view
        base = view.base
        meter = view.meter
        for w in base.neighbors(v):
            meter.access()
            if view.vertex_live(self.i, w):
                yield w

    def degree_live(self, v):
        count = 0
        for _ in self.neighbors_live(v):
            count += 1
        return count

    def ith_neighbor(self, v, j):
        return self.view.base.ith_neighbor(v, j, self.view.meter)

    def degree(self, v):
        return self.view.base.degree(v, self.view.meter)


class FamilyLevel:
    """Read handle to the set family after the first ``i`` stages."""

    __slots__ = ("view", "i")

    def __init__(self, view, i):
        self.view = view
        self.i = i

    @property
    def base(self):
        return self.view.base

    @property
    def n(self):
        return self.view.base.n

    def element_live(self, e):
        return self.view.element_live(self.i, e)

    def set_live(self, j):
        return self.view.set_live(self.i, j)

    def elements(self):
        view = self.view
        view.meter.tick_pass()
        for e in range(1, view.base.n + 1):
            if view.element_live(self.i, e):
                yield e

    def sets(self):
        view = self.view
        view.meter.tick_pass()
        for j in range(1, view.base.m + 1):
            if view.set_live(self.i, j):
                yield j

    def live_set_count_containing(self, e):
        view = self.view
        count = 0
        for j in view.base.sets_containing(e, view.meter):
            if view.set_live(self.i, j):
                count += 1
        return count

    def ith_set_of(self, e, i):
        return self.view.base.ith_set_of(e, i, self.view.meter)

    def set_elements(self, j):
        return self.view.base.set_elements(j, self.view.meter)


class LayeredGraphView:
    """Stack of deletion stages over a graph."""

    def __init__(self, base, stages, meter=None, memoized=False):
        if not isinstance(base, GraphInstance):
            raise DomainError("LayeredGraphView needs a GraphInstance")
        self.base = base
        self.stages = tuple(stages)
        self.meter = coerce_meter(meter)
        self.memoized = memoized
        self._memo = [{} for _ in self.stages] if memoized else None
        self._levels = [GraphLevel(self, i) for i in range(len(self.stages) + 1)]

    @property
    def depth(self):
        return len(self.stages)

    def level(self, i):
        if not 0 <= i <= self.depth:
            raise DomainError(f"level {i} outside 0..{self.depth}")
        return self._levels[i]

    def vertex_live(self, i, v):
        if not 0 <= i <= self.depth:
            raise DomainError(f"level {i} outside 0..{self.depth}")
        if not 1 <= v <= self.base.n:
            raise DomainError(f"vertex {v} out of range 1..{self.base.n}")
        if i == 0:
            return True
        if self._memo is not None:
            memo = self._memo[i - 1]
            hit = memo.get(v)
            if hit is None:
                hit = self._compute_live(i, v)
                memo[v] = hit
            return hit
        return self._compute_live(i, v)

    def _compute_live(self, i, v):
        pred = self.stages[i - 1]
        meter = self.meter
        meter.alloc(pred.words_budget)
        try:
            if not self.vertex_live(i - 1, v):
                return False
            return not pred.check(self._levels[i - 1], v)
        finally:
            meter.release(pred.words_budget)

    def edge_live(self, i, u, v):
        if not self.base.has_edge(u, v, self.meter):
            raise DomainError(f"({u}, {v}) is not an edge of the base graph")
        return self.vertex_live(i, u) and self.vertex_live(i, v)

    def stage_deleted(self, i, v):
        """True when stage i is the one that deleted v."""
        if not 1 <= i <= self.depth:
            raise DomainError(f"stage {i} outside 1..{self.depth}")
        return self.vertex_live(i - 1, v) and not self.vertex_live(i, v)


class LayeredFamilyView:
    """Stack of element-deletion stages over a set family.

    Stages delete ground-set elements; a set dies with its first deleted
    element, so set liveness is derived, never stored.
    """

    def __init__(self, base, stages, meter=None, memoized=False):
        if not isinstance(base, SetFamilyInstance):
            raise DomainError("LayeredFamilyView needs a SetFamilyInstance")
        self.base = base
        self.stages = tuple(stages)
        self.meter = coerce_meter(meter)
        self.memoized = memoized
        self._memo = [{} for _ in self.stages] if memoized else None
        self._levels = [FamilyLevel(self, i) for i in range(len(self.stages) + 1)]

    @property
    def depth(self):
        return len(self.stages)

    def level(self, i):
        if not 0 <= i <= self.depth:
            raise DomainError(f"level {i} outside 0..{self.depth}")
        return self._levels[i]

    def element_live(self, i, e):
        if not 0 <= i <= self.depth:
            raise DomainError(f"level {i} outside 0..{self.depth}")
        if not 1 <= e <= self.base.n:
            raise DomainError(f"element {e} out of range 1..{self.base.n}")
        if i == 0:
            return True
        if self._memo is not None:
            memo = self._memo[i - 1]
            hit = memo.get(e)
            if hit is None:
                hit = self._compute_live(i, e)
                memo[e] = hit
            return hit
        return self._compute_live(i, e)

    def _compute_live(self, i, e):
        pred = self.stages[i - 1]
        meter = self.meter
        meter.alloc(pred.words_budget)
        try:
            if not self.element_live(i - 1, e):
                return False
            return not pred.check(self._levels[i - 1], e)
        finally:
            meter.release(pred.words_budget)

    def set_live(self, i, j):
        if not 1 <= j <= self.base.m:
            raise DomainError(f"set index {j} out of range 1..{self.base.m}")
        for e in self.base.set_elements(j, self.meter):
            if not self.element_live(i, e):
                return False
        return True

    def stage_deleted(self, i, e):
        if not 1 <= i <= self.depth:
            raise DomainError(f"stage {i} outside 1..{self.depth}")
        return self.element_live(i - 1, e) and not self.element_live(i, e)


def enumerate_stage(view, i, kind):
    """Stream one layer of a view in canonical input order.

    Graph views: kind "S" (stage-i deletions), "V" (vertices live at
    depth i), "E" (edges live at depth i).  Family views: kind "S"
    (stage-i deletions), "U" (elements live at depth i), "F" (indices of
    sets live at depth i).
    """
    if isinstance(view, LayeredGraphView):
        view.meter.tick_pass()
        if kind == "S":
            if not 1 <= i <= view.depth:
                raise DomainError(f"stage {i} outside 1..{view.depth}")
            return (v for v in range(1, view.base.n + 1) if view.stage_deleted(i, v))
        if kind == "V":
            if not 0 <= i <= view.depth:
                raise DomainError(f"level {i} outside 0..{view.depth}")
            return (v for v in range(1, view.base.n + 1) if view.vertex_live(i, v))
        if kind == "E":
            if not 0 <= i <= view.depth:
                raise DomainError(f"level {i} outside 0..{view.depth}")
            return (
                (u, v)
                for u, v in view.base.edges
                if view.vertex_live(i, u) and view.vertex_live(i, v)
            )
        raise DomainError(f"graph views stream kinds S, V, E, not {kind!r}")
    if isinstance(view, LayeredFamilyView):
        view.meter.tick_pass()
        if kind == "S":
            if not 1 <= i <= view.depth:
                raise DomainError(f"stage {i} outside 1..{view.depth}")
            return (e for e in range(1, view.base.n + 1) if view.stage_deleted(i, e))
        if kind == "U":
            if not 0 <= i <= view.depth:
                raise DomainError(f"level {i} outside 0..{view.depth}")
            return (e for e in range(1, view.base.n + 1) if view.element_live(i, e))
        if kind == "F":
            if not 0 <= i <= view.depth:
                raise DomainError(f"level {i} outside 0..{view.depth}")
            return (j for j in range(1, view.base.m + 1) if view.set_live(i, j))
        raise DomainError(f"family views stream kinds S, U, F, not {kind!r}")
    raise DomainError(f"not a layered view: {type(view).__name__}")


# Reusable stage predicates.  Checks are written against the level handle
# only, with locals comfortably inside the declared budgets.


def delete_min_live_id():
    def check(level, v):
        for w in range(1, level.n + 1):
            if level.vertex_live(w):
                return w == v
        return False

    return StagePredicate("delete-min-live-id", check, words_budget=8)


def delete_isolated():
    def check(level, v):
        for _ in level.neighbors_live(v):
            return False
        return True

    return StagePredicate("delete-isolated", check, words_budget=8)


def delete_high_degree(threshold):
    def check(level, v):
        count = 0
        for _ in level.neighbors_live(v):
            count += 1
            if count >= threshold:
                return True
        return False

    return StagePredicate(f"delete-degree-ge-{threshold}", check, words_budget=8)


def delete_element_min_live_id():
    def check(level, e):
        for x in range(1, level.n + 1):
            if level.element_live(x):
                return x == e
        return False

    return StagePredicate("delete-element-min-live-id", check, words_budget=8)


def delete_uncovered_elements():
    def check(level, e):
        return level.live_set_count_containing(e) == 0

    return StagePredicate("delete-uncovered", check, words_budget=8)
