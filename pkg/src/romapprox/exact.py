"""Desk-scale exact solvers and validators.

These are the reference implementations the rest of the package is judged
against: deliberately simple exhaustive searches with pinned tie-breaking
(scan sizes upward, downward for independent set, and return the
lexicographically least solution at the optimal size), plus validators
that hand back a small witness on failure instead of a bare False.

Refuses instances above a size cap rather than silently taking hours.
"""

import itertools
from enum import Enum

from .errors import DomainError, RefusalError
from .instances import DigraphInstance, GraphInstance, SetFamilyInstance


class ProblemKind(Enum):
    VC = "vc"
    IS = "is"
    MAXIMAL_IS = "maximal-is"
    DS = "ds"
    HS = "hs"


class StructureKind(Enum):
    TREE = "tree"
    C4_FREE = "c4free"
    DEGENERATE = "degenerate"
    REGULAR = "regular"
    TOURNAMENT = "tournament"
    FUNCTIONAL = "functional"


GRAPH_CAP = 16
FAMILY_CAP = 12


def _require(instance, cls, kind):
    if not isinstance(instance, cls):
        raise DomainError(f"{kind} expects {cls.__name__}, got {type(instance).__name__}")


def _covers(g, cand):
    s = set(cand)
    return all(u in s or v in s for u, v in g.edges)


def _independent(g, cand):
    s = set(cand)
    return not any(u in s and v in s for u, v in g.edges)


def _maximal_independent(g, cand):
    if not _independent(g, cand):
        return False
    s = set(cand)
    for v in range(1, g.n + 1):
        if v not in s and not any(w in s for w in g.neighbors(v)):
            return False
    return True


def _dominates(g, cand):
    s = set(cand)
    for v in range(1, g.n + 1):
        if v not in s and not any(w in s for w in g.neighbors(v)):
            return False
    return True


def _hits(f, cand):
    s = set(cand)
    return all(any(e in s for e in a) for a in f.sets)


def exact_opt(kind, instance, cap=None):
    """Exact optimum for ``kind`` on a small instance.

    Returns ``(solution, value)`` where ``solution`` is the
    lexicographically least optimal solution as an ascending tuple.
    For MAXIMAL_IS the optimum is the smallest maximal independent set.
    Instances larger than the cap (vertices for graphs, ground-set size
    for families) raise :class:`RefusalError`.
    """
    kind = ProblemKind(kind)
    if kind is ProblemKind.HS:
        _require(instance, SetFamilyInstance, kind.value)
        limit = FAMILY_CAP if cap is None else cap
    else:
        _require(instance, GraphInstance, kind.value)
        limit = GRAPH_CAP if cap is None else cap
    if instance.n > limit:
        raise RefusalError(
            f"exact {kind.value} refuses n={instance.n} above cap {limit}"
        )
    n = instance.n
    ids = range(1, n + 1)
    if kind is ProblemKind.VC:
        feasible = lambda c: _covers(instance, c)
        sizes = range(n + 1)
    elif kind is ProblemKind.IS:
        feasible = lambda c: _independent(instance, c)
        sizes = range(n, -1, -1)
    elif kind is ProblemKind.MAXIMAL_IS:
        feasible = lambda c: _maximal_independent(instance, c)
        sizes = range(n + 1)
    elif kind is ProblemKind.DS:
        feasible = lambda c: _dominates(instance, c)
        sizes = range(n + 1)
    else:
        feasible = lambda c: _hits(instance, c)
        sizes = range(n + 1)
    for size in sizes:
        for combo in itertools.combinations(ids, size):
            if feasible(combo):
                return combo, size
    raise DomainError(f"no feasible {kind.value} solution exists")


def _validate_candidate_ids(n, cand):
    for v in cand:
        if not 1 <= v <= n:
            return ("bad-id", v)
    return None


def _validate_problem(kind, instance, cand):
    bad = _validate_candidate_ids(instance.n, cand)
    if bad is not None:
        return False, bad
    s = set(cand)
    if kind is ProblemKind.VC:
        for u, v in instance.edges:
            if u not in s and v not in s:
                return False, ("uncovered-edge", (u, v))
        return True, None
    if kind in (ProblemKind.IS, ProblemKind.MAXIMAL_IS):
        for u, v in instance.edges:
            if u in s and v in s:
                return False, ("adjacent-pair", (u, v))
        if kind is ProblemKind.MAXIMAL_IS:
            for v in range(1, instance.n + 1):
                if v not in s and not any(w in s for w in instance.neighbors(v)):
                    return False, ("extendable-vertex", v)
        return True, None
    if kind is ProblemKind.DS:
        for v in range(1, instance.n + 1):
            if v not in s and not any(w in s for w in instance.neighbors(v)):
                return False, ("undominated", v)
        return True, None
    for j, a in enumerate(instance.sets, start=1):
        if not any(e in s for e in a):
            return False, ("unhit-set", j)
    return True, None


def _bfs_reach(g, start):
    seen = {start}
    queue = [start]
    for v in queue:
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def find_c4(g):
    """Vertices of some 4-cycle subgraph (not necessarily induced), or None."""
    for a, c in itertools.combinations(range(1, g.n + 1), 2):
        common = [b for b in g.neighbors(a) if b != c and g.has_edge(b, c)]
        if len(common) >= 2:
            return (a, common[0], c, common[1])
    return None


def has_c4(g):
    return find_c4(g) is not None


def degeneracy_order(g):
    """Smallest-last peel order and the degeneracy it certifies."""
    live = set(range(1, g.n + 1))
    deg = {v: g.degree(v) for v in live}
    order = []
    best = 0
    while live:
        v = min(live, key=lambda x: (deg[x], x))
        if deg[v] > best:
            best = deg[v]
        order.append(v)
        live.remove(v)
        for w in g.neighbors(v):
            if w in live:
                deg[w] -= 1
    return order, best


def degeneracy(g):
    return degeneracy_order(g)[1]


def _validate_structure(kind, instance, parameter):
    if kind is StructureKind.TREE:
        _require(instance, GraphInstance, kind.value)
        if instance.n == 0:
            return False, ("edge-count", 0)
        if instance.m != instance.n - 1:
            return False, ("edge-count", instance.m)
        reached = _bfs_reach(instance, 1)
        if len(reached) != instance.n:
            missing = min(v for v in range(1, instance.n + 1) if v not in reached)
            return False, ("disconnected", missing)
        return True, None
    if kind is StructureKind.C4_FREE:
        _require(instance, GraphInstance, kind.value)
        cyc = find_c4(instance)
        if cyc is not None:
            return False, ("four-cycle", cyc)
        return True, None
    if kind is StructureKind.DEGENERATE:
        _require(instance, GraphInstance, kind.value)
        if parameter is None:
            raise DomainError("degenerate check needs the bound d")
        got = degeneracy(instance)
        if got > parameter:
            return False, ("degeneracy", got)
        return True, None
    if kind is StructureKind.REGULAR:
        _require(instance, GraphInstance, kind.value)
        if parameter is None:
            parameter = instance.degree(1) if instance.n else 0
        for v in range(1, instance.n + 1):
            if instance.degree(v) != parameter:
                return False, ("degree-mismatch", (v, instance.degree(v)))
        return True, None
    if kind is StructureKind.TOURNAMENT:
        _require(instance, DigraphInstance, kind.value)
        for u, v in itertools.combinations(range(1, instance.n + 1), 2):
            count = instance.has_arc(u, v) + instance.has_arc(v, u)
            if count != 1:
                return False, ("pair-arcs", (u, v, count))
        return True, None
    if kind is StructureKind.FUNCTIONAL:
        _require(instance, DigraphInstance, kind.value)
        for v in range(1, instance.n + 1):
            if instance.out_degree(v) > 1:
                return False, ("out-degree", (v, instance.out_degree(v)))
        return True, None
    raise DomainError(f"unknown structure kind {kind!r}")


def validate(kind, instance, candidate=None, parameter=None):
    """Check a solution or a structural property.

    ``kind`` is a :class:`ProblemKind` (candidate required) or a
    :class:`StructureKind` (candidate ignored).  Returns ``(ok, witness)``
    where ``witness`` is None or a small tagged tuple locating the failure.
    """
    try:
        pk = ProblemKind(kind)
    except ValueError:
        pk = None
    if pk is not None:
        if candidate is None:
            raise DomainError(f"{pk.value} validation needs a candidate")
        if pk is ProblemKind.HS:
            _require(instance, SetFamilyInstance, pk.value)
        else:
            _require(instance, GraphInstance, pk.value)
        return _validate_problem(pk, instance, candidate)
    sk = StructureKind(kind)
    return _validate_structure(sk, instance, parameter)
