"""Dominating set approximations.

Three routes, by graph class.  Squarefree (no 4-cycle) graphs admit a
degree kernel: high-degree vertices are forced into any small dominating
set, and what they leave undominated must be small, or the budget is
infeasible.  Degenerate graphs peel in logarithmically many rounds,
dominating the low-degree half of the undominated region through its
neighbors.  Regular graphs sweep a 2-universal hash family and keep the
best sampled set together with whatever it fails to dominate.
"""

import math

from .errors import DomainError, RoundLimitError
from .exact import degeneracy
from .hashing import cw_family
from .instances import GraphInstance
from .layers import LayeredGraphView, StagePredicate
from .meter import coerce_meter


def _require_graph(g, who):
    if not isinstance(g, GraphInstance):
        raise DomainError(f"{who} needs a GraphInstance")


def c4free_ds_bounded_k(g, k, meter=None):
    """Dominating set of size at most k + (2k+1)k, or None.

    Sound only on graphs with no 4-cycle subgraph: there any dominating
    set of size <= k must contain every vertex of degree > 2k, and each
    remaining pick dominates at most 2k+1 of the vertices those leave
    uncovered.

    Parameters
    ----------
    g : GraphInstance
        Free of 4-cycle subgraphs (see has_c4; not checked here).
    k : int
        Candidate budget, at least 0.

    Returns
    -------
    list of int or None
        None means no dominating set of size at most k exists.
    """
    _require_graph(g, "c4free_ds_bounded_k")
    if k < 0:
        raise DomainError(f"budget must be nonnegative, got {k}")
    meter = coerce_meter(meter)
    forced = [v for v in range(1, g.n + 1) if g.degree(v, meter) > 2 * k]
    if len(forced) > k:
        return None
    covered = set(forced)
    for v in forced:
        covered.update(g.neighbors(v, meter))
    rest = [v for v in range(1, g.n + 1) if v not in covered]
    if len(rest) > (2 * k + 1) * (k - len(forced)):
        return None
    return sorted(forced + rest)


def c4free_ds_approx(g, meter=None):
    """Dominating set on squarefree graphs, ratio O(sqrt(n)).

    Searches budgets 1, 2, ... and returns the first success; at budget
    ceil(sqrt(n)) gives up and returns every vertex.
    """
    _require_graph(g, "c4free_ds_approx")
    root = math.isqrt(g.n)
    cap = root if root * root == g.n else root + 1
    for k in range(1, cap):
        got = c4free_ds_bounded_k(g, k, meter=meter)
        if got is not None:
            return got
    return list(range(1, g.n + 1))


class DomPartition:
    """Snapshot of one peeling round.

    ``y`` are the chosen dominators, ``b_h``/``b_l`` their dominated
    neighbors split by having at least 2d+1 undominated neighbors or
    fewer, ``w_h``/``w_l`` the undominated vertices split by having a
    neighbor among ``w_h | w_l | b_h`` or not.  The five parts are
    disjoint and cover the vertex set.
    """

    __slots__ = ("y", "b_h", "b_l", "w_h", "w_l")

    def __init__(self, y, b_h, b_l, w_h, w_l):
        self.y = frozenset(y)
        self.b_h = frozenset(b_h)
        self.b_l = frozenset(b_l)
        self.w_h = frozenset(w_h)
        self.w_l = frozenset(w_l)

    @property
    def b(self):
        return self.b_h | self.b_l

    @property
    def w(self):
        return self.w_h | self.w_l

    @property
    def w_star(self):
        return self.w_h | self.w_l | self.b_h

    def __repr__(self):
        return (
            f"DomPartition(|y|={len(self.y)}, |b|={len(self.b)}, "
            f"|w|={len(self.w)})"
        )


def _partition(g, y, d, meter):
    closed = set(y)
    for u in y:
        closed.update(g.neighbors(u, meter))
    w = {v for v in range(1, g.n + 1) if v not in closed}
    b_h, b_l = [], []
    for v in sorted(closed - set(y)):
        inside = sum(1 for u in g.neighbors(v, meter) if u in w)
        (b_h if inside >= 2 * d + 1 else b_l).append(v)
    w_star = w | set(b_h)
    w_h, w_l = [], []
    for v in sorted(w):
        live = any(u in w_star for u in g.neighbors(v, meter))
        (w_h if live else w_l).append(v)
    return DomPartition(y, b_h, b_l, w_h, w_l)


def _frozen_stage(i, dead):
    return StagePredicate(
        f"dom-round-{i}", lambda level, v, dead=dead: v in dead, words_budget=8
    )


def dgn_rounds(g, d=None, meter=None, space_audit=False):
    """Yield the peeling partition at every loop boundary.

    The first yield is the entry partition, the last has empty ``w_h``.
    Each round collects the undominated vertices of degree <= 2d in the
    graph induced on ``w_star`` and adds their neighbors there to ``y``;
    in a d-degenerate graph at least half of ``w_h`` qualifies, so the
    round count stays logarithmic.  Exceeding 2*ceil(log2(n+1)) + 2
    rounds raises RoundLimitError, which signals that the graph is not
    actually d-degenerate.

    With ``space_audit`` the per-round survivor sets are installed as
    deletion layers and the degree tests run against the live view.
    """
    _require_graph(g, "dgn_rounds")
    if d is None:
        d = degeneracy(g)
    if d < 0:
        raise DomainError(f"degeneracy bound must be nonnegative, got {d}")
    meter = coerce_meter(meter)
    cap = 2 * math.ceil(math.log2(g.n + 1)) + 2
    y = set()
    drops = []
    part = _partition(g, y, d, meter)
    rounds = 0
    while True:
        yield part
        if not part.w_h:
            return
        rounds += 1
        if rounds > cap:
            raise RoundLimitError(
                f"still undominated after {cap} rounds; "
                f"the input is denser than {d}-degenerate"
            )
        if space_audit:
            view = LayeredGraphView(
                g,
                [_frozen_stage(i + 1, dead) for i, dead in enumerate(drops)],
                meter=meter,
                memoized=False,
            )
            level = view.level(len(drops))
            chosen = [
                v for v in sorted(part.w_h) if level.degree_live(v) <= 2 * d
            ]
            for v in chosen:
                y.update(level.neighbors_live(v))
        else:
            w_star = part.w_star
            for v in sorted(part.w_h):
                inside = [u for u in g.neighbors(v, meter) if u in w_star]
                if len(inside) <= 2 * d:
                    y.update(inside)
        nxt = _partition(g, y, d, meter)
        if space_audit:
            drops.append(frozenset(part.w_star - nxt.w_star))
        part = nxt


def dgn_dom_set(g, d=None, meter=None, space_audit=False):
    """Dominating set for a d-degenerate graph in O(log n) rounds.

    Parameters
    ----------
    g : GraphInstance
    d : int or None
        Degeneracy bound; computed from g when omitted.

    Returns
    -------
    list of int
        Dominating set: the chosen dominators plus the vertices left
        isolated among the undominated.

    Raises
    ------
    RoundLimitError
        When the round cap is exceeded, i.e. d understates the graph.
    """
    part = None
    for part in dgn_rounds(g, d, meter=meter, space_audit=space_audit):
        pass
    return sorted(part.y | part.w_l)


def regular_ds_derand(g, d, meter=None):
    """Dominating set for a d-regular graph via a hash-family sweep.

    Every member f of the 2-universal family over range size d+1 yields
    the dominating set W_f = S_f + (V minus N[S_f]) with
    S_f = {v : f(v) <= ceil(ln(d+1))}; the family average of |W_f| meets
    the n*(ln(d+1)+1)/(d+1) sampling bound, so the sweep's minimum does
    too.  Ties break toward the lexicographically smallest (a, b).

    Parameters
    ----------
    g : GraphInstance
        Exactly d-regular; anything else raises DomainError.
    d : int
        The regular degree, at least 0.

    Returns
    -------
    list of int
        A dominating set of g.
    """
    _require_graph(g, "regular_ds_derand")
    if d < 0:
        raise DomainError(f"degree must be nonnegative, got {d}")
    meter = coerce_meter(meter)
    for v in range(1, g.n + 1):
        if g.degree(v, meter) != d:
            raise DomainError(f"vertex {v} has degree {g.degree(v)}, not {d}")
    if g.n == 0:
        return []
    t = max(1, math.ceil(math.log(d + 1)))
    best = None
    for fn in cw_family(g.n, d + 1, meter):
        meter.tick_pass()
        sampled = {v for v in range(1, g.n + 1) if fn(v) <= t}
        covered = set(sampled)
        for v in sampled:
            covered.update(g.neighbors(v, meter))
        w_f = sampled | {v for v in range(1, g.n + 1) if v not in covered}
        if best is None or len(w_f) < len(best):
            best = w_f
    return sorted(best)
