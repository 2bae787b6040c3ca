"""Staggered frequency-peeling for hitting set, and vertex deletion
toward forbidden-pattern-free graph classes.

The budgeted solver kernelizes, then peels in rounds: round j deletes
every element whose live-set count is still at least theta_j and lets
the deletions cascade through the layered view; survivor counts above
kappa_j prove the budget k infeasible.  The rounds run over the kernel
augmented with the saturated discard witnesses of two or more elements,
so every discarded set of the input is hit through its witness; smaller
witnesses need no help since their element is frequent enough to die in
round one.  Wrappers search k upward and fall back to trivial hitting
sets at the cap, trading ratio for certainty.

Vertex deletion problems with finite forbidden-pattern catalogs reduce
to hitting the family of pattern-inducing vertex subsets.
"""

import math
from dataclasses import dataclass
from itertools import combinations

from .errors import DomainError
from .instances import DigraphInstance, GraphInstance, SetFamilyInstance
from .kernels import retention_scan
from .layers import LayeredFamilyView, StagePredicate, enumerate_stage
from .meter import coerce_meter

SLOP = 1e-9


def _check_eps(eps):
    if not 0 < eps <= 1:
        raise DomainError(f"epsilon must be in (0, 1], got {eps}")


@dataclass(frozen=True)
class EpsSchedule:
    """Round count and per-round thresholds for the peeling phase.

    Rounds number max(1, ceil((d-1)/eps)); rounds 1..rounds-1 peel with
    threshold theta and cap kappa, the last round collects survivors.
    """

    eps: float
    d: int

    def __post_init__(self):
        _check_eps(self.eps)
        if self.d < 1:
            raise DomainError(f"set-size bound must be positive, got {self.d}")

    @property
    def rounds(self):
        return max(1, math.ceil((self.d - 1) / self.eps - SLOP))

    def theta(self, k, j):
        return (k + 1) ** (self.d - 1 - j * self.eps)

    def kappa(self, k, j):
        return (k + 1) ** (self.d - j * self.eps)


class _FreqStage(StagePredicate):
    """Deletes live elements hitting at least theta live sets."""

    def __init__(self, j, theta):
        super().__init__(f"peel-round-{j}", words_budget=16)
        self.theta = theta

    def check(self, level, e):
        return level.live_set_count_containing(e) >= self.theta - SLOP


def _augmented_kernel(f, k):
    """Retained sets plus the multi-element saturated witnesses, or None
    when the scan itself rules out budget k."""
    retained, witnesses, saturated_no = retention_scan(f, k)
    if saturated_no:
        return None
    sets = [f.set_elements(j) for j in retained]
    sets.extend(b for b in witnesses if 2 <= len(b) <= f.d - 1)
    return SetFamilyInstance(f.n, f.d, sets)


def hs_bounded_k(f, k, eps, meter=None, space_audit=False):
    """Hitting set within a budget-driven size cap, or None.

    Parameters
    ----------
    f : SetFamilyInstance
    k : int
        Candidate budget, at least 0.
    eps : float
        Peeling granularity in (0, 1].
    space_audit : bool
        Recompute layers instead of memoizing them.

    Returns
    -------
    list of int or None
        None means no hitting set of size at most k exists.  Otherwise
        the peeled elements round by round followed by the elements of
        the surviving sets, a hitting set for all of f of size at most
        (ceil((d-1)/eps) + d) * (k+1)^(1+eps).
    """
    _check_eps(eps)
    meter = coerce_meter(meter)
    kernel = _augmented_kernel(f, k)
    if kernel is None:
        return None
    schedule = EpsSchedule(eps, f.d)
    stages = [
        _FreqStage(j, schedule.theta(k, j)) for j in range(1, schedule.rounds)
    ]
    view = LayeredFamilyView(kernel, stages, meter=meter, memoized=not space_audit)
    for j in range(1, schedule.rounds):
        survivors = sum(
            1 for t in range(1, kernel.m + 1) if view.set_live(j, t)
        )
        if survivors > schedule.kappa(k, j) + SLOP:
            return None
    out = []
    for j in range(1, schedule.rounds):
        out.extend(enumerate_stage(view, j, "S"))
    last = schedule.rounds - 1
    tail = set()
    for t in range(1, kernel.m + 1):
        if view.set_live(last, t):
            tail.update(kernel.set_elements(t))
    out.extend(sorted(tail))
    return out


def hs_eps_approx(f, eps, meter=None, space_audit=False):
    """Hitting set with ratio O((d/eps) * n^eps), searching k upward.

    Tries budgets 1, 2, ... and returns the first success; at budget
    ceil(n^(1-eps)) gives up and returns every element that appears in
    some set, which always hits and is within n^eps of any optimum that
    large.
    """
    _check_eps(eps)
    cap = math.ceil(f.n ** (1 - eps) - SLOP)
    for k in range(1, cap):
        got = hs_bounded_k(f, k, eps, meter=meter, space_audit=space_audit)
        if got is not None:
            return got
    used = set()
    for j in range(1, f.m + 1):
        used.update(f.set_elements(j))
    return sorted(used)


def hs_sqrt_approx(f, meter=None):
    """Hitting set with ratio O(d * n^(1-1/d)) from the kernel alone.

    Searches budgets upward for the first successful scan and returns
    every element of the retained sets; their union hits the whole
    family.  At budget ceil(n^(1/d)) returns the ground set.
    """
    meter = coerce_meter(meter)
    cap = math.ceil(f.n ** (1 / f.d) - SLOP)
    for k in range(1, cap):
        retained, _, saturated_no = retention_scan(f, k)
        if saturated_no:
            continue
        used = set()
        for j in retained:
            used.update(f.set_elements(j))
        return sorted(used)
    return list(range(1, f.n + 1))


def _induced(g, combo):
    return [
        (u, v) for u, v in combinations(combo, 2) if g.has_edge(u, v)
    ]


def _degrees(combo, edges):
    deg = dict.fromkeys(combo, 0)
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return sorted(deg.values())


def _match_k2(g, combo):
    return g.has_edge(*combo)


def _match_k3(g, combo):
    return len(_induced(g, combo)) == 3


def _match_p3(g, combo):
    return len(_induced(g, combo)) == 2


def _match_p4(g, combo):
    edges = _induced(g, combo)
    return len(edges) == 3 and _degrees(combo, edges) == [1, 1, 2, 2]


def _match_c4(g, combo):
    edges = _induced(g, combo)
    return len(edges) == 4 and _degrees(combo, edges) == [2, 2, 2, 2]


def _match_c5(g, combo):
    edges = _induced(g, combo)
    return len(edges) == 5 and _degrees(combo, edges) == [2, 2, 2, 2, 2]


def _match_2k2(g, combo):
    edges = _induced(g, combo)
    return len(edges) == 2 and _degrees(combo, edges) == [1, 1, 1, 1]


def _match_directed_triangle(d, combo):
    a, b, c = combo
    return (
        d.has_arc(a, b) and d.has_arc(b, c) and d.has_arc(c, a)
    ) or (
        d.has_arc(a, c) and d.has_arc(c, b) and d.has_arc(b, a)
    )


_PATTERNS = {
    "edge": (2, _match_k2),
    "triangle": (3, _match_k3),
    "induced-path-3": (3, _match_p3),
    "induced-path-4": (4, _match_p4),
    "induced-cycle-4": (4, _match_c4),
    "induced-cycle-5": (5, _match_c5),
    "induced-matching-2": (4, _match_2k2),
    "directed-triangle": (3, _match_directed_triangle),
}

FORBIDDEN_CATALOG = {
    "vc": ("edge",),
    "triangle-vd": ("triangle",),
    "cluster-vd": ("induced-path-3",),
    "cograph-vd": ("induced-path-4",),
    "threshold-vd": ("induced-matching-2", "induced-path-4", "induced-cycle-4"),
    "split-vd": ("induced-matching-2", "induced-cycle-4", "induced-cycle-5"),
    "tournament-fvs": ("directed-triangle",),
}


def _require_tournament(d):
    for u in range(1, d.n + 1):
        for v in range(u + 1, d.n + 1):
            if d.has_arc(u, v) == d.has_arc(v, u):
                raise DomainError(
                    f"input is not a tournament: pair ({u}, {v})"
                )


def forbidden_family(instance, problem):
    """Family of all vertex subsets inducing a forbidden pattern.

    Sets are emitted by size, then lexicographically.  The result's set
    size bound is the largest pattern size of the problem's catalog
    entry, so hitting the family is exactly destroying every induced
    occurrence.
    """
    if problem not in FORBIDDEN_CATALOG:
        raise DomainError(f"unknown problem {problem!r}")
    names = FORBIDDEN_CATALOG[problem]
    directed = problem == "tournament-fvs"
    if directed:
        if not isinstance(instance, DigraphInstance):
            raise DomainError(f"{problem} needs a DigraphInstance")
        _require_tournament(instance)
    elif not isinstance(instance, GraphInstance):
        raise DomainError(f"{problem} needs a GraphInstance")
    by_size = {}
    for name in names:
        size, match = _PATTERNS[name]
        by_size.setdefault(size, []).append(match)
    d = max(by_size)
    sets = []
    for size in sorted(by_size):
        matchers = by_size[size]
        for combo in combinations(range(1, instance.n + 1), size):
            if any(match(instance, combo) for match in matchers):
                sets.append(combo)
    return SetFamilyInstance(instance.n, d, sets)


def del_pi_approx(instance, problem, eps, meter=None, space_audit=False):
    """Vertices whose deletion removes every catalog pattern, with the
    hitting-set wrapper's O((d/eps) n^eps) ratio."""
    family = forbidden_family(instance, problem)
    return hs_eps_approx(family, eps, meter=meter, space_audit=space_audit)
