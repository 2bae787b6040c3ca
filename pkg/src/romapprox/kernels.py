"""Budgeted kernelization for vertex cover and hitting set.

Both kernels either answer NO (no solution within the budget k exists)
or shrink the instance to a piece whose size depends on k alone.  The
cover kernel keeps every vertex of degree above k plus the endpoints of
the leftover edges; the hitting-set kernel scans the family once in
input order and retains a set exactly when none of its subsets, from
the empty set up to the set itself, already appears inside
(k+1)^(d-|subset|) retained sets.  Retention thus depends only on what
came earlier, so a rescan reproduces any prefix of the decision
sequence.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import DomainError
from .instances import GraphInstance, SetFamilyInstance

NO = "NO"
KERNEL = "KERNEL"


@dataclass(frozen=True)
class KernelOutcome:
    """Verdict plus payload: vertex ids for covers, set indices for
    families.  A NO verdict carries an empty payload."""

    verdict: str
    payload: tuple

    @property
    def is_no(self):
        return self.verdict == NO


def buss_vc_kernel(g, k):
    """Vertex-cover kernel keyed to the budget k.

    Parameters
    ----------
    g : GraphInstance
    k : int
        Cover budget, at least 0.

    Returns
    -------
    KernelOutcome
        NO when more than k vertices exceed degree k or more than k^2
        edges survive their removal; otherwise KERNEL whose payload is
        the high-degree vertices plus the surviving edges' endpoints,
        ascending.  The payload is always a vertex cover of g, of size
        at most k + 2k^2.

    Notes
    -----
    Any cover within the budget must take every vertex of degree above
    k (else its > k neighbors are all forced in), and what remains can
    only be covered by k vertices of degree at most k, so more than k^2
    leftover edges are hopeless.
    """
    if not isinstance(g, GraphInstance):
        raise DomainError("buss_vc_kernel needs a GraphInstance")
    if k < 0:
        raise DomainError(f"budget must be nonnegative, got {k}")
    high = {v for v in range(1, g.n + 1) if g.degree(v) > k}
    if len(high) > k:
        return KernelOutcome(NO, ())
    rest = [(u, v) for (u, v) in g.edges if u not in high and v not in high]
    if len(rest) > k * k:
        return KernelOutcome(NO, ())
    keep = set(high)
    for u, v in rest:
        keep.add(u)
        keep.add(v)
    return KernelOutcome(KERNEL, tuple(sorted(keep)))


def fk_hs_kernel(f, k):
    """Hitting-set kernel retaining at most (k+1)^d sets.

    Parameters
    ----------
    f : SetFamilyInstance
    k : int
        Hitting budget, at least 0.

    Returns
    -------
    KernelOutcome
        KERNEL whose payload is the 1-based indices of the retained
        sets, in input order, or NO when some set is discarded with the
        empty set as its only saturated witness (the retained family
        alone has hit the global ceiling, so no budget-k hitting set
        survives at desk scale).

    Notes
    -----
    Set A is retained iff every subset B of A, from the empty set up to
    A itself, is contained in fewer than (k+1)^(d-|B|) earlier retained
    sets.  A discard with a nonempty saturated witness B is harmless:
    hitting the saturated crowd of retained supersets of B forces an
    element of B itself into any budget-k solution, and that element
    hits A too.  Duplicate copies of a retained set die this way (their
    witness is the set itself), never through the empty set, so the NO
    signal fires only when genuinely distinct-enough sets exhaust the
    global (k+1)^d ceiling.
    """
    retained, _, saturated_no = retention_scan(f, k)
    if saturated_no:
        return KernelOutcome(NO, ())
    return KernelOutcome(KERNEL, retained)


def retention_scan(f, k):
    """One pass of the retention rule.

    Returns (retained set indices, saturated discard witnesses in first
    appearance order, whether some discard had only the empty witness).
    The witness list backs the staggered scheme: every discarded set
    contains one of them.
    """
    if not isinstance(f, SetFamilyInstance):
        raise DomainError("fk_hs_kernel needs a SetFamilyInstance")
    if k < 0:
        raise DomainError(f"budget must be nonnegative, got {k}")
    counts = {frozenset(): 0}
    retained = []
    seen = set()
    recorded = []
    saturated_no = False
    for j in range(1, f.m + 1):
        elements = f.set_elements(j)
        witnesses = []
        for size in range(len(elements) + 1):
            for sub in combinations(sorted(elements), size):
                b = frozenset(sub)
                if counts.get(b, 0) >= (k + 1) ** (f.d - size):
                    witnesses.append(b)
        if not witnesses:
            retained.append(j)
            for size in range(len(elements) + 1):
                for sub in combinations(sorted(elements), size):
                    b = frozenset(sub)
                    counts[b] = counts.get(b, 0) + 1
            continue
        if all(not w for w in witnesses):
            saturated_no = True
        for b in witnesses:
            if b and b not in seen:
                seen.add(b)
                recorded.append(tuple(sorted(b)))
    return tuple(retained), tuple(recorded), saturated_no


def kernel_family(f, outcome):
    """Materialize a KERNEL outcome of :func:`fk_hs_kernel` as a family
    over the same ground set."""
    if outcome.is_no:
        raise DomainError("NO outcome has no kernel family")
    return SetFamilyInstance(f.n, f.d, [f.set_elements(j) for j in outcome.payload])
