"""Carter-Wegman hash enumeration and the derandomized
average-degree independent set.

A 2-universal family over a prime p >= n is small enough to sweep
exhaustively, so any quantity whose expectation over the family is good
can be optimized by trying every member.  The independent-set routine
scores each member by |S_f| minus the edges inside S_f; the best score
lower-bounds the components of the induced subgraph, and picking the
minimum vertex of every closed neighborhood turns components into an
independent set of that size.
"""

from dataclasses import dataclass

from .errors import DomainError
from .instances import GraphInstance
from .meter import coerce_meter


def least_prime_at_least(n, meter=None):
    """Smallest prime >= n by trial division, charged as primitive work."""
    meter = coerce_meter(meter)
    c = max(2, n)
    while True:
        prime = True
        q = 2
        while q * q <= c:
            meter.charge_primitive()
            if c % q == 0:
                prime = False
                break
            q += 1
        if prime:
            return c
        c += 1


@dataclass(frozen=True)
class HashFn:
    """One member x -> ((a*x + b) mod p mod k) + 1 of a family."""

    a: int
    b: int
    p: int
    k: int

    def __call__(self, x):
        return (self.a * x + self.b) % self.p % self.k + 1


class HashFamily:
    """All p*(p-1) functions f_{a,b} for a in [1, p-1], b in [0, p-1].

    Iteration is lexicographic in (a, b).  For every pair i != j of
    domain points, at most len(family)/k members collide on it.
    """

    __slots__ = ("n", "k", "p")

    def __init__(self, n, k, p):
        self.n = n
        self.k = k
        self.p = p

    def __len__(self):
        return self.p * (self.p - 1)

    def __iter__(self):
        for a in range(1, self.p):
            for b in range(self.p):
                yield HashFn(a, b, self.p, self.k)

    def member(self, a, b):
        if not (1 <= a < self.p and 0 <= b < self.p):
            raise DomainError(f"parameters ({a}, {b}) outside the family")
        return HashFn(a, b, self.p, self.k)

    def __repr__(self):
        return f"HashFamily(n={self.n}, k={self.k}, p={self.p})"


def cw_family(n, k, meter=None):
    """2-universal family of hash functions [n] -> [k].

    Parameters
    ----------
    n : int
        Domain size, at least 1.
    k : int
        Range size, 1 <= k <= n.

    Returns
    -------
    HashFamily
        Enumerable family over the least prime p >= n.
    """
    if not 1 <= k <= n:
        raise DomainError(f"range size must satisfy 1 <= k <= n, got k={k} n={n}")
    return HashFamily(n, k, least_prime_at_least(n, meter))


def avg_degree_is(g, meter=None):
    """Independent set of size at least n over twice the ceiling of the
    average degree.

    Sweeps the 2-universal family with range size k = ceil(avg degree),
    takes S_f = preimage of 1 under the best-scoring member (score
    |S_f| - edges(S_f), ties to the smallest (a, b)), and keeps every
    vertex of S_f that is minimum in its closed neighborhood within
    G[S_f].

    Returns
    -------
    list of int
        Independent in g; for m >= 1 the size is at least n/(2k).
        Edgeless inputs return every vertex.
    """
    if not isinstance(g, GraphInstance):
        raise DomainError("avg_degree_is needs a GraphInstance")
    meter = coerce_meter(meter)
    if g.m == 0:
        return list(range(1, g.n + 1))
    k = -(-2 * g.m // g.n)
    best = None
    for fn in cw_family(g.n, k, meter):
        meter.tick_pass()
        inside = [v for v in range(1, g.n + 1) if fn(v) == 1]
        member = set(inside)
        crossing = 0
        for u, v in g.edges:
            meter.access()
            if u in member and v in member:
                crossing += 1
        score = len(inside) - crossing
        if best is None or score > best[0]:
            best = (score, inside, member)
    _, inside, member = best
    out = []
    for v in inside:
        if all(w > v for w in g.neighbors(v, meter) if w in member):
            out.append(v)
    return out
