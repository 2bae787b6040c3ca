"""Read-only problem instances and their text formats.

Three line-oriented formats, all whitespace-separated decimal ids,
comment lines starting with ``c`` allowed anywhere:

* graph: header ``p <n> <m>`` then ``m`` lines ``e <u> <v>``
* digraph: header ``q <n> <m>`` then ``m`` lines ``a <u> <v>``
* set family: header ``h <n> <m> <d>`` then ``m`` lines ``s <e1> ... <ek>``

Vertices and ground-set elements are 1..n.  Input order is the canonical
order everywhere downstream: adjacency lists hold neighbors in first
appearance order, families keep sets and their elements as written, and
every algorithm that streams output does so against these orders.

Parse failures raise :class:`ParseError` naming the 1-based line number.
"""

from .errors import DomainError, ParseError


def _tokenize(text):
    """Yield (line_number, tokens) for content lines, skipping comments."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        yield lineno, tokens


def _int_field(lineno, token, what):
    try:
        return int(token)
    except ValueError:
        raise ParseError(lineno, f"{what} is not an integer: {token!r}") from None


def _check_id(lineno, value, n, what):
    if not 1 <= value <= n:
        raise ParseError(lineno, f"{what} {value} out of range 1..{n}")
    return value


class GraphInstance:
    """Undirected simple graph with input-ordered adjacency."""

    __slots__ = ("n", "m", "edges", "_adj", "_edge_set")

    def __init__(self, n, edges):
        if n < 0:
            raise DomainError(f"vertex count must be nonnegative, got {n}")
        adj = [[] for _ in range(n + 1)]
        seen = set()
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise DomainError(f"edge ({u}, {v}) out of range 1..{n}")
            if u == v:
                raise DomainError(f"self-loop at {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DomainError(f"duplicate edge ({u}, {v})")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.edges = tuple((u, v) for u, v in edges)
        self.m = len(self.edges)
        self._adj = [tuple(a) for a in adj]
        self._edge_set = seen

    def degree(self, v, meter=None):
        if not 1 <= v <= self.n:
            raise DomainError(f"vertex {v} out of range 1..{self.n}")
        if meter is not None:
            meter.access()
        return len(self._adj[v])

    def ith_neighbor(self, v, i, meter=None):
        """The i-th neighbor of v (1-based, input order), or None."""
        if not 1 <= v <= self.n:
            raise DomainError(f"vertex {v} out of range 1..{self.n}")
        if i < 1:
            raise DomainError(f"neighbor index must be positive, got {i}")
        if meter is not None:
            meter.access()
        a = self._adj[v]
        return a[i - 1] if i <= len(a) else None

    def neighbors(self, v, meter=None):
        if not 1 <= v <= self.n:
            raise DomainError(f"vertex {v} out of range 1..{self.n}")
        if meter is not None:
            meter.access(len(self._adj[v]))
        return self._adj[v]

    def has_edge(self, u, v, meter=None):
        if not (1 <= u <= self.n and 1 <= v <= self.n):
            raise DomainError(f"edge ({u}, {v}) out of range 1..{self.n}")
        if meter is not None:
            meter.access()
        key = (u, v) if u < v else (v, u)
        return key in self._edge_set

    def max_degree(self):
        return max((len(a) for a in self._adj[1:]), default=0)

    def __eq__(self, other):
        return (
            isinstance(other, GraphInstance)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"GraphInstance(n={self.n}, m={self.m})"


class DigraphInstance:
    """Directed graph: no self-loops, no repeated arcs, 2-cycles allowed."""

    __slots__ = ("n", "m", "arcs", "_out", "_in", "_arc_set")

    def __init__(self, n, arcs):
        if n < 0:
            raise DomainError(f"vertex count must be nonnegative, got {n}")
        out = [[] for _ in range(n + 1)]
        into = [[] for _ in range(n + 1)]
        seen = set()
        for u, v in arcs:
            if not (1 <= u <= n and 1 <= v <= n):
                raise DomainError(f"arc ({u}, {v}) out of range 1..{n}")
            if u == v:
                raise DomainError(f"self-loop at {u}")
            if (u, v) in seen:
                raise DomainError(f"duplicate arc ({u}, {v})")
            seen.add((u, v))
            out[u].append(v)
            into[v].append(u)
        self.n = n
        self.arcs = tuple((u, v) for u, v in arcs)
        self.m = len(self.arcs)
        self._out = [tuple(a) for a in out]
        self._in = [tuple(a) for a in into]
        self._arc_set = seen

    def out_degree(self, v, meter=None):
        if not 1 <= v <= self.n:
            raise DomainError(f"vertex {v} out of range 1..{self.n}")
        if meter is not None:
            meter.access()
        return len(self._out[v])

    def out_neighbors(self, v, meter=None):
        if not 1 <= v <= self.n:
            raise DomainError(f"vertex {v} out of range 1..{self.n}")
        if meter is not None:
            meter.access(len(self._out[v]))
        return self._out[v]

    def in_neighbors(self, v, meter=None):
        if not 1 <= v <= self.n:
            raise DomainError(f"vertex {v} out of range 1..{self.n}")
        if meter is not None:
            meter.access(len(self._in[v]))
        return self._in[v]

    def has_arc(self, u, v, meter=None):
        if not (1 <= u <= self.n and 1 <= v <= self.n):
            raise DomainError(f"arc ({u}, {v}) out of range 1..{self.n}")
        if meter is not None:
            meter.access()
        return (u, v) in self._arc_set

    def underlying_edges(self):
        """Undirected edge list: arc order, 2-cycles collapsed to one edge."""
        seen = set()
        edges = []
        for u, v in self.arcs:
            key = (u, v) if u < v else (v, u)
            if key not in seen:
                seen.add(key)
                edges.append((u, v))
        return tuple(edges)

    def __eq__(self, other):
        return (
            isinstance(other, DigraphInstance)
            and self.n == other.n
            and self.arcs == other.arcs
        )

    def __hash__(self):
        return hash((self.n, self.arcs))

    def __repr__(self):
        return f"DigraphInstance(n={self.n}, m={self.m})"


class SetFamilyInstance:
    """Ordered family of small subsets of a ground set 1..n.

    ``d`` is the declared maximum set size; every set has 1..d distinct
    elements.  The multiplicity index maps each element to the 1-based
    indices of the sets containing it, in input order.
    """

    __slots__ = ("n", "m", "d", "sets", "_containing")

    def __init__(self, n, d, sets):
        if n < 0:
            raise DomainError(f"ground-set size must be nonnegative, got {n}")
        if d < 1:
            raise DomainError(f"set-size bound must be positive, got {d}")
        containing = [[] for _ in range(n + 1)]
        stored = []
        for idx, elements in enumerate(sets, start=1):
            elements = tuple(elements)
            if not 1 <= len(elements) <= d:
                raise DomainError(
                    f"set {idx} has {len(elements)} elements, allowed 1..{d}"
                )
            if len(set(elements)) != len(elements):
                raise DomainError(f"set {idx} repeats an element")
            for e in elements:
                if not 1 <= e <= n:
                    raise DomainError(f"element {e} out of range 1..{n}")
                containing[e].append(idx)
            stored.append(elements)
        self.n = n
        self.d = d
        self.sets = tuple(stored)
        self.m = len(stored)
        self._containing = [tuple(c) for c in containing]

    def set_elements(self, j, meter=None):
        if not 1 <= j <= self.m:
            raise DomainError(f"set index {j} out of range 1..{self.m}")
        if meter is not None:
            meter.access(len(self.sets[j - 1]))
        return self.sets[j - 1]

    def set_size(self, j, meter=None):
        if not 1 <= j <= self.m:
            raise DomainError(f"set index {j} out of range 1..{self.m}")
        if meter is not None:
            meter.access()
        return len(self.sets[j - 1])

    def multiplicity(self, e, meter=None):
        """How many sets contain element e."""
        if not 1 <= e <= self.n:
            raise DomainError(f"element {e} out of range 1..{self.n}")
        if meter is not None:
            meter.access()
        return len(self._containing[e])

    def sets_containing(self, e, meter=None):
        if not 1 <= e <= self.n:
            raise DomainError(f"element {e} out of range 1..{self.n}")
        if meter is not None:
            meter.access(len(self._containing[e]))
        return self._containing[e]

    def ith_set_of(self, e, i, meter=None):
        """Index of the i-th set (1-based, input order) containing e, or None."""
        if not 1 <= e <= self.n:
            raise DomainError(f"element {e} out of range 1..{self.n}")
        if i < 1:
            raise DomainError(f"set rank must be positive, got {i}")
        if meter is not None:
            meter.access()
        c = self._containing[e]
        return c[i - 1] if i <= len(c) else None

    def max_multiplicity(self):
        return max((len(c) for c in self._containing[1:]), default=0)

    def __eq__(self, other):
        return (
            isinstance(other, SetFamilyInstance)
            and self.n == other.n
            and self.d == other.d
            and self.sets == other.sets
        )

    def __hash__(self):
        return hash((self.n, self.d, self.sets))

    def __repr__(self):
        return f"SetFamilyInstance(n={self.n}, m={self.m}, d={self.d})"


def _parse_header(lineno, tokens, tag, fields, kind):
    if tokens[0] != tag:
        raise ParseError(
            lineno, f"expected {kind} header starting with {tag!r}, got {tokens[0]!r}"
        )
    if len(tokens) != 1 + fields:
        raise ParseError(
            lineno, f"{kind} header needs {fields} fields, got {len(tokens) - 1}"
        )
    values = [_int_field(lineno, t, f"{kind} header field") for t in tokens[1:]]
    if values[0] < 0:
        raise ParseError(lineno, f"negative size {values[0]} in {kind} header")
    if values[1] < 0:
        raise ParseError(lineno, f"negative line count {values[1]} in {kind} header")
    return values


def _parse_pair_lines(stream, n, m, tag, what):
    pairs = []
    last_line = 0
    for lineno, tokens in stream:
        last_line = lineno
        if len(pairs) == m:
            raise ParseError(lineno, f"extra {what} line beyond declared {m}")
        if tokens[0] != tag:
            raise ParseError(lineno, f"expected {what} line starting with {tag!r}")
        if len(tokens) != 3:
            raise ParseError(lineno, f"{what} line needs 2 ids, got {len(tokens) - 1}")
        u = _check_id(lineno, _int_field(lineno, tokens[1], what), n, what + " endpoint")
        v = _check_id(lineno, _int_field(lineno, tokens[2], what), n, what + " endpoint")
        if u == v:
            raise ParseError(lineno, f"self-loop {tag} {u} {v}")
        pairs.append((lineno, u, v))
    if len(pairs) < m:
        raise ParseError(last_line + 1, f"expected {m} {what} lines, found {len(pairs)}")
    return pairs


def load_graph(text):
    stream = _tokenize(text)
    try:
        lineno, tokens = next(stream)
    except StopIteration:
        raise ParseError(1, "empty input, expected graph header") from None
    n, m = _parse_header(lineno, tokens, "p", 2, "graph")
    pairs = _parse_pair_lines(stream, n, m, "e", "edge")
    seen = set()
    edges = []
    for lineno, u, v in pairs:
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ParseError(lineno, f"duplicate edge e {u} {v}")
        seen.add(key)
        edges.append((u, v))
    return GraphInstance(n, edges)


def load_digraph(text):
    stream = _tokenize(text)
    try:
        lineno, tokens = next(stream)
    except StopIteration:
        raise ParseError(1, "empty input, expected digraph header") from None
    n, m = _parse_header(lineno, tokens, "q", 2, "digraph")
    pairs = _parse_pair_lines(stream, n, m, "a", "arc")
    seen = set()
    arcs = []
    for lineno, u, v in pairs:
        if (u, v) in seen:
            raise ParseError(lineno, f"duplicate arc a {u} {v}")
        seen.add((u, v))
        arcs.append((u, v))
    return DigraphInstance(n, arcs)


def load_family(text):
    stream = _tokenize(text)
    try:
        lineno, tokens = next(stream)
    except StopIteration:
        raise ParseError(1, "empty input, expected family header") from None
    n, m, d = _parse_header(lineno, tokens, "h", 3, "family")
    if d < 1:
        raise ParseError(lineno, f"set-size bound must be positive, got {d}")
    sets = []
    last_line = 0
    for lineno, tokens in stream:
        last_line = lineno
        if len(sets) == m:
            raise ParseError(lineno, f"extra set line beyond declared {m}")
        if tokens[0] != "s":
            raise ParseError(lineno, "expected set line starting with 's'")
        elements = [_int_field(lineno, t, "element") for t in tokens[1:]]
        if not elements:
            raise ParseError(lineno, "empty set")
        if len(elements) > d:
            raise ParseError(
                lineno, f"set has {len(elements)} elements, bound is {d}"
            )
        for e in elements:
            _check_id(lineno, e, n, "element")
        if len(set(elements)) != len(elements):
            raise ParseError(lineno, "set repeats an element")
        sets.append(tuple(elements))
    if len(sets) < m:
        raise ParseError(last_line + 1, f"expected {m} set lines, found {len(sets)}")
    return SetFamilyInstance(n, d, sets)


def serialize_graph(g):
    lines = [f"p {g.n} {g.m}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def serialize_digraph(g):
    lines = [f"q {g.n} {g.m}"]
    lines.extend(f"a {u} {v}" for u, v in g.arcs)
    return "\n".join(lines) + "\n"


def serialize_family(f):
    lines = [f"h {f.n} {f.m} {f.d}"]
    lines.extend("s " + " ".join(str(e) for e in s) for s in f.sets)
    return "\n".join(lines) + "\n"
