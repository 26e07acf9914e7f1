"""Finite simple graphs with stable small-integer labels.

Vertex labels are non-negative integers below ``MAX_LABEL``, so vertex sets
and neighbourhoods fit in single machine-word bitmasks.  Graphs are immutable
value objects; every operation returns a new ``Graph`` and never renames the
surviving vertices.  In particular contracting the edge {s, t} keeps
``min(s, t)`` as the label of the merged vertex, which the word-poset
machinery downstream relies on.

The module also houses the registry of named graph families (paths, forked
paths, double forks, T-shapes, cycles, complete graphs, stars, edgeless
graphs), exact canonical keys for isomorphism-keyed memoisation, and a plain
text edge-list format.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_LABEL = 63

#: Largest graph that canonical_key will handle by default.  Beyond this the
#: caller is expected to skip isomorphism-keyed memoisation.
CANONICAL_KEY_LIMIT = 10


class GraphError(ValueError):
    """Bad graph input (unknown vertex, invalid edge, malformed text...)."""


class InvalidEdgeError(GraphError):
    """An edge argument is not an edge of the graph."""


class UnknownVertexError(GraphError):
    """A vertex argument is not a vertex of the graph."""


class FamilyError(GraphError):
    """A family spec names an unknown family or an out-of-range rank."""


class CanonicalKeyLimitError(GraphError):
    """Graph too large for exact canonicalisation; skip memoisation."""


def _bits(mask):
    """Yield the set bit positions of ``mask``, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable finite simple graph on small integer labels."""

    __slots__ = ("_vmask", "_adj", "_hash")

    def __init__(self, edges=(), vertices=()):
        vmask = 0
        for v in vertices:
            vmask |= 1 << self._check_label(v)
        adj = {}
        for e in edges:
            u, v = e
            u = self._check_label(u)
            v = self._check_label(v)
            if u == v:
                raise InvalidEdgeError(f"self-loop at vertex {u}")
            vmask |= (1 << u) | (1 << v)
            adj[u] = adj.get(u, 0) | (1 << v)
            adj[v] = adj.get(v, 0) | (1 << u)
        for v in _bits(vmask):
            adj.setdefault(v, 0)
        self._vmask = vmask
        self._adj = adj
        self._hash = None

    @staticmethod
    def _check_label(v):
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v <= MAX_LABEL:
            raise GraphError(f"vertex label must be an integer in [0, {MAX_LABEL}], got {v!r}")
        return v

    @classmethod
    def _from_masks(cls, vmask, adj):
        g = object.__new__(cls)
        g._vmask = vmask
        g._adj = adj
        g._hash = None
        return g

    # ------------------------------------------------------------------
    # views

    def __len__(self):
        return self._vmask.bit_count()

    def __contains__(self, v):
        return 0 <= v <= MAX_LABEL and (self._vmask >> v) & 1 == 1

    @property
    def vertices(self):
        return tuple(_bits(self._vmask))

    @property
    def vertex_mask(self):
        return self._vmask

    @property
    def edges(self):
        out = []
        for u in _bits(self._vmask):
            higher = self._adj[u] >> (u + 1)
            out.extend((u, u + 1 + w) for w in _bits(higher))
        return out

    @property
    def edge_count(self):
        return sum(self._adj[v].bit_count() for v in self._adj) // 2

    def neighbor_mask(self, v):
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertexError(f"vertex {v} not in graph") from None

    def neighbors(self, v):
        return tuple(_bits(self.neighbor_mask(v)))

    def degree(self, v):
        return self.neighbor_mask(v).bit_count()

    def adjacent(self, u, v):
        return (self.neighbor_mask(u) >> self._check_label(v)) & 1 == 1

    has_edge = adjacent

    def isolated_vertices(self):
        return tuple(v for v in _bits(self._vmask) if self._adj[v] == 0)

    def has_isolated_vertex(self):
        return any(self._adj[v] == 0 for v in _bits(self._vmask))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vmask == other._vmask and self._adj == other._adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._vmask, tuple(self._adj[v] for v in _bits(self._vmask))))
        return self._hash

    def __repr__(self):
        return f"Graph(edges={self.edges!r}, vertices={list(self.vertices)!r})"

    # ------------------------------------------------------------------
    # edge and vertex surgery

    def _check_edge(self, e):
        u, v = e
        if not self.adjacent(u, v):
            raise InvalidEdgeError(f"{{{u}, {v}}} is not an edge of the graph")
        return u, v

    def _check_vertex(self, v):
        if v not in self:
            raise UnknownVertexError(f"vertex {v} not in graph")
        return v

    def add_edge(self, e):
        """New graph with the edge added; endpoints must already be vertices."""
        u, v = e
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise InvalidEdgeError(f"self-loop at vertex {u}")
        adj = dict(self._adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph._from_masks(self._vmask, adj)

    def delete_edge(self, e):
        """Same vertices, the edge removed."""
        u, v = self._check_edge(e)
        adj = dict(self._adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph._from_masks(self._vmask, adj)

    def contract_edge(self, e):
        """Simple contraction: merge the endpoints, drop loops and doubled
        edges.  The merged vertex keeps the smaller endpoint label."""
        u, v = self._check_edge(e)
        keep, drop = (u, v) if u < v else (v, u)
        kbit, dbit = 1 << keep, 1 << drop
        adj = {}
        for w in _bits(self._vmask & ~dbit):
            if w == keep:
                adj[keep] = (self._adj[u] | self._adj[v]) & ~(kbit | dbit)
            else:
                m = self._adj[w]
                if m & dbit:
                    m = (m & ~dbit) | kbit
                adj[w] = m
        return Graph._from_masks(self._vmask & ~dbit, adj)

    def extract_edge(self, e):
        """Remove the edge together with both endpoints (induced subgraph on
        the rest; possibly empty)."""
        u, v = self._check_edge(e)
        return self._induced(self._vmask & ~((1 << u) | (1 << v)))

    def delete_vertex(self, s):
        """Induced subgraph on the other vertices."""
        self._check_vertex(s)
        return self._induced(self._vmask & ~(1 << s))

    def _induced(self, mask):
        return Graph._from_masks(mask, {v: self._adj[v] & mask for v in _bits(mask)})

    def relabel(self, mapping):
        """New graph with vertex ``v`` renamed ``mapping[v]`` (a bijection)."""
        new = {self._check_label(mapping[v]): 0 for v in _bits(self._vmask)}
        if len(new) != len(self):
            raise GraphError("relabel mapping is not injective")
        for v in _bits(self._vmask):
            for w in _bits(self._adj[v]):
                new[mapping[v]] |= 1 << mapping[w]
        vmask = 0
        for v in new:
            vmask |= 1 << v
        return Graph._from_masks(vmask, new)

    # ------------------------------------------------------------------
    # connectivity

    def components(self):
        """Maximal connected subgraphs, ordered by smallest vertex label."""
        out = []
        rem = self._vmask
        while rem:
            comp = rem & -rem
            frontier = comp
            while frontier:
                grown = 0
                for v in _bits(frontier):
                    grown |= self._adj[v]
                frontier = grown & ~comp
                comp |= frontier
            out.append(self._induced(comp))
            rem &= ~comp
        return out

    def is_connected(self):
        return len(self) <= 1 or len(self.components()) == 1

    # ------------------------------------------------------------------
    # canonical keys

    def canonical_key(self, limit=CANONICAL_KEY_LIMIT):
        """Byte string equal for two graphs iff they are isomorphic.

        The key packs the lexicographically least adjacency bit string the
        search visits: orderings are restricted to those compatible with
        iterated neighbourhood refinement (seeded by degrees), extended by
        individualisation inside the first non-singleton cell, with twin
        vertices pruned.  The restriction is isomorphism-invariant and the
        bit string determines the adjacency matrix, so equality of keys is
        exactly isomorphism.
        """
        n = len(self)
        if n > limit:
            raise CanonicalKeyLimitError(f"graph has {n} > {limit} vertices")
        if n == 0:
            return bytes([0])
        verts = self.vertices
        pos = {v: i for i, v in enumerate(verts)}
        nbrs = [tuple(pos[w] for w in _bits(self._adj[v])) for v in verts]
        adjbit = [0] * n
        for i in range(n):
            for j in nbrs[i]:
                adjbit[i] |= 1 << j

        def refine(colors):
            ncolors = len(set(colors))
            while True:
                keys = [
                    (colors[i], tuple(sorted(colors[j] for j in nbrs[i])))
                    for i in range(n)
                ]
                table = {k: r for r, k in enumerate(sorted(set(keys)))}
                colors = [table[k] for k in keys]
                if len(table) == ncolors:
                    return colors
                ncolors = len(table)

        def leaf_key(perm):
            bits = 0
            for a in range(n):
                row = adjbit[perm[a]]
                for b in range(a + 1, n):
                    bits = (bits << 1) | ((row >> perm[b]) & 1)
            return bits

        best = None

        def search(colors):
            nonlocal best
            cells = {}
            for i, c in enumerate(colors):
                cells.setdefault(c, []).append(i)
            target = None
            for c in sorted(cells):
                if len(cells[c]) > 1:
                    target = cells[c]
                    break
            if target is None:
                key = leaf_key(sorted(range(n), key=colors.__getitem__))
                if best is None or key < best:
                    best = key
                return
            tried = []
            for v in target:
                # twins branch into identical subtrees
                if any(
                    adjbit[v] & ~(1 << u) == adjbit[u] & ~(1 << v) for u in tried
                ):
                    continue
                tried.append(v)
                split = [2 * c + (1 if (colors[i] == colors[v] and i != v) else 0)
                         for i, c in enumerate(colors)]
                search(refine(split))

        search(refine([len(nbrs[i]) for i in range(n)]))
        nbytes = (n * (n - 1) // 2 + 7) // 8
        return bytes([n]) + best.to_bytes(nbytes, "big")


# ----------------------------------------------------------------------
# named families

def path_graph(n):
    return Graph(edges=[(i, i + 1) for i in range(n - 1)], vertices=range(n))


def cycle_graph(n):
    if n < 3:
        raise FamilyError("cycle needs at least 3 vertices")
    return Graph(edges=[(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph(
        edges=[(i, j) for i in range(n) for j in range(i + 1, n)], vertices=range(n)
    )


def star_graph(n):
    """Tree on n vertices with centre 0 of degree n - 1."""
    return Graph(edges=[(0, i) for i in range(1, n)], vertices=range(n))


def edgeless_graph(n):
    return Graph(vertices=range(n))


def forked_path_graph(n):
    """Path on n - 1 vertices with an extra leaf forking off one end."""
    g = path_graph(n - 1)
    return Graph(edges=g.edges + [(n - 3, n - 1)])


def double_fork_graph(n):
    """Path with two leaves forking off each end; n >= 5 vertices."""
    edges = [(0, 2), (1, 2), (n - 2, n - 3), (n - 1, n - 3)]
    edges += [(i, i + 1) for i in range(2, n - 3)]
    return Graph(edges=edges)


def tshape_graph(a, b, c):
    """Three paths of lengths a, b, c glued at a common centre vertex 0."""
    edges = []
    v = 0
    for arm in (a, b, c):
        prev = 0
        for _ in range(arm):
            v += 1
            edges.append((prev, v))
            prev = v
    return Graph(edges=edges, vertices=range(v + 1))


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family plus its rank parameter (where applicable)."""

    family: str
    n: int | None = None

    @classmethod
    def parse(cls, text):
        """Parse "NAME" or "NAME:n" (names case-insensitive, e.g. "affineD:6")."""
        name, sep, rank = text.partition(":")
        key = name.strip().lower()
        if key not in _FAMILY_NAMES:
            raise FamilyError(f"unknown family {name!r}")
        if not sep:
            return cls(_FAMILY_NAMES[key], None)
        try:
            return cls(_FAMILY_NAMES[key], int(rank))
        except ValueError:
            raise FamilyError(f"bad rank in family spec {text!r}") from None

    def __str__(self):
        return self.family if self.n is None else f"{self.family}:{self.n}"


# family -> (validity predicate, description of valid n, builder)
_FAMILIES = {
    "A": (lambda n: n >= 1, "n >= 1", path_graph),
    "B": (lambda n: n >= 2, "n >= 2", path_graph),
    "D": (lambda n: n >= 3, "n >= 3", forked_path_graph),
    "E": (lambda n: n in (6, 7, 8), "n in {6, 7, 8}",
          lambda n: tshape_graph(n - 4, 2, 1)),
    "F4": (lambda n: n == 4, "4", lambda n: path_graph(4)),
    "G2": (lambda n: n == 2, "2", lambda n: path_graph(2)),
    "H3": (lambda n: n == 3, "3", lambda n: path_graph(3)),
    "H4": (lambda n: n == 4, "4", lambda n: path_graph(4)),
    "I2": (lambda n: n >= 2, "any m >= 2", lambda n: path_graph(2)),
    "affineA": (lambda n: n >= 1, "n >= 1",
                lambda n: path_graph(2) if n == 1 else cycle_graph(n + 1)),
    "affineB": (lambda n: n >= 3, "n >= 3", forked_path_graph),
    "affineC": (lambda n: n >= 2, "n >= 2", path_graph),
    "affineD": (lambda n: n >= 5, "n >= 5", double_fork_graph),
    "affineE": (lambda n: n in (6, 7, 8), "n in {6, 7, 8}",
                lambda n: tshape_graph(*{6: (2, 2, 2), 7: (3, 3, 1), 8: (5, 2, 1)}[n])),
    "affineF4": (lambda n: n == 4, "4", lambda n: path_graph(5)),
    "affineG2": (lambda n: n == 2, "2", lambda n: path_graph(3)),
    "K": (lambda n: n >= 1, "n >= 1", complete_graph),
    "S": (lambda n: n >= 2, "n >= 2", star_graph),
    "delta": (lambda n: n >= 1, "n >= 1", edgeless_graph),
    "path": (lambda n: n >= 1, "n >= 1", path_graph),
    "cycle": (lambda n: n >= 3, "n >= 3", cycle_graph),
}

_FAMILY_NAMES = {name.lower(): name for name in _FAMILIES}

# families whose rank is fixed; FamilySpec may omit n for these
_IMPLIED_RANK = {"F4": 4, "G2": 2, "H3": 3, "H4": 4, "I2": 2,
                 "affineF4": 4, "affineG2": 2}


def resolve_family(spec):
    """Return (canonical family name, effective n) for a FamilySpec."""
    family = _FAMILY_NAMES.get(spec.family.lower())
    if family is None:
        raise FamilyError(f"unknown family {spec.family!r}")
    n = spec.n
    if n is None:
        n = _IMPLIED_RANK.get(family)
        if n is None:
            raise FamilyError(f"family {family} needs a rank, e.g. {family}:4")
    valid, desc, _ = _FAMILIES[family]
    if not valid(n):
        raise FamilyError(f"family {family} needs n {desc}, got {n}")
    return family, n


def family_graph(spec):
    """Build the named family member.  Accepts a FamilySpec or "NAME:n"."""
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    family, n = resolve_family(spec)
    return _FAMILIES[family][2](n)


# ----------------------------------------------------------------------
# edge-list text format

def parse_edge_list(text):
    """Parse edge-list text into (graph, labels).

    One edge per line as "u v" (unsigned decimal labels); a line with a single
    label declares an isolated vertex.  Blank lines and '#' comments are
    ignored.  External labels are mapped to dense 0..n-1 in sorted order;
    ``labels[i]`` is the external label of internal vertex ``i``.
    """
    edges = []
    singles = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise GraphError(f"line {lineno}: expected integer labels, got {line!r}") from None
        if any(x < 0 for x in nums):
            raise GraphError(f"line {lineno}: labels must be non-negative")
        if len(nums) == 1:
            singles.append(nums[0])
        elif len(nums) == 2:
            if nums[0] == nums[1]:
                raise GraphError(f"line {lineno}: self-loop {nums[0]}")
            edges.append((nums[0], nums[1]))
        else:
            raise GraphError(f"line {lineno}: expected 1 or 2 labels, got {len(nums)}")
    labels = sorted({x for e in edges for x in e} | set(singles))
    dense = {x: i for i, x in enumerate(labels)}
    graph = Graph(
        edges=[(dense[u], dense[v]) for u, v in edges],
        vertices=[dense[x] for x in singles],
    )
    return graph, tuple(labels)


def format_edge_list(graph):
    """Inverse of parse_edge_list for graphs already on dense labels."""
    lines = [f"{u} {v}" for u, v in graph.edges]
    lines += [str(v) for v in graph.isolated_vertices()]
    return "\n".join(lines) + ("\n" if lines else "")
