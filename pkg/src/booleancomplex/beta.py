"""The sphere count of a graph's boolean complex, by independent methods.

The geometric realisation of the boolean complex of a nonempty finite simple
graph G is homotopy equivalent to a wedge of beta(G) spheres of dimension
|G| - 1.  This module computes beta(G) by:

* the edge recursion  beta(G) = beta(G-e) + beta(G/e) + beta(G-[e])
  (delete / simply contract / extract), with beta(A2) = 1, beta of any graph
  with an isolated vertex = 0, and multiplicativity over components;
* the Euler characteristic,  beta(G) = (-1)^(n-1) (chi - 1);
* the covering-edge-subset sum  sum_{B <= E, V(B) = V} (-1)^(n + |B| - k(B));
* (via the morse and homology modules) unmatched-cell and kernel-rank counts.

Closed forms for the named families and the complete-graph derangement
recurrence live here too, as does the loud cross-check over all methods.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .graph import (
    CANONICAL_KEY_LIMIT,
    FamilySpec,
    Graph,
    GraphError,
    resolve_family,
)
from .ideal import BudgetError, DEFAULT_BUDGET, euler_characteristic

#: 2^24 covering subsets is the most the brute-force subset sum will walk.
SUBSET_EDGE_CAP = 24

#: Largest graph whose homology is computed in a cross-check.
HOMOLOGY_VERTEX_CAP = 7


@dataclass(frozen=True)
class BetaResult:
    """A sphere count together with how it was obtained."""

    value: int
    method: str
    calls: int | None = None  # recursive evaluations, recursion method only


# ----------------------------------------------------------------------
# the edge recursion

def _pick_edge(graph):
    """Edge choice heuristic: an edge at a leaf collapses the recursion to
    two branches (deletion leaves an isolated vertex); otherwise favour a
    minimum-degree endpoint, which helps G - e fall apart."""
    best = None
    for v in graph.vertices:
        d = graph.degree(v)
        if d == 1:
            return (v, graph.neighbors(v)[0])
        if d > 0 and (best is None or d < best[0]):
            best = (d, v)
    v = best[1]
    u = min(graph.neighbors(v), key=graph.degree)
    return (min(u, v), max(u, v))


def beta_recursive(graph, memo=None):
    """Sphere count by the deletion / contraction / extraction recursion.

    ``memo`` may be a dict shared across calls; it is keyed by canonical
    (isomorphism) keys, so relabelled repeats are free.  Graphs above the
    canonicalisation limit are recursed without memoisation.
    """
    if len(graph) == 0:
        raise GraphError("beta is defined for nonempty graphs")
    if memo is None:
        memo = {}
    calls = 0

    def rec(g):
        nonlocal calls
        calls += 1
        n = len(g)
        if n == 0:
            return 1  # the formal value closing the recursion at A2
        if g.has_isolated_vertex():
            return 0
        comps = g.components()
        if len(comps) > 1:
            return math.prod(rec(c) for c in comps)
        if n == 2:
            return 1  # connected two-vertex graph is A2
        key = g.canonical_key() if n <= CANONICAL_KEY_LIMIT else None
        if key is not None and key in memo:
            return memo[key]
        e = _pick_edge(g)
        value = rec(g.delete_edge(e)) + rec(g.contract_edge(e)) + rec(g.extract_edge(e))
        if key is not None:
            memo[key] = value
        return value

    return BetaResult(rec(graph), "recursion", calls)


# ----------------------------------------------------------------------
# Euler characteristic route

def beta_euler(graph, budget=DEFAULT_BUDGET):
    """beta from the alternating rank count: (-1)^(n-1) (chi - 1)."""
    if len(graph) == 0:
        raise GraphError("beta is defined for nonempty graphs")
    chi = euler_characteristic(graph, budget)
    return BetaResult((-1) ** (len(graph) - 1) * (chi - 1), "euler")


# ----------------------------------------------------------------------
# covering edge-subset sum

def beta_subset_formula(graph):
    """Brute-force sum over edge subsets B covering every vertex, signed by
    (-1)^(n + |B| - k(B)) where k counts components of (V, B)."""
    if len(graph) == 0:
        raise GraphError("beta is defined for nonempty graphs")
    edges = graph.edges
    m = len(edges)
    if m > SUBSET_EDGE_CAP:
        raise BudgetError(f"subset formula capped at {SUBSET_EDGE_CAP} edges, got {m}")
    verts = graph.vertices
    n = len(verts)
    pos = {v: i for i, v in enumerate(verts)}
    full = (1 << n) - 1
    emask = [(1 << pos[u]) | (1 << pos[v]) for u, v in edges]
    # vertices coverable by the remaining edge suffix
    suffix = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix[i] = suffix[i + 1] | emask[i]

    parent = list(range(n))
    size = [1] * n

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    total = 0

    def walk(i, covered, nbits, unions):
        nonlocal total
        if covered | suffix[i] != full:
            return  # no completion can cover every vertex
        if i == m:
            # covered == full here; k(B) = n - unions
            total += -1 if (nbits + unions) & 1 else 1
            return
        walk(i + 1, covered, nbits, unions)
        u, v = edges[i]
        ra, rb = find(pos[u]), find(pos[v])
        if ra == rb:
            walk(i + 1, covered | emask[i], nbits + 1, unions)
        else:
            if size[ra] < size[rb]:
                ra, rb = rb, ra
            parent[rb] = ra
            size[ra] += size[rb]
            walk(i + 1, covered | emask[i], nbits + 1, unions + 1)
            size[ra] -= size[rb]
            parent[rb] = rb

    walk(0, 0, 0, 0)
    # exponent n + |B| - k(B) == |B| + unions (mod 2), since k(B) = n - unions
    return BetaResult(total, "subset_formula")


# ----------------------------------------------------------------------
# families

def fibonacci(k):
    """f(1) = f(2) = 1, extended by f(0) = 0."""
    if k < 0:
        raise GraphError(f"negative Fibonacci index {k}")
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def lucas(k):
    a, b = 2, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def cycle_count(n):
    """c(1) = 1, c(n) = c(n-1) + f(n) + f(n-2): spheres for an (n+1)-cycle.
    Equals lucas(n+1) - 2."""
    if n < 1:
        raise GraphError(f"cycle count needs n >= 1, got {n}")
    c = 1
    for k in range(2, n + 1):
        c += fibonacci(k) + fibonacci(k - 2)
    return c


def beta_complete(n):
    """beta(K_n) = (n-1) (beta(K_{n-1}) + beta(K_{n-2})): the derangement
    numbers 0, 1, 2, 9, 44, 265, ..."""
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    if n == 1:
        return 0
    prev2, prev1 = 0, 1  # K1, K2
    for k in range(3, n + 1):
        prev2, prev1 = prev1, (k - 1) * (prev1 + prev2)
    return prev1


_FIXED_FAMILY_BETA = {
    "F4": 2, "G2": 1, "H3": 1, "H4": 2, "I2": 1,
    "affineF4": 3, "affineG2": 1,
}
_E_BETA = {6: 4, 7: 6, 8: 10}
_AFFINE_E_BETA = {6: 7, 7: 9, 8: 16}


def beta_family(spec):
    """Closed-form sphere count for a named family member."""
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    family, n = resolve_family(spec)
    if family in _FIXED_FAMILY_BETA:
        return _FIXED_FAMILY_BETA[family]
    if family in ("A", "B", "path", "affineC"):
        return fibonacci(n - 1)
    if family in ("D", "affineB"):
        return fibonacci(n - 2)
    if family == "affineD":
        return fibonacci(n - 3)
    if family == "E":
        return _E_BETA[n]
    if family == "affineE":
        return _AFFINE_E_BETA[n]
    if family == "affineA":
        return cycle_count(n)
    if family == "cycle":
        return cycle_count(n - 1)
    if family == "K":
        return beta_complete(n)
    if family == "S":
        return 1
    assert family == "delta"
    return 0


def spanning_forest_count(tree):
    """Number of edge subsets of a tree whose edges touch every vertex
    (spanning forests).  Counted directly, independent of any beta route."""
    n = len(tree)
    edges = tree.edges
    if n == 0 or len(edges) != n - 1 or not tree.is_connected():
        raise GraphError("spanning_forest_count expects a tree")
    verts = tree.vertices
    pos = {v: i for i, v in enumerate(verts)}
    emask = [(1 << pos[u]) | (1 << pos[v]) for u, v in edges]
    full = (1 << n) - 1
    count = 0
    for sub in range(1 << len(edges)):
        covered = 0
        for i, em in enumerate(emask):
            if (sub >> i) & 1:
                covered |= em
        if covered == full:
            count += 1
    return count


# ----------------------------------------------------------------------
# cross-checking

@dataclass(frozen=True)
class CrossCheckReport:
    """Values per method, plus the methods skipped for budget reasons."""

    graph: Graph
    values: dict[str, int] = field(default_factory=dict)
    skipped: tuple[str, ...] = ()

    @property
    def agree(self):
        return len(set(self.values.values())) <= 1

    @property
    def value(self):
        return next(iter(self.values.values()))


class CrossCheckError(RuntimeError):
    """Raised when independent methods disagree; carries the report."""

    def __init__(self, report):
        self.report = report
        super().__init__(f"method disagreement: {report.values}")


def cross_check(graph, at_vertex=None, memo=None):
    """Run every applicable method (recursion, Euler, subset sum, top-degree
    GF(2) homology rank, unmatched count of a matching) and compare."""
    from . import homology, morse  # local import: those modules build on this one

    values = {}
    skipped = []
    values["recursion"] = beta_recursive(graph, memo).value
    try:
        values["euler"] = beta_euler(graph).value
    except BudgetError:
        skipped.append("euler")
    if len(graph.edges) <= SUBSET_EDGE_CAP:
        values["subset_formula"] = beta_subset_formula(graph).value
    else:
        skipped.append("subset_formula")
    if len(graph) <= HOMOLOGY_VERTEX_CAP and "euler" in values:
        values["homology"] = homology.top_betti(graph)
        s = at_vertex if at_vertex is not None else graph.vertices[0]
        matching = morse.build_h_matching(graph, s)
        values["morse"] = len(matching.unmatched_maximal)
    else:
        skipped.extend(["homology", "morse"])
    report = CrossCheckReport(graph, values, tuple(skipped))
    if not report.agree:
        raise CrossCheckError(report)
    return report
