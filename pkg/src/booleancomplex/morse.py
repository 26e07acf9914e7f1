"""Acyclic matchings on boolean ideals, built by structural induction.

A matching pairs elements along cover relations, each element in at most one
pair, the implicit rank -1 minimum never matched.  Reversing matched edges in
the Hasse diagram must leave no directed cycle; collapsing matched pairs then
realises the complex as a CW-complex with one cell per unmatched element.

``build_h_matching(G, s)`` produces the matching anchored at a vertex s with
the three bookkeeping properties the induction needs:

H1  the unmatched elements are one rank-0 element plus top-rank elements
    (their number is the sphere count of the complex);
H2  restricted to elements containing s, only maximal elements are unmatched,
    beta(G) + beta(G minus s) of them;
H3  a matched pair (sigma, tau) with s in tau either appends s on the right
    (tau = sigma * s) or deletes a letter writable strictly left of s.

The construction recurses along an edge e = {s, t}: the ideal splits into the
block of elements writable as alpha-s-t-gamma and its complement; the
complement pulls back the matching of G - e through the coarsening projection,
the block pulls back the matching of the contraction G/e through the
substitution alpha-x-gamma -> alpha-s-t-gamma.  An isolated anchor instead
doubles the matching of G minus s.  The base cases are edgeless graphs
(pair sigma with pivot*sigma) and the single-edge graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from . import beta as beta_mod
from .graph import Graph, GraphError, UnknownVertexError
from .ideal import (
    admits_adjacent_pair,
    append_letter,
    enumerate_ideal,
    format_word,
    normalize,
    parse_word,
    word_faces,
)

#: H3 is existential over representatives; the word-length cap keeps the
#: exhaustive search finite-small.  Longer words are reported unchecked.
H3_WORD_CAP = 9


@dataclass(frozen=True)
class Matching:
    """A matching on the boolean ideal of ``graph``, anchored at a vertex.

    ``pairs`` holds (lower, upper) normal forms along cover relations;
    ``unmatched_rank0`` is the single unmatched rank-0 element and
    ``unmatched_maximal`` the unmatched top-rank elements.
    """

    graph: Graph
    at_vertex: int
    pairs: tuple[tuple[tuple, tuple], ...]
    unmatched_rank0: tuple
    unmatched_maximal: tuple[tuple, ...]

    @cached_property
    def partner(self):
        """word -> matched partner word, both directions."""
        out = {}
        for lo, up in self.pairs:
            assert lo not in out and up not in out, "element matched twice"
            out[lo] = up
            out[up] = lo
        return out

    def is_matched(self, word):
        return word in self.partner

    def to_json(self):
        return json.dumps(
            {
                "at_vertex": self.at_vertex,
                "pairs": [
                    {"lower": format_word(lo), "upper": format_word(up)}
                    for lo, up in self.pairs
                ],
                "unmatched_rank0": format_word(self.unmatched_rank0),
                "unmatched_maximal": [format_word(w) for w in self.unmatched_maximal],
            },
            indent=2,
        )

    @classmethod
    def from_json(cls, graph, text):
        data = json.loads(text)
        return cls(
            graph=graph,
            at_vertex=data["at_vertex"],
            pairs=tuple(
                (parse_word(p["lower"]), parse_word(p["upper"]))
                for p in data["pairs"]
            ),
            unmatched_rank0=parse_word(data["unmatched_rank0"]),
            unmatched_maximal=tuple(parse_word(w) for w in data["unmatched_maximal"]),
        )


# ----------------------------------------------------------------------
# construction

def build_h_matching(graph, s):
    """Build the anchored acyclic matching of the ideal of ``graph`` at s."""
    if len(graph) == 0:
        raise GraphError("cannot match the ideal of an empty graph")
    if s not in graph:
        raise UnknownVertexError(f"vertex {s} not in graph")
    cache = {}

    def build(g, v):
        key = (g, v)
        got = cache.get(key)
        if got is None:
            got = cache[key] = _build(g, v, build)
        return got

    return build(graph, s)


def _build(g, v, build):
    if len(g) == 1:
        # trivial matching: the lone vertex is the unmatched rank-0 element
        return Matching(g, v, (), (v,), ())
    if not g.edges:
        return _build_edgeless(g, v)
    if len(g) == 2:
        return _build_single_edge(g, v)
    if g.degree(v) == 0:
        return _build_isolated_anchor(g, v, build)
    return _build_along_edge(g, v, build)


def _build_edgeless(g, v):
    # everything commutes: elements are the nonempty subsets, written sorted.
    # Pair sigma with pivot + sigma for every sigma avoiding the pivot.
    pivot = min(u for u in g.vertices if u != v)
    ideal = enumerate_ideal(g)
    pairs = []
    for word in ideal.elements():
        if pivot not in word:
            partner = tuple(sorted(word + (pivot,)))
            pairs.append((word, partner))
    return Matching(g, v, tuple(pairs), (pivot,), ())


def _build_single_edge(g, v):
    # the one-edge graph on {v, t}: elements v, t, vt, tv; pair (v, tv);
    # t and the maximal element vt stay unmatched.
    t = next(u for u in g.vertices if u != v)
    return Matching(g, v, (((v,), (t, v)),), (t,), ((v, t),))


def _build_isolated_anchor(g, v, build):
    # v commutes with everything: the ideal is B(H) + B(H)*v + {v} for
    # H = g minus v.  Double the matching of B(H), send v to 1*v, and close
    # each unmatched maximal sigma with sigma*v.
    h = g.delete_vertex(v)
    anchor = min(u for u in h.vertices if h.degree(u) > 0)
    mh = build(h, anchor)
    pairs = list(mh.pairs)
    for lo, up in mh.pairs:
        pairs.append((append_letter(lo, v, g), append_letter(up, v, g)))
    pairs.append(((v,), append_letter(mh.unmatched_rank0, v, g)))
    for word in mh.unmatched_maximal:
        pairs.append((word, append_letter(word, v, g)))
    return _assemble(g, v, pairs)


def _build_along_edge(g, v, build):
    t = min(g.neighbors(v))
    edge = (v, t)
    x = min(v, t)  # contraction names the merged vertex by the smaller label

    ideal = enumerate_ideal(g)
    in_block = {w: admits_adjacent_pair(w, edge, g) for w in ideal.elements()}

    h = g.delete_edge(edge)
    mh = build(h, v)
    # the complement block maps bijectively onto B(G - e) by re-normalising
    # in the coarser commutation relation
    section = {}
    for w, blocked in in_block.items():
        if not blocked:
            image = normalize(w, h)
            assert image not in section, "projection must be injective off the block"
            section[image] = w
    assert len(section) == enumerate_ideal(h).element_count()

    pairs = []
    for lo, up in mh.pairs:
        glo, gup = section[lo], section[up]
        # a matched pair downstairs lifts to a genuine cover upstairs
        assert glo in word_faces(gup, g), "lifted pair must be a cover"
        pairs.append((glo, gup))

    f = g.contract_edge(edge)
    mf = build(f, x)

    def substitute(word):
        i = word.index(x)
        return normalize(word[:i] + (v, t) + word[i + 1:], g)

    block_size = sum(1 for blocked in in_block.values() if blocked)
    x_size = sum(1 for w in enumerate_ideal(f).elements() if x in w)
    assert block_size == x_size, "substitution must be a bijection onto the block"

    for lo, up in mf.pairs:
        if x in lo and x in up:
            glo, gup = substitute(lo), substitute(up)
            assert glo in word_faces(gup, g), "substituted pair must be a cover"
            pairs.append((glo, gup))

    return _assemble(g, v, pairs)


def _assemble(g, v, pairs):
    """Finish a construction step: locate the unmatched elements and check
    the shape promised by H1."""
    ideal = enumerate_ideal(g)
    matched = set()
    for lo, up in pairs:
        assert lo not in matched and up not in matched, "element matched twice"
        matched.add(lo)
        matched.add(up)
    unmatched0 = [w for w in ideal.ranks[0] if w not in matched]
    assert len(unmatched0) == 1, "exactly one rank-0 element stays unmatched"
    for r in range(1, ideal.top_rank):
        assert all(w in matched for w in ideal.ranks[r]), \
            "middle ranks must be fully matched"
    top = tuple(w for w in ideal.ranks[-1] if w not in matched)
    return Matching(g, v, tuple(pairs), unmatched0[0], top)


# ----------------------------------------------------------------------
# verification

def verify_acyclic(matching, ideal):
    """True iff reversing the matched covers leaves the Hasse diagram free of
    directed cycles.  Any cycle lives in two adjacent ranks, so the check
    runs one rank pair at a time (up along matched covers, down otherwise).
    """
    pair_set = set()
    for lo, up in matching.pairs:
        rl, _ = ideal.index_of(lo)
        ru, _ = ideal.index_of(up)
        if ru != rl + 1 or lo not in word_faces(up, ideal.graph):
            raise GraphError(f"pair ({format_word(lo)}, {format_word(up)}) is not a cover")
        pair_set.add((lo, up))

    for r in range(1, ideal.top_rank + 1):
        # successors: lower -> matched upper, upper -> its unmatched faces
        succ = {}
        for up in ideal.ranks[r]:
            down = []
            for lo in word_faces(up, ideal.graph):
                if (lo, up) in pair_set:
                    succ.setdefault(lo, []).append(up)
                else:
                    down.append(lo)
            succ[up] = down
        state = {}
        for start in succ:
            if state.get(start):
                continue
            stack = [(start, iter(succ.get(start, ())))]
            state[start] = 1  # on stack
            while stack:
                node, it = stack[-1]
                advanced = False
                for nxt in it:
                    mark = state.get(nxt)
                    if mark == 1:
                        return False
                    if mark is None:
                        state[nxt] = 1
                        stack.append((nxt, iter(succ.get(nxt, ()))))
                        advanced = True
                        break
                if not advanced:
                    state[node] = 2  # done
                    stack.pop()
    return True


@dataclass(frozen=True)
class HReport:
    """Outcome of the three anchored-matching properties.  h3 is None when
    some matched word exceeded the representative-search cap."""

    h1: bool
    h2: bool
    h3: bool | None
    failures: tuple[str, ...] = ()

    @property
    def all_hold(self):
        return self.h1 and self.h2 and (self.h3 is not False)


def verify_h_properties(matching, ideal):
    """Check H1-H3 for a matching anchored at ``matching.at_vertex``."""
    g = ideal.graph
    s = matching.at_vertex
    failures = []

    unmatched = [w for w in ideal.elements() if not matching.is_matched(w)]
    top = ideal.top_rank
    bad = [w for w in unmatched if 0 < ideal.rank_of(w) < top]
    rank0 = [w for w in unmatched if ideal.rank_of(w) == 0]
    h1 = not bad and len(rank0) == 1
    if len(g) == 1:
        h1 = unmatched == [(s,)]
    if not h1:
        failures.append(
            f"h1: rank-0 unmatched {[format_word(w) for w in rank0]}, "
            f"middle-rank unmatched {[format_word(w) for w in bad]}"
        )

    rest = g.delete_vertex(s)
    if len(rest) == 0:
        h2 = True
    else:
        expected = (
            beta_mod.beta_recursive(g).value + beta_mod.beta_recursive(rest).value
        )
        loose = []
        for w in ideal.elements():
            if s not in w:
                continue
            mate = matching.partner.get(w)
            if mate is None or s not in mate:
                loose.append(w)
        h2 = len(loose) == expected and all(ideal.rank_of(w) == top for w in loose)
        if not h2:
            failures.append(
                f"h2: expected {expected} maximal unmatched in the s-block, "
                f"got {[format_word(w) for w in loose]}"
            )

    h3 = True
    for lo, up in matching.pairs:
        if s not in up:
            continue
        if len(up) > H3_WORD_CAP:
            h3 = None
            failures.append(f"h3: {format_word(up)} exceeds the search cap, not checked")
            continue
        if s not in lo and append_letter(lo, s, g) == up:
            continue  # tau = sigma * s
        (deleted,) = set(up) - set(lo)
        # deleting s itself can only be excused by tau = sigma * s above:
        # no letter sits strictly left of itself
        if deleted == s or not _some_rep_puts_left(up, deleted, s, g):
            h3 = False
            failures.append(
                f"h3: pair ({format_word(lo)}, {format_word(up)}) deletes "
                f"{deleted} but no representative puts it left of {s}"
            )
    return HReport(h1, h2, h3, tuple(failures))


def _some_rep_puts_left(word, d, s, graph):
    """Exhaustive search over representatives (available-letter order) for
    one writing d before s; branches that emit s first cannot witness."""
    rem = list(word)

    def walk():
        blockers = 0
        for i in range(len(rem)):
            x = rem[i]
            if blockers & (1 << x) == 0:
                if x == d:
                    return True  # every completion keeps d before s
                if x != s:
                    del rem[i]
                    if walk():
                        return True
                    rem.insert(i, x)
            blockers |= graph.neighbor_mask(x)
        return False

    return walk()


# ----------------------------------------------------------------------
# skeleta

@dataclass(frozen=True)
class SkeletonReport:
    """Per-rank cell counts f_r paired with unmatched counts u_r."""

    rank_sizes: tuple[int, ...]
    unmatched: tuple[int, ...]

    def rows(self):
        return list(zip(range(len(self.rank_sizes)), self.rank_sizes, self.unmatched))


def skeleton_sphere_counts(graph, matching):
    """Unmatched counts per skeleton via the top-down recursion
    u_r = f_r - (f_{r+1} - u_{r+1}), seeded by the top-rank unmatched count.
    """
    ideal = enumerate_ideal(graph)
    sizes = ideal.rank_sizes()
    top = ideal.top_rank
    u = [0] * (top + 1)
    u[top] = len(matching.unmatched_maximal)
    for r in range(top - 1, -1, -1):
        u[r] = sizes[r] - (sizes[r + 1] - u[r + 1])
    return SkeletonReport(sizes, tuple(u))


def skeleton_restriction_counts(matching, ideal):
    """Directly count, for each r, the rank-r elements unmatched once the
    matching is restricted to the r-skeleton (pairs reaching above r drop).
    """
    top = ideal.top_rank
    matched_below = [0] * (top + 1)  # per rank: elements matched downward
    for lo, up in matching.pairs:
        matched_below[ideal.rank_of(up)] += 1
    return tuple(
        len(ideal.ranks[r]) - matched_below[r] for r in range(top + 1)
    )
