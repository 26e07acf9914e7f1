"""The boolean ideal of a graph: commutation classes of repetition-free words.

Words are tuples of distinct vertex labels.  Two words are equivalent when one
turns into the other by repeatedly swapping adjacent letters that are
non-adjacent vertices of the graph; each class is stored as its
lexicographically least member (the greedy normal form: repeatedly emit the
smallest letter all of whose remaining predecessors commute with it).

The classes form a ranked poset under subword order, with rank = length - 1.
The empty word is the implicit rank -1 minimum: never stored, never a cell.

>>> from booleancomplex.graph import path_graph
>>> a3 = path_graph(3)                 # vertices 0-1-2, edges {0,1} and {1,2}
>>> normalize((2, 0, 1), a3)           # 2 and 0 commute, 2 and 1 do not
(0, 2, 1)
>>> rank_sizes(a3)
(3, 5, 4)
"""

from __future__ import annotations

import math
from functools import lru_cache

from .graph import GraphError, UnknownVertexError

#: Guard against runaway enumerations (complete graphs blow up factorially;
#: 9 letters with no commutations is just under a million maximal cells).
DEFAULT_BUDGET = 2_000_000


class BudgetError(RuntimeError):
    """An enumeration or exact computation exceeded its configured budget."""


class UnknownElementError(GraphError):
    """A word does not name an element of the ideal at hand."""


# ----------------------------------------------------------------------
# words and normal forms

def normalize(word, graph):
    """Return the lexicographically least word in the commutation class.

    Greedy: at each step emit the smallest remaining letter whose earlier
    letters in the remaining word are all non-adjacent to it.
    """
    seen = 0
    for x in word:
        if x not in graph:
            raise UnknownVertexError(f"letter {x} is not a vertex of the graph")
        if (seen >> x) & 1:
            raise GraphError(f"repeated letter {x} in word {word!r}")
        seen |= 1 << x
    rem = list(word)
    out = []
    while rem:
        blockers = 0
        best_i = -1
        best = None
        for i, x in enumerate(rem):
            if blockers & (1 << x) == 0 and (best is None or x < best):
                best, best_i = x, i
            blockers |= graph.neighbor_mask(x)
        out.append(best)
        del rem[best_i]
    return tuple(out)


def append_letter(word, x, graph):
    """Normal form of (normal-form word) * x, by insertion.

    x must land after its last neighbour in the word; within the commuting
    tail it goes in front of the first larger letter.
    """
    nbr = graph.neighbor_mask(x)
    d = -1
    for i, w in enumerate(word):
        if (nbr >> w) & 1:
            d = i
    p = len(word)
    for q in range(d + 1, len(word)):
        if word[q] > x:
            p = q
            break
    return word[:p] + (x,) + word[p:]


def delete_letter(word, x, graph):
    """Normal form of the word with the letter x removed (face map).

    Removing a letter from any two representatives of a class lands in the
    same class, so this is well defined on classes.
    """
    if x not in word:
        raise UnknownElementError(f"letter {x} not in word {word!r}")
    return normalize(tuple(w for w in word if w != x), graph)


def word_faces(word, graph):
    """The len(word) distinct codimension-1 faces, as normal forms."""
    return [delete_letter(word, x, graph) for x in word]


def representatives(word, graph):
    """Yield every word of the commutation class, each exactly once.

    The class members are exactly the linear extensions of the dependence
    order, so the walk picks any currently available letter (one with no
    remaining dependent letter before it).
    """
    rem = list(word)

    def walk(prefix):
        if not rem:
            yield tuple(prefix)
            return
        blockers = 0
        for i in range(len(rem)):
            x = rem[i]
            if blockers & (1 << x) == 0:
                del rem[i]
                prefix.append(x)
                yield from walk(prefix)
                prefix.pop()
                rem.insert(i, x)
            blockers |= graph.neighbor_mask(x)

    yield from walk([])


def trace_order(word, graph):
    """The dependence partial order on letter positions.

    Pairs (i, j) with i < j such that position i precedes position j in every
    representative: the transitive closure of adjacent-in-the-graph pairs.
    """
    k = len(word)
    reach = [0] * k
    for i in range(k - 1, -1, -1):
        nbr = graph.neighbor_mask(word[i])
        acc = 0
        for j in range(i + 1, k):
            if (nbr >> word[j]) & 1:
                acc |= (1 << j) | reach[j]
        reach[i] = acc
    return frozenset(
        (i, j) for i in range(k) for j in range(i + 1, k) if (reach[i] >> j) & 1
    )


def admits_adjacent_pair(word, edge, graph):
    """Can the class be written with s immediately to the left of t?

    For an edge {s, t} this holds iff both letters occur, s precedes t in the
    dependence order, and no letter sits strictly between them.  Splits the
    ideal into the two blocks the matching construction glues together.
    """
    s, t = edge
    if not graph.adjacent(s, t):
        raise GraphError(f"{{{s}, {t}}} is not an edge of the graph")
    if s not in word or t not in word:
        return False
    si, ti = word.index(s), word.index(t)
    if si > ti:
        return False
    k = len(word)
    reach = [0] * k
    for i in range(k - 1, -1, -1):
        nbr = graph.neighbor_mask(word[i])
        acc = 0
        for j in range(i + 1, k):
            if (nbr >> word[j]) & 1:
                acc |= (1 << j) | reach[j]
        reach[i] = acc
    between = reach[si] & ~(1 << ti)
    return all((reach[p] >> ti) & 1 == 0 for p in _bit_positions(between))


def _bit_positions(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ----------------------------------------------------------------------
# element text form: plain digits below 10, hyphen-joined otherwise

def format_word(word):
    if any(x >= 10 for x in word):
        return "-".join(str(x) for x in word)
    return "".join(str(x) for x in word)


def parse_word(text):
    text = text.strip()
    if not text:
        raise GraphError("empty word")
    if "-" in text:
        return tuple(int(p) for p in text.split("-"))
    return tuple(int(c) for c in text)


# ----------------------------------------------------------------------
# the ideal

class BooleanIdeal:
    """All commutation classes of a graph, grouped by rank, with face data.

    ranks[r] lists the rank-r normal forms sorted lexicographically; face
    tables are built lazily per rank since several consumers only need the
    top one.
    """

    __slots__ = ("graph", "ranks", "_index", "_faces")

    def __init__(self, graph, ranks):
        self.graph = graph
        self.ranks = ranks
        self._index = {
            w: (r, i) for r, words in enumerate(ranks) for i, w in enumerate(words)
        }
        self._faces = [None] * len(ranks)

    def __contains__(self, word):
        return word in self._index

    def index_of(self, word):
        try:
            return self._index[word]
        except KeyError:
            raise UnknownElementError(f"{format_word(word)} is not an element") from None

    def rank_of(self, word):
        return self.index_of(word)[0]

    @property
    def top_rank(self):
        return len(self.ranks) - 1

    def rank_sizes(self):
        return tuple(len(words) for words in self.ranks)

    def element_count(self):
        return sum(len(words) for words in self.ranks)

    def elements(self):
        for words in self.ranks:
            yield from words

    def maximal_elements(self):
        return self.ranks[-1]

    def euler_characteristic(self):
        return sum((-1) ** r * len(words) for r, words in enumerate(self.ranks))

    def face_table(self, r):
        """For each rank-r element, the sorted tuple of its face indices in
        rank r-1.  Every rank-r element has exactly r+1 distinct faces."""
        if not 1 <= r <= self.top_rank:
            raise GraphError(f"rank {r} out of range 1..{self.top_rank}")
        if self._faces[r] is None:
            below = {w: i for i, w in enumerate(self.ranks[r - 1])}
            table = []
            for w in self.ranks[r]:
                faces = tuple(sorted(below[f] for f in word_faces(w, self.graph)))
                assert len(set(faces)) == len(w), "faces of a cell must be distinct"
                table.append(faces)
            self._faces[r] = tuple(table)
        return self._faces[r]

    def covers(self, word):
        """The codimension-1 faces of an element, as normal forms."""
        r, _ = self.index_of(word)
        if r == 0:
            return []
        return word_faces(word, self.graph)

    def is_cover(self, lower, upper):
        lo, _ = self.index_of(lower)
        up, _ = self.index_of(upper)
        return up == lo + 1 and lower in word_faces(upper, self.graph)


@lru_cache(maxsize=512)
def _enumerate(graph, budget):
    if len(graph) == 0:
        raise GraphError("the boolean ideal is defined for nonempty graphs")
    verts = graph.vertices
    ranks = [tuple((v,) for v in verts)]
    total = len(verts)
    for _ in range(1, len(verts)):
        nxt = set()
        for w in ranks[-1]:
            used = 0
            for x in w:
                used |= 1 << x
            for x in verts:
                if (used >> x) & 1 == 0:
                    nxt.add(append_letter(w, x, graph))
        total += len(nxt)
        if total > budget:
            raise BudgetError(
                f"ideal of {graph!r} exceeds the element budget ({budget})"
            )
        ranks.append(tuple(sorted(nxt)))
    return BooleanIdeal(graph, tuple(ranks))


def enumerate_ideal(graph, budget=DEFAULT_BUDGET):
    """All elements of every rank, deduplicated by normal form (cached)."""
    return _enumerate(graph, budget)


def rank_sizes(graph, budget=DEFAULT_BUDGET):
    return enumerate_ideal(graph, budget).rank_sizes()


def euler_characteristic(graph, budget=DEFAULT_BUDGET):
    """Alternating sum of the rank sizes (the empty face is excluded)."""
    return enumerate_ideal(graph, budget).euler_characteristic()


def count_rank_path(n, k):
    """Closed-form count of length-k classes for the path on n vertices:
    sum_i C(n+1-i, k+1-i) * C(k-1, i-1), with the empty word counted at k=0.
    """
    if n < 1 or not 0 <= k <= n:
        raise GraphError(f"need n >= 1 and 0 <= k <= n, got n={n}, k={k}")
    if k == 0:
        return 1
    return sum(
        math.comb(n + 1 - i, k + 1 - i) * math.comb(k - 1, i - 1)
        for i in range(1, k + 1)
    )
