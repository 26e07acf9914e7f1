"""GF(2) homology of boolean complexes.

Boundary matrices are indexed by the ideal's cells in normal-form order; a
rank-k cell has k+1 distinct facets, so every column has weight k+1 and the
composite of consecutive boundaries vanishes mod 2.  Homology is reduced: the
implicit empty cell contributes an augmentation row below rank 0.

Columns are stored as Python-int bitsets; rank, kernel and reduced-echelon
bases come from plain bitset Gaussian elimination.  The top boundary has no
incoming differential, so its kernel is the top homology; its reduced-echelon
basis is the canonical cycle basis reported here.

A data file ships hand-derived generating cycles for the path-graph
complexes on 2..6 vertices (cells written as bracketed strings, e.g.
"[123] + [213] + [312] + [321]"); ``an_fixture_suite`` re-verifies them.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources

from .beta import fibonacci
from .graph import Graph, GraphError
from .ideal import (
    BooleanIdeal,
    BudgetError,
    enumerate_ideal,
    format_word,
    normalize,
    parse_word,
)

#: Full Betti vectors use dense elimination in every rank; complete graphs
#: grow factorially, so cap the exact computation at this many vertices.
BETTI_VERTEX_CAP = 7


@dataclass(frozen=True)
class Gf2Chain:
    """A mod-2 chain: a set of equal-rank cells (its support)."""

    dimension: int
    support: frozenset

    def __len__(self):
        return len(self.support)

    def words(self):
        return sorted(self.support)

    def to_json(self):
        return json.dumps([format_word(w) for w in self.words()])

    @classmethod
    def from_json(cls, dimension, text):
        return cls(dimension, frozenset(parse_word(w) for w in json.loads(text)))


@dataclass(frozen=True)
class Gf2Matrix:
    """A matrix over GF(2), stored column-wise as row-index bitsets."""

    n_rows: int
    n_cols: int
    columns: tuple[int, ...]

    def rows(self):
        out = [0] * self.n_rows
        for j, col in enumerate(self.columns):
            for i in _bit_positions(col):
                out[i] |= 1 << j
        return out

    def entry(self, i, j):
        return (self.columns[j] >> i) & 1

    def column_weights(self):
        return [col.bit_count() for col in self.columns]


def _bit_positions(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ----------------------------------------------------------------------
# bitset elimination

def gf2_rank(columns):
    pivots = {}
    rank = 0
    for col in columns:
        while col:
            p = col.bit_length() - 1
            if p in pivots:
                col ^= pivots[p]
            else:
                pivots[p] = col
                rank += 1
                break
    return rank


def gf2_kernel(columns):
    """Kernel basis of the column map, as bitsets over column indices."""
    pivots = {}
    kernel = []
    for j, col in enumerate(columns):
        combo = 1 << j
        while col:
            p = col.bit_length() - 1
            if p not in pivots:
                pivots[p] = (col, combo)
                break
            pcol, pcombo = pivots[p]
            col ^= pcol
            combo ^= pcombo
        else:
            kernel.append(combo)
    return kernel


def gf2_rref(vectors):
    """Reduced echelon form of bitset vectors, pivoting on lowest set bits;
    rows come back sorted by pivot, so the basis is canonical."""
    basis = []  # (pivot, vector)
    for vec in vectors:
        for p, b in basis:
            if (vec >> p) & 1:
                vec ^= b
        if vec:
            p = (vec & -vec).bit_length() - 1
            basis = [(q, b ^ vec if (b >> p) & 1 else b) for q, b in basis]
            basis.append((p, vec))
    basis.sort()
    return [b for _, b in basis]


# ----------------------------------------------------------------------
# the chain complex

class Gf2ChainComplex:
    """Boundary data of a boolean ideal over GF(2), built rank by rank."""

    def __init__(self, ideal: BooleanIdeal):
        self.ideal = ideal
        self._boundaries = {}

    def boundary(self, k):
        """Columns of the rank-k boundary map (k = 0 is the augmentation)."""
        if k not in self._boundaries:
            ideal = self.ideal
            if k == 0:
                cols = tuple([1] * len(ideal.ranks[0]))
            else:
                cols = []
                for faces in ideal.face_table(k):
                    col = 0
                    for i in faces:
                        col |= 1 << i
                    cols.append(col)
                cols = tuple(cols)
            self._boundaries[k] = cols
        return self._boundaries[k]

    def matrix(self, k):
        n_rows = len(self.ideal.ranks[k - 1]) if k >= 1 else 1
        return Gf2Matrix(n_rows, len(self.ideal.ranks[k]), self.boundary(k))


def boundary_matrix(ideal, k):
    """The rank-k over rank-(k-1) incidence matrix over GF(2)."""
    if not 1 <= k <= ideal.top_rank:
        raise GraphError(f"boundary rank {k} out of range 1..{ideal.top_rank}")
    return Gf2ChainComplex(ideal).matrix(k)


def betti_gf2(graph, max_vertices=BETTI_VERTEX_CAP):
    """Reduced mod-2 Betti numbers (b0, ..., b_top), augmentation included."""
    if len(graph) > max_vertices:
        raise BudgetError(
            f"full Betti vectors capped at {max_vertices} vertices, got {len(graph)}"
        )
    ideal = enumerate_ideal(graph)
    cx = Gf2ChainComplex(ideal)
    top = ideal.top_rank
    sizes = ideal.rank_sizes()
    ranks = [gf2_rank(cx.boundary(k)) for k in range(top + 1)]  # includes augmentation
    ranks.append(0)  # nothing above the top
    return tuple(sizes[k] - ranks[k] - ranks[k + 1] for k in range(top + 1))


def top_betti(graph):
    """dim of the top homology = nullity of the top boundary (top cells have
    no coboundary), cheap enough to run where full vectors are not."""
    ideal = enumerate_ideal(graph)
    if ideal.top_rank == 0:
        return len(ideal.ranks[0]) - 1  # reduced: components minus one
    cols = Gf2ChainComplex(ideal).boundary(ideal.top_rank)
    return len(cols) - gf2_rank(cols)


def top_cycle_basis(graph, max_vertices=BETTI_VERTEX_CAP):
    """Canonical basis of the top-degree cycle space: the reduced-echelon
    form of ker(top boundary) in normal-form cell order."""
    if len(graph) > max_vertices:
        raise BudgetError(
            f"cycle bases capped at {max_vertices} vertices, got {len(graph)}"
        )
    ideal = enumerate_ideal(graph)
    top = ideal.top_rank
    cells = ideal.ranks[top]
    if top == 0:
        # reduced kernel of the augmentation: consecutive vertex differences
        vectors = [(1 << i) | (1 << (i + 1)) for i in range(len(cells) - 1)]
    else:
        vectors = gf2_kernel(Gf2ChainComplex(ideal).boundary(top))
    return [
        Gf2Chain(top, frozenset(cells[i] for i in _bit_positions(vec)))
        for vec in gf2_rref(vectors)
    ]


def verify_cycle(graph, chain):
    """True iff the chain's mod-2 boundary vanishes (reduced at rank 0)."""
    ideal = enumerate_ideal(graph)
    for w in chain.support:
        r, _ = ideal.index_of(w)
        if r != chain.dimension:
            raise GraphError(
                f"cell {format_word(w)} has rank {r}, chain says {chain.dimension}"
            )
    if chain.dimension == 0:
        return len(chain.support) % 2 == 0
    parity = 0
    below = {w: i for i, w in enumerate(ideal.ranks[chain.dimension - 1])}
    for w in chain.support:
        for face in set(ideal.covers(w)):
            parity ^= 1 << below[face]
    return parity == 0


# ----------------------------------------------------------------------
# stored generator fixtures for the path-graph complexes

_FIXTURE_FILE = "an_generators.json"
_CELL_RE = re.compile(r"\[([0-9]+)\]")


def _parse_block(text):
    """Parse "[123] + [213] + ..." into a list of letter tuples (1-based)."""
    cells = _CELL_RE.findall(text)
    if not cells or _CELL_RE.sub("", text).strip("+ \t") != "":
        raise GraphError(f"malformed cycle block {text!r}")
    return [tuple(int(c) for c in cell) for cell in cells]


def load_an_generators():
    """The data file: per n, named cell blocks plus generators as sums of
    blocks, resolved into Gf2Chain values on the path with vertices 1..n."""
    raw = json.loads(
        resources.files(__package__).joinpath("data", _FIXTURE_FILE).read_text()
    )
    out = {}
    for n_text, entry in raw.items():
        n = int(n_text)
        graph = Graph(edges=[(k, k + 1) for k in range(1, n)], vertices=range(1, n + 1))
        blocks = {}
        for name, text in entry["blocks"].items():
            cells = frozenset(normalize(w, graph) for w in _parse_block(text))
            blocks[name] = cells
        generators = []
        for names in entry["generators"]:
            support = frozenset()
            for name in names:
                support ^= blocks[name]
            generators.append(Gf2Chain(n - 1, support))
        out[n] = (graph, generators)
    return out


@dataclass(frozen=True)
class FixtureRow:
    n: int
    generator_count: int
    all_cycles: bool
    independent: bool
    count_matches: bool    # == fibonacci(n - 1), the complex's sphere count
    spans_top: bool        # independent + count == top Betti number
    covers_top_cells: bool  # every maximal cell appears in some cycle of the span

    @property
    def ok(self):
        return (
            self.all_cycles
            and self.independent
            and self.count_matches
            and self.spans_top
            and self.covers_top_cells
        )


def an_fixture_suite():
    """Re-verify the stored path-graph generating cycles."""
    rows = []
    for n, (graph, generators) in sorted(load_an_generators().items()):
        ideal = enumerate_ideal(graph)
        cells = ideal.ranks[ideal.top_rank]
        index = {w: i for i, w in enumerate(cells)}
        masks = []
        for chain in generators:
            mask = 0
            for w in chain.support:
                mask |= 1 << index[w]
            masks.append(mask)
        all_cycles = all(verify_cycle(graph, c) for c in generators)
        independent = len(gf2_rref(masks)) == len(masks)
        count_matches = len(generators) == fibonacci(n - 1)
        spans_top = len(generators) == top_betti(graph)
        covered = 0
        for combo in range(1, 1 << len(masks)):
            acc = 0
            for i in _bit_positions(combo):
                acc ^= masks[i]
            covered |= acc
        covers = covered == (1 << len(cells)) - 1
        rows.append(
            FixtureRow(
                n, len(generators), all_cycles, independent,
                count_matches, spans_top, covers,
            )
        )
    return rows
