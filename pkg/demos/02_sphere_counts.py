"""Counting the spheres four independent ways.
===========================================

The boolean complex of a nonempty simple graph on n vertices is homotopy
equivalent to a wedge of spheres of dimension n - 1.  The number of spheres
is computable by an edge recursion (delete / contract / extract), from the
Euler characteristic, as a signed sum over covering edge subsets, and as a
mod-2 homology rank.  They always agree; the library checks that loudly.
"""

from booleancomplex import (
    Graph,
    beta_complete,
    beta_euler,
    beta_family,
    beta_recursive,
    beta_subset_formula,
    complete_graph,
    cross_check,
    family_graph,
    path_graph,
    spanning_forest_count,
    star_graph,
)

gallery = [
    ("one edge", Graph(edges=[(0, 1)])),
    ("path on 5", path_graph(5)),
    ("triangle + 2 pendants", Graph(edges=[(0, 1), (1, 2), (2, 0), (0, 3), (0, 4)])),
    ("star on 6", star_graph(6)),
    ("complete on 5", complete_graph(5)),
    ("4-cycle", family_graph("cycle:4")),
]

print("four methods on a small gallery")
for name, g in gallery:
    rec = beta_recursive(g)
    eul = beta_euler(g).value
    sub = beta_subset_formula(g).value
    print(f"  {name:24s} recursion={rec.value:4d} (calls {rec.calls:3d})  "
          f"euler={eul:4d}  subsets={sub:4d}")

# cross_check also runs the matching and homology routes and raises on any
# disagreement; the report carries every value.
report = cross_check(path_graph(4))
print("\ncross-check on the 4-path:", report.values)

# Closed forms for the classical families.  A 'row' prints the wedge shape:
# count * S^(dimension).
print("\nfamily table")
for spec in ["A:7", "D:7", "E:8", "F4", "H4",
             "affineA:5", "affineB:7", "affineC:7", "affineD:7", "affineE:8"]:
    g = family_graph(spec)
    count = beta_family(spec)
    print(f"  {spec:10s} -> {count:3d} spheres of dimension {len(g) - 1}")

# Complete graphs give the derangement numbers...
print("\ncomplete graphs:", [beta_complete(n) for n in range(1, 8)])

# ...and for a tree the count is simply its number of spanning forests.
tree = Graph(edges=[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)])
print("tree count:", beta_recursive(tree).value,
      "= spanning forests:", spanning_forest_count(tree))
