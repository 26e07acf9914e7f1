"""Words, commutation, and the boolean ideal of a graph.
====================================================

A word on the vertices of a simple graph, with no repeated letters, can slide
two neighbouring letters past each other whenever they are NOT adjacent in
the graph.  The classes of words under such slides form a ranked poset: the
boolean ideal.  This script builds a few small ideals and prints what the
library knows about them.
"""

from booleancomplex import (
    Graph,
    enumerate_ideal,
    euler_characteristic,
    format_word,
    normalize,
    path_graph,
    rank_sizes,
    representatives,
    trace_order,
)

# The path 1-2-3: letters 1 and 3 commute, the pairs {1,2} and {2,3} do not.
a3 = Graph(edges=[(1, 2), (2, 3)])

print("normal forms in the path 1-2-3")
for word in [(3, 1), (3, 1, 2), (2, 1), (3, 2, 1)]:
    print(f"  {format_word(word)} ~ {format_word(normalize(word, a3))}")

# A class is exactly the set of linear extensions of its dependence order.
word = normalize((3, 1, 2), a3)
print(f"\nall representatives of {format_word(word)}:",
      " ".join(format_word(w) for w in representatives(word, a3)))
print("dependence order on positions:", sorted(trace_order(word, a3)))

# Every rank of the ideal, for the single-edge graph: two vertices s, t give
# two 1-cells st and ts glued along both endpoints -- a circle.
a2 = Graph(edges=[(1, 2)])
ideal = enumerate_ideal(a2)
print("\nsingle edge: ranks of the ideal")
for r, words in enumerate(ideal.ranks):
    print(f"  rank {r}: " + " ".join(format_word(w) for w in words))

print("\nrank sizes")
for name, g in [
    ("path on 3", a3),
    ("triangle", Graph(edges=[(1, 2), (1, 3), (2, 3)])),
    ("3 isolated vertices", Graph(vertices=[1, 2, 3])),
    ("path on 6", path_graph(6)),
]:
    sizes = rank_sizes(g)
    chi = euler_characteristic(g)
    print(f"  {name:22s} f = {sizes}  chi = {chi}")

# The alternating sum of the rank sizes already predicts the sphere count:
# beta = (-1)^(n-1) (chi - 1).  The next script computes it four ways.
