#!/usr/bin/env python3
# Build unitary Cayley graphs (edge xy <=> x - y invertible) and measure them.

from uct import (RingSpec, clique_number, connected_components, diameter,
                 triameter, unitary_cayley)
from uct.graphio import to_dot

# Upper-triangular 2x2 matrices over GF(3): 27 vertices.  Two matrices are
# adjacent exactly when their diagonals differ in both positions, so the
# graph is 12-regular: (3-1)^2 * 3 units out of 27 elements.
spec = RingSpec.triangular(2, 3, 1)
g = unitary_cayley(spec)
print(spec, "->", g)
print("degrees:", sorted(set(int(d) for d in g.degrees())))
print("components:", len(connected_components(g)))
print("diameter:", diameter(g))
print("triameter:", triameter(g))
print("clique number:", clique_number(g))

# The ring Z_12 for comparison: units are 1, 5, 7, 11, so the graph is
# 4-regular; it is bipartite (evens vs odds) because 12 is even.
zn = unitary_cayley(RingSpec.integers_mod(12))
print("\nzn:12 ->", zn)
print("degrees:", sorted(set(int(d) for d in zn.degrees())))

# Graphs export to DOT for external rendering.
k5 = unitary_cayley(RingSpec.integers_mod(5))
print("\nC_{Z_5} is the complete graph K_5; DOT output:")
print(to_dot(k5))
