"""
Cartesian, lexicographic and wreath products
============================================

"""

from wreathgraphs import (
    Graph,
    are_isomorphic,
    cartesian_product,
    cycle_graph,
    lexicographic_product,
    wreath_product_graphs,
)

k2 = Graph(["u1", "v1"], [("u1", "v1")])
k2b = Graph(["u2", "v2"], [("u2", "v2")])
triangle = Graph(["c", "d", "e"], [("c", "d"), ("d", "e"), ("e", "c")])

# the square: K2 x K2 is a 4-cycle
square = cartesian_product(k2, k2b)
print("K2 x K2 ~ C4:", are_isomorphic(square, cycle_graph(4)) is not None)

# lexicographic degree is d1 * n2 + d2
lex = lexicographic_product(triangle, k2)
print("triangle[K2] degree:", lex.regular_degree())

# K2 wr K2 gives an octagon; vertices are (function on the base, base vertex)
octagon = wreath_product_graphs(k2b, k2)
print("K2 wr K2:", len(octagon), "vertices, degree", octagon.regular_degree())
print("isomorphic to C8:", are_isomorphic(octagon, cycle_graph(8)) is not None)
print("sample vertex:", octagon.vertices[0], "->", octagon.neighbors(octagon.vertices[0]))

big = wreath_product_graphs(triangle, k2)
print("triangle wr K2:", len(big), "vertices, degree", big.regular_degree(), "connected", big.is_connected())

# Graphviz output
print(square.to_dot())
