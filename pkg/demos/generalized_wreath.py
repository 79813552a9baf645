"""
Generalized wreath product over a poset, lazily
===============================================

Four coordinates: 1 and 2 on top, 3 below both, 4 below 3.  Each vertex
stores one table per coordinate, listed over the values of its ancestors.
"""

from wreathgraphs import Graph, GwpSpec, Poset, gwp_eval, gwp_neighbors, gwp_vertex_count

poset = Poset.from_covers(["1", "2", "3", "4"], [("1", "3"), ("2", "3"), ("3", "4")])
k2 = Graph(["a", "b"], [("a", "b")])
triangle = Graph(["c", "d", "e"], [("c", "d"), ("d", "e"), ("e", "c")])
spec = GwpSpec(poset, [k2, k2, k2, triangle])

print("vertices:", gwp_vertex_count(spec))
print("degree:", spec.predicted_degree())

v = (("a",), ("b",), tuple("bbaa"), tuple("cedcedee"))
for i in poset:
    print("coordinate", i, "evaluates to", gwp_eval(spec, v, i))

# neighbours come from the definition, without building the 419904-vertex graph
for w in gwp_neighbors(spec, v):
    print(" ", w)

# JSON form used by the command line
print(spec.vertex_to_json(v))
