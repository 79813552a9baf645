"""
Posets, ancestral sets and block structures
===========================================

"""

from wreathgraphs import BlockStructure, Poset

# a poset is given by its Hasse covers, written as (upper, lower)
p = Poset.from_covers(["1", "2", "3", "4"], [("1", "3"), ("2", "3"), ("3", "4")])
print("elements:", p.elements)

# A(i) collects everything strictly above i, H(i) everything strictly below
for i in p:
    print(i, "A =", p.ancestral_set(i), "H =", p.hereditary_set(i))

# upward-closed subsets, smallest first
print("ancestral subsets:", p.ancestral_family())
print("linear extension:", p.linear_extension())

# with two points per coordinate, count the permutations preserving every ~_J
for name, q in [("chain", Poset.chain(2)), ("antichain", Poset.antichain(2))]:
    blocks = BlockStructure(q, [["x", "y"], ["x", "y"]])
    print(name, "block automorphisms:", len(blocks.block_automorphisms()))
