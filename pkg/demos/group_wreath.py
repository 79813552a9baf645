"""
Generalized wreath products of groups and their Cayley graphs
=============================================================

"""

from wreathgraphs import (
    GwpGroupSpec,
    Poset,
    cyclic_group,
    gwp_act,
    gwp_compose,
    gwp_enumerate,
    gwp_inverse,
    theorem_generating_set,
    verify_cayley_theorem,
)

z2, z3 = cyclic_group(2), cyclic_group(3)
chain = Poset.chain(2)

# Z2 acting on itself at both levels; the lower table reads the upper coordinate
spec = GwpGroupSpec.from_groups(chain, [z2, z2])
elements = gwp_enumerate(spec)
print(len(elements), "elements")

f, h = ((1,), (0, 0)), ((0,), (0, 1))
print("x f      :", gwp_act(spec, ("0", "0"), f))
print("f h      :", gwp_compose(spec, f, h))
print("f^-1     :", gwp_inverse(spec, ((1,), (0, 1))))

# generators: s_i at the all-identities argument, identity elsewhere
gens = theorem_generating_set(chain, [(z3, ["1", "2"]), (z2, ["1"])])
print(len(gens), "generators")

# group side and graph side agree edge for edge
for poset, groups in [
    (Poset.antichain(2), [(z2, ["1"]), (z2, ["1"])]),
    (chain, [(z2, ["1"]), (z2, ["1"])]),
    (Poset.from_covers(["1", "2", "3"], [("1", "3"), ("2", "3")]), [(z2, ["1"])] * 3),
    (chain, [(z3, ["1", "2"]), (z2, ["1"])]),
]:
    report = verify_cayley_theorem(poset, groups)
    print(report.to_dict())
