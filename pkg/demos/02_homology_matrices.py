"""The rank-5 lattice representation of the parameter-free symmetry group.

The smooth fiber near the four-node degeneration carries five distinguished
classes: four vanishing cycles plus one more.  Parameter-free symmetries act
through signed permutations of those classes; the representation is the
permutation of the four rational nodes twisted by the Jacobian sign.
"""

from charcubic import (basis_change, generator, homology_action,
                       intersection_form, link_h1, link_monodromy,
                       word_to_map)


def dump(name, m):
    print(name)
    for row in m.to_lists():
        print("   ", row)


for name in ("alpha", "beta", "gamma", "sigma_x", "sigma_y", "sigma_z"):
    dump(name + "*", homology_action(generator(name)))

print()
dump("word beta gamma alpha acts by", homology_action(word_to_map(("beta", "gamma", "alpha"))))

print()
vc = intersection_form("vanishing_cycle")
dump("intersection form, vanishing-cycle basis", vc.matrix)
alpha = intersection_form("alpha")
dump("intersection form, alpha basis", alpha.matrix)

b = basis_change()
dump("change of basis B with B^T Q_alpha B = Q_vc", b)
assert b.transpose() * alpha.matrix * b == vc.matrix

print()
print("both forms present the same boundary homology:")
print("  cokernel:", link_h1(vc), "=", link_h1(alpha))

print()
dump("plumbing monodromy for Euler numbers (-1, -1, -1)",
     link_monodromy((-1, -1, -1)))
