"""Tour of the exact group layer: tables, lattices, automorphisms.

Every group lives on the labels 0..n-1 with 0 as identity, stored as a
fully validated Cayley table.  Run:  python demos/01_groups_and_lattices.py
"""

from skewbrace import (
    automorphisms,
    distinguished_subgroups,
    group_by_name,
    isomorphism,
    make_group,
    quotient,
    subgroups,
)
from skewbrace.catalog import cyclic, dihedral
from skewbrace.groups import inversion_action, semidirect_product

print("== building groups ==")
klein = make_group([[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]])
print(f"hand-written Klein table validates: order {klein.order}, "
      f"abelian {klein.is_abelian()}")

d5 = dihedral(5)
print(f"{d5.name}: order {d5.order}, "
      f"{len(subgroups(d5))} subgroups (rotations, five reflections, "
      "trivial, full)")

print("\n== semidirect products ==")
c7, c2 = cyclic(7), cyclic(2)
d7 = semidirect_product(c7, c2, inversion_action(c7))
print(f"C7 x| C2 by inversion is dihedral: "
      f"{isomorphism(d7, dihedral(7)) is not None}")

print("\n== automorphisms and distinguished subgroups ==")
q8 = group_by_name("Q8")
print(f"Q8 has {len(automorphisms(q8))} automorphisms "
      f"and {len(subgroups(q8))} subgroups, all normal")
d = distinguished_subgroups(q8)
print(f"centre {d.center}, norm {d.norm} (the whole group: every subgroup "
      "is normal, so every normalizer is everything)")

m27 = group_by_name("M27")
d = distinguished_subgroups(m27)
print(f"{m27.name} (order 27, exponent 9): centre has {len(d.center)} "
      f"elements, norm has {len(d.norm)}")

print("\n== quotients ==")
Q, proj = quotient(q8, distinguished_subgroups(q8).center)
print(f"Q8 modulo its centre is the Klein group: "
      f"{isomorphism(Q, group_by_name('C2xC2')) is not None}")
