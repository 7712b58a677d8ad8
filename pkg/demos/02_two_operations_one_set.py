"""Skew braces: a second group operation compatible with the first.

A pair of operations on the same labels forms a skew brace when
s o (t . k) = (s o t) . s^-1 . (s o k) holds throughout.  The gamma maps
gamma(s): t -> s^-1 . (s o t) then act on the dot group by automorphisms
and record how far the two operations differ.
Run:  python demos/02_two_operations_one_set.py
"""

from skewbrace import (
    almost_trivial_brace,
    fix,
    gamma,
    group_by_name,
    ideals,
    is_bi_skew,
    is_metatrivial,
    left_ideals,
    make_brace,
    opposite,
    strong_left_ideals,
    subgroups,
    trivial_brace,
)
from skewbrace.constructions import cpr_cps_brace

q8 = group_by_name("Q8")

print("== the two extreme braces ==")
B = trivial_brace(q8)
print(f"trivial brace (dot = circ): gamma is the identity everywhere: "
      f"{all(m == tuple(range(8)) for m in gamma(B).maps)}")

A = almost_trivial_brace(q8)
print(f"almost trivial brace (dot = opposite): gamma(s) is conjugation "
      f"by s: {gamma(A)(1) == tuple(q8.conj(t, 1) for t in range(8))}")

print("\n== ideals ==")
print(f"left ideals of the almost trivial brace = normal subgroups "
      f"of circ: {len(left_ideals(A))} of {len(subgroups(q8))} subgroups")
print(f"strong left ideals are the left ideals shared with the opposite "
      f"brace: {set(strong_left_ideals(A)) == set(left_ideals(A)) & set(left_ideals(opposite(A)))}")
print(f"fixed points of all gamma maps: {fix(A)} (the centre)")

print("\n== a genuinely twisted example ==")
B4 = cpr_cps_brace(2, 1, 1)
print(f"order-4 brace: dot is cyclic ({B4.dot.is_cyclic()}), "
      f"circ is the Klein table")
print(f"the first factor {{0, 2}} is not dot-closed, hence not a left "
      f"ideal: {(0, 2) not in left_ideals(B4)}")

print("\n== bi-skew braces and metatriviality ==")
print(f"both extreme braces are bi-skew (swapping operations stays a "
      f"brace): {is_bi_skew(B)} / {is_bi_skew(A)}")
w = is_metatrivial(A)
print(f"almost trivial brace on Q8 is metatrivial with witness ideal "
      f"{w}: both the sub-brace and the quotient collapse to trivial")

print("\n== validation catches bad pairs ==")
from skewbrace.errors import BraceLawViolated
from skewbrace.groups import make_group

bad = make_group([[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 1, 0], [3, 2, 0, 1]])
try:
    make_brace(bad, group_by_name("C4"))
except BraceLawViolated as exc:
    print(f"relabeled cyclic table against the standard one: {exc}")
