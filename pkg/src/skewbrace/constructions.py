"""Explicit skew-brace constructions with their advertised properties
asserted at build time.

Each function returns a validated SkewBrace whose circ component is the
input group's own table, so outputs are directly comparable with census
results for the same group.
"""

from __future__ import annotations

from .braces import SkewBrace, gamma, is_bi_skew, left_ideals, make_brace
from .catalog import cyclic
from .errors import (
    BadParameters,
    NotAbelian,
    NotClassTwo,
    NotHomomorphism,
    NotIntoNormModCenter,
)
from .groups import (
    FiniteGroup,
    GroupMap,
    center,
    commutator_subgroup,
    direct_product,
    distinguished_subgroups,
    homomorphisms,
    inversion_action,
    is_power_automorphism,
    quotient,
    semidirect_product,
    subgroup_group,
)


def norm_mod_center(G: FiniteGroup):
    """The quotient N(G)/Z(G) and, per quotient element, its coset of
    representatives inside G (sorted)."""
    dist = distinguished_subgroups(G)
    ngrp, nelems = subgroup_group(G, dist.norm)
    z_local = tuple(sorted(nelems.index(z) for z in dist.center))
    Q, proj = quotient(ngrp, z_local)
    cosets: list[list[int]] = [[] for _ in range(Q.order)]
    for local, g in enumerate(nelems):
        cosets[proj(local)].append(g)
    return Q, tuple(tuple(sorted(c)) for c in cosets)


def psi_construction(G: FiniteGroup, psi, lift=None) -> SkewBrace:
    """Brace with dot(s, t) = s o r o t o r^-1 where r represents psi(s)
    in the norm-mod-center quotient.

    psi maps G onto quotient labels and must be a homomorphism from
    (G, o); the result does not depend on the representative choice,
    which is asserted by recomputing with the opposite choice.
    """
    Q, cosets = norm_mod_center(G)
    images = tuple(psi.images if isinstance(psi, GroupMap) else psi)
    if len(images) != G.order or any(not 0 <= q < Q.order for q in images):
        raise NotIntoNormModCenter(
            f"psi must map all {G.order} elements into the "
            f"{Q.order}-element quotient of the norm by the centre")
    if images[0] != 0 or any(
            images[G.mul(a, b)] != Q.mul(images[a], images[b])
            for a in range(G.order) for b in range(G.order)):
        raise NotHomomorphism("psi is not a homomorphism into the quotient")

    if lift is None:
        lift = tuple(c[0] for c in cosets)
    else:
        lift = tuple(lift)
        if any(lift[q] not in cosets[q] for q in range(Q.order)):
            raise NotIntoNormModCenter("lift picks non-representatives")

    def build(reps):
        table = []
        for s in range(G.order):
            r = reps[images[s]]
            sr = G.mul(s, r)
            ri = G.inv(r)
            table.append(tuple(G.mul(G.mul(sr, t), ri)
                               for t in range(G.order)))
        return tuple(table)

    table = build(lift)
    other = build(tuple(c[-1] for c in cosets))
    assert table == other, "construction must not depend on the lift"

    B = make_brace(table, G)
    assert is_bi_skew(B)
    g = gamma(B)
    for s in range(G.order):
        r = lift[images[s]]
        ri = G.inv(r)
        conj = tuple(G.mul(G.mul(ri, t), r) for t in range(G.order))
        assert g(s) == conj
        assert is_power_automorphism(G, GroupMap(G, G, g(s)))
    return B


def all_psi_braces(G: FiniteGroup) -> list[SkewBrace]:
    """One brace per homomorphism from G into its norm-mod-center
    quotient; distinct homomorphisms give distinct dot tables."""
    Q, _ = norm_mod_center(G)
    braces = [psi_construction(G, f) for f in homomorphisms(G, Q)]
    tables = {B.dot.table for B in braces}
    assert len(tables) == len(braces)
    return braces


def class2_construction(G: FiniteGroup) -> SkewBrace:
    """Brace with dot(s, t) = s o s o t o s^-1 on a class-<=2 group."""
    zc = set(center(G))
    if not set(commutator_subgroup(G)) <= zc:
        raise NotClassTwo("commutator subgroup is not central")
    table = []
    for s in range(G.order):
        ss = G.mul(s, s)
        si = G.inv(s)
        table.append(tuple(G.mul(G.mul(ss, t), si) for t in range(G.order)))
    B = make_brace(tuple(table), G)
    assert is_bi_skew(B)
    g = gamma(B)
    for s in range(G.order):
        si = G.inv(s)
        conj = tuple(G.mul(G.mul(si, t), s) for t in range(G.order))
        assert g(s) == conj
    return B


def inversion_construction(A: FiniteGroup) -> SkewBrace:
    """circ = A x C2, dot = A x| C2 with C2 inverting A; bi-skew, and
    every gamma value is a power automorphism of circ."""
    if not A.is_abelian():
        raise NotAbelian("the inverted factor must be abelian")
    c2 = cyclic(2)
    circ = direct_product(A, c2)
    dot = semidirect_product(A, c2, inversion_action(A))
    B = make_brace(dot, circ)
    assert is_bi_skew(B)
    for m in gamma(B).maps:
        assert is_power_automorphism(circ, GroupMap(circ, circ, m))
    return B


def semidirect_to_brace(A: FiniteGroup, B: FiniteGroup, action) -> SkewBrace:
    """circ = A x| B along the action, dot = A x B; gamma acts on the
    first coordinate only, through the action of the second."""
    action = tuple(tuple(p) for p in action)
    circ = semidirect_product(A, B, action)
    dot = direct_product(A, B)
    out = make_brace(dot, circ)
    g = gamma(out)
    nb = B.order
    for c in range(A.order):
        for d in range(nb):
            expected = tuple(action[d][a] * nb + b
                             for a in range(A.order) for b in range(nb))
            assert g(c * nb + d) == expected
    return out


def cpr_cps_brace(p: int, r: int, s: int) -> SkewBrace:
    """Brace on C_{p^r} x C_{p^s} whose dot twists the second coordinate
    by the product of first-coordinate exponents; the first factor is not
    a left ideal (it is not even dot-closed)."""
    if p < 2 or any(p % d == 0 for d in range(2, p)):
        raise BadParameters(f"p = {p} is not prime")
    if not 1 <= s <= r:
        raise BadParameters("need 1 <= s <= r")
    pr, ps = p ** r, p ** s
    n = pr * ps
    if n > 64:
        raise BadParameters(f"order {n} exceeds the desk bound of 64")
    circ = direct_product(cyclic(pr), cyclic(ps))
    table = [[0] * n for _ in range(n)]
    for i in range(pr):
        for j in range(ps):
            row = table[i * ps + j]
            for a in range(pr):
                for b in range(ps):
                    row[a * ps + b] = ((i + a) % pr) * ps + (j + b + i * a) % ps
    B = make_brace(tuple(tuple(row) for row in table), circ)
    first_factor = tuple(i * ps for i in range(pr))
    closed = all(B.dot.mul(a, b) in set(first_factor)
                 for a in first_factor for b in first_factor)
    assert not closed
    assert first_factor not in left_ideals(B)
    return B
