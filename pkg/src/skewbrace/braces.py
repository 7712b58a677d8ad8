"""Skew braces: two group operations on one labeled set, linked by the
compatibility law  s o (t . k) = (s o t) . s^-1 . (s o k).

Conventions follow the group layer: shared identity 0, immutable values,
canonical sorted tuples for subgroup sets.  "dot" is the first operation
(the one whose isomorphism class is the structure's type), "circ" the
second (the ambient/Galois one).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BraceLawViolated,
    IdentityMismatch,
    NotAnIdeal,
    NotALeftIdeal,
    NotBiSkew,
    NotBraceAutomorphismAction,
)
from .groups import (
    FiniteGroup,
    GroupMap,
    Subgroup,
    automorphisms,
    direct_product,
    is_normal,
    is_subgroup,
    isomorphism,
    make_group,
    opposite_group,
    quotient,
    semidirect_product,
    subgroup_group,
    subgroups,
)


@dataclass(frozen=True)
class SkewBrace:
    dot: FiniteGroup
    circ: FiniteGroup

    @property
    def order(self) -> int:
        return self.dot.order

    def is_trivial(self) -> bool:
        return self.dot.table == self.circ.table

    def __repr__(self) -> str:
        return f"SkewBrace(order={self.order})"


@dataclass(frozen=True)
class GammaTable:
    """For each sigma the permutation gamma(sigma), tau -> s^-1 . (s o t)."""

    maps: tuple[tuple[int, ...], ...]

    def __call__(self, sigma: int) -> tuple[int, ...]:
        return self.maps[sigma]


def make_brace(dot, circ) -> SkewBrace:
    """Validate the brace law for a (dot, circ) pair of group tables."""
    if not isinstance(dot, FiniteGroup):
        dot = make_group(dot)
    if not isinstance(circ, FiniteGroup):
        circ = make_group(circ)
    n = dot.order
    if n != circ.order:
        raise IdentityMismatch(
            f"operations act on different sets ({n} vs {circ.order})")
    if dot.table[0] != circ.table[0]:
        raise IdentityMismatch("identity rows differ")
    dt, ct = dot.table, circ.table
    dinv = dot.inverse
    for s in range(n):
        cs = ct[s]
        si = dinv[s]
        for t in range(n):
            left_part = dt[cs[t]][si]
            dtt = dt[t]
            for k in range(n):
                if cs[dtt[k]] != dt[left_part][cs[k]]:
                    raise BraceLawViolated(
                        f"law fails at (s, t, k) = ({s}, {t}, {k})")
    return SkewBrace(dot, circ)


def trivial_brace(G: FiniteGroup) -> SkewBrace:
    return SkewBrace(G, G)


def almost_trivial_brace(G: FiniteGroup) -> SkewBrace:
    return SkewBrace(opposite_group(G), G)


@functools.lru_cache(maxsize=None)
def gamma(B: SkewBrace) -> GammaTable:
    """The gamma table, with its three defining invariants asserted."""
    dot, circ = B.dot, B.circ
    n = B.order
    dt, ct = dot.table, circ.table
    dinv = dot.inverse
    maps = tuple(tuple(dt[dinv[s]][ct[s][t]] for t in range(n))
                 for s in range(n))
    for m in maps:
        assert sorted(m) == list(range(n))
        assert all(m[dt[a][b]] == dt[m[a]][m[b]]
                   for a in range(n) for b in range(n))
    for s in range(n):
        for t in range(n):
            st = ct[s][t]
            composed = tuple(maps[s][maps[t][x]] for x in range(n))
            assert maps[st] == composed
    return GammaTable(maps)


def opposite(B: SkewBrace) -> SkewBrace:
    """Replace dot by its opposite; gamma picks up an inner twist."""
    out = SkewBrace(opposite_group(B.dot), B.circ)
    g, go = gamma(B), gamma(out)
    dt, dinv = B.dot.table, B.dot.inverse
    n = B.order
    for s in range(n):
        twisted = tuple(dt[dt[s][g(s)[x]]][dinv[s]] for x in range(n))
        assert go(s) == twisted
    return out


def swap(B: SkewBrace) -> SkewBrace:
    """The brace with the two operations exchanged (bi-skew braces only)."""
    if not is_bi_skew(B):
        raise NotBiSkew("operations can only be swapped in a bi-skew brace")
    return make_brace(B.circ, B.dot)


@functools.lru_cache(maxsize=None)
def left_ideals(B: SkewBrace) -> tuple[Subgroup, ...]:
    """Subgroups of dot invariant under every gamma(sigma).

    Each one is verified to be a subgroup of circ as well.
    """
    g = gamma(B)
    out = []
    for s in subgroups(B.dot):
        members = frozenset(s)
        if all(frozenset(m[x] for x in s) == members for m in g.maps):
            assert is_subgroup(B.circ, members)
            out.append(s)
    return tuple(out)


@functools.lru_cache(maxsize=None)
def strong_left_ideals(B: SkewBrace) -> tuple[Subgroup, ...]:
    return tuple(s for s in left_ideals(B) if is_normal(B.dot, s))


@functools.lru_cache(maxsize=None)
def ideals(B: SkewBrace) -> tuple[Subgroup, ...]:
    return tuple(s for s in strong_left_ideals(B) if is_normal(B.circ, s))


def fix(B: SkewBrace) -> Subgroup:
    """Common fixed points of all gamma maps; always a left ideal."""
    g = gamma(B)
    out = tuple(t for t in range(B.order) if all(m[t] == t for m in g.maps))
    assert out in left_ideals(B)
    return out


@functools.lru_cache(maxsize=None)
def is_bi_skew(B: SkewBrace) -> bool:
    """True iff every gamma value is an automorphism of circ.

    When true, the swapped pair is itself a valid brace whose gamma is the
    pointwise inverse; both facts are asserted.
    """
    ct = B.circ.table
    n = B.order
    g = gamma(B)
    for m in g.maps:
        if not all(m[ct[a][b]] == ct[m[a]][m[b]]
                   for a in range(n) for b in range(n)):
            return False
    swapped = make_brace(B.circ, B.dot)
    gs = gamma(swapped)
    cinv = B.circ.inverse
    for s in range(n):
        inv_map = [0] * n
        for x in range(n):
            inv_map[g(s)[x]] = x
        assert gs(s) == tuple(inv_map)
        assert gs(s) == g(cinv[s])
    return True


def brace_isomorphism(B1: SkewBrace, B2: SkewBrace) -> GroupMap | None:
    """A bijection preserving both operations, or None."""
    if B1.order != B2.order:
        return None
    f0 = isomorphism(B1.dot, B2.dot)
    if f0 is None:
        return None
    ct1, ct2 = B1.circ.table, B2.circ.table
    n = B1.order
    for a in automorphisms(B1.dot):
        im = tuple(f0.images[x] for x in a.images)
        if all(im[ct1[s][t]] == ct2[im[s]][im[t]]
               for s in range(n) for t in range(n)):
            return GroupMap(B1.dot, B2.dot, im)
    return None


def brace_automorphisms(B: SkewBrace) -> tuple[GroupMap, ...]:
    """Automorphisms of circ that also preserve dot."""
    dt = B.dot.table
    n = B.order
    out = []
    for f in automorphisms(B.circ):
        im = f.images
        if all(im[dt[a][b]] == dt[im[a]][im[b]]
               for a in range(n) for b in range(n)):
            out.append(f)
    return tuple(out)


def brace_automorphism_count(B: SkewBrace) -> int:
    return len(brace_automorphisms(B))


def quotient_brace(B: SkewBrace, I) -> SkewBrace:
    """Quotient by an ideal; dot- and circ-cosets coincide."""
    I = tuple(sorted(I))
    if I not in ideals(B):
        raise NotAnIdeal(f"{I} is not an ideal")
    qdot, proj_dot = quotient(B.dot, I)
    qcirc, proj_circ = quotient(B.circ, I)
    assert proj_dot.images == proj_circ.images
    return make_brace(qdot, qcirc)


def sub_brace(B: SkewBrace, L) -> SkewBrace:
    """The brace induced on a left ideal, relabeled by sorted position."""
    L = tuple(sorted(L))
    if L not in left_ideals(B):
        raise NotALeftIdeal(f"{L} is not a left ideal")
    sdot, elems_d = subgroup_group(B.dot, L)
    scirc, elems_c = subgroup_group(B.circ, L)
    assert elems_d == elems_c
    return make_brace(sdot, scirc)


def product_brace(B1: SkewBrace, B2: SkewBrace, action=None) -> SkewBrace:
    """Semidirect product: dot is the direct product of the dots, circ the
    semidirect product of the circs along an action by brace automorphisms
    of B1.  With no action this is the direct product of braces.
    """
    n2 = B2.order
    if action is None:
        action = tuple(tuple(range(B1.order)) for _ in range(n2))
    action = tuple(tuple(p) for p in action)
    if len(action) != n2:
        raise NotBraceAutomorphismAction(
            "action must assign one map per element of the second brace")
    brace_auts = {f.images for f in brace_automorphisms(B1)}
    for b, p in enumerate(action):
        if p not in brace_auts:
            raise NotBraceAutomorphismAction(
                f"action[{b}] is not a brace automorphism of the first factor")
    dot = direct_product(B1.dot, B2.dot)
    circ = semidirect_product(B1.circ, B2.circ, action)
    B = make_brace(dot, circ)
    first_factor = tuple(a * n2 for a in range(B1.order))
    second_factor = tuple(range(n2))
    assert first_factor in ideals(B)
    assert second_factor in strong_left_ideals(B)
    if all(p == tuple(range(B1.order)) for p in action):
        assert second_factor in ideals(B)
    return B


def is_metatrivial(B: SkewBrace) -> Subgroup | None:
    """First ideal (by increasing size) with trivial sub- and quotient
    brace, or None when there is no such witness."""
    for I in sorted(ideals(B), key=lambda s: (len(s), s)):
        if sub_brace(B, I).is_trivial() and quotient_brace(B, I).is_trivial():
            return I
    return None


def gc_ratio(B: SkewBrace) -> Fraction:
    """Left-ideal count over circ-subgroup count, in lowest terms."""
    return Fraction(len(left_ideals(B)), len(subgroups(B.circ)))
