"""Census and analysis of the group operations compatible with a fixed
ambient group.

For a group (G, o) the engine lists every operation . on the same labels
such that (G, ., o) is a skew brace: one operation per Hopf-Galois
structure on a Galois extension with that Galois group.  Per operation it
reports the structure type, the correspondence image (the left ideals),
surjectivity, the exact image ratio and the grouplike set.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .braces import (
    SkewBrace,
    brace_automorphism_count,
    fix,
    gamma,
    gc_ratio,
    is_bi_skew,
    left_ideals,
    make_brace,
    swap,
)
from .catalog import COMPLETE_ORDERS, groups_of_order, type_name
from .errors import InternalInconsistency, NotBiSkew, OrderTooLarge
from .groups import (
    FiniteGroup,
    GroupMap,
    Subgroup,
    are_isomorphic,
    automorphisms,
    distinguished_subgroups,
    is_power_automorphism,
    isomorphism,
    subgroups,
)
from .perms import (
    cyclic_regular_subgroups_in_holomorph,
    regular_subgroups_in_holomorph,
    transport_operation,
)

ENUM_DEFAULT_BOUND = 27
# orders whose holomorphs we exhaust unconditionally; above this only
# cyclic targets are served unless heavy enumeration is enabled
_FULL_ENUM_MAX = 15


@dataclass(frozen=True)
class HgsReport:
    """Per-structure record: the operation, its type and correspondence."""

    operation: FiniteGroup
    type_name: str
    is_bi_skew: bool
    image: tuple[Subgroup, ...]
    is_surjective: bool
    gc_ratio: Fraction
    grouplikes: Subgroup
    iso_class_id: int
    orbit_size: int


def _transport_table(table, images):
    n = len(images)
    inv = [0] * n
    for a, b in enumerate(images):
        inv[b] = a
    return tuple(tuple(images[table[inv[a]][inv[b]]] for b in range(n))
                 for a in range(n))


def enumerate_operations(circ: FiniteGroup, *, bound: int | None = None,
                         enable_heavy: bool = False) -> tuple[SkewBrace, ...]:
    """All operations making a skew brace with the given circ, as braces
    sorted by operation table."""
    classes = _enumerate_classes(circ, bound or ENUM_DEFAULT_BOUND,
                                 bool(enable_heavy))
    tables = sorted(t for _, orbit, _ in classes for t in orbit)
    return tuple(make_brace(t, circ) for t in tables)


def enumerate_reports(circ: FiniteGroup, *, bound: int | None = None,
                      enable_heavy: bool = False) -> tuple[HgsReport, ...]:
    """Analyzed census, one report per operation, canonically sorted."""
    classes = _enumerate_classes(circ, bound or ENUM_DEFAULT_BOUND,
                                 bool(enable_heavy))
    n_aut = len(automorphisms(circ))
    out = []
    for class_id, (rep, orbit, stab) in enumerate(classes):
        for t in sorted(orbit):
            out.append(analyze(make_brace(t, circ), iso_class_id=class_id,
                               orbit_size=n_aut // stab))
    out.sort(key=lambda r: r.operation.table)
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _enumerate_classes(circ: FiniteGroup, bound: int, enable_heavy: bool):
    """Isomorphism classes of braces over circ.

    Route: per catalog type N of the same order, list the regular
    subgroups of Hol(N); each one with transported structure isomorphic
    to circ is a brace on N, pulled back to circ's labels along one
    isomorphism; the full operation set is the union of the orbits under
    the automorphism action  s ._phi t = phi(phi^-1(s) . phi^-1(t)).
    """
    n = circ.order
    if n > bound:
        raise OrderTooLarge(f"order {n} exceeds the enumeration bound {bound}")
    heavy_route = n > _FULL_ENUM_MAX
    if heavy_route and not enable_heavy and not circ.is_cyclic():
        raise OrderTooLarge(
            f"full enumeration at order {n} requires enable_heavy "
            "(holomorph search over every type is expensive)")
    types = groups_of_order(n)  # raises if the catalog is not complete
    aut_images = [f.images for f in automorphisms(circ)]
    seen: set = set()
    classes = []
    for N in types:
        if heavy_route and not enable_heavy:
            regs = cyclic_regular_subgroups_in_holomorph(N)
        else:
            regs = regular_subgroups_in_holomorph(N)
        for R in regs:
            theta = isomorphism(transport_operation(R), circ)
            if theta is None:
                continue
            dot_tab = _transport_table(N.table, theta.images)
            if dot_tab in seen:
                continue
            orbit = frozenset(_transport_table(dot_tab, im)
                              for im in aut_images)
            rep = min(orbit)
            stab = brace_automorphism_count(make_brace(rep, circ))
            assert len(aut_images) % stab == 0
            assert len(orbit) == len(aut_images) // stab
            classes.append((rep, orbit, stab))
            seen |= orbit
    classes.sort(key=lambda c: c[0])
    return tuple(classes)


def analyze(B: SkewBrace, *, iso_class_id: int = 0,
            orbit_size: int | None = None) -> HgsReport:
    """Correspondence analysis of one brace: the image is exactly the set
    of left ideals, read as subgroups of circ."""
    image = left_ideals(B)
    subs = subgroups(B.circ)
    assert set(image) <= set(subs)
    surjective = len(image) == len(subs)
    ratio = Fraction(len(image), len(subs))
    assert surjective == (ratio == 1)
    if orbit_size is None:
        orbit_size = len(automorphisms(B.circ)) // brace_automorphism_count(B)
    return HgsReport(
        operation=B.dot,
        type_name=type_name(B.dot),
        is_bi_skew=is_bi_skew(B),
        image=image,
        is_surjective=surjective,
        gc_ratio=ratio,
        grouplikes=fix(B),
        iso_class_id=iso_class_id,
        orbit_size=orbit_size,
    )


@dataclass(frozen=True)
class BiskewPairReport:
    ratio_fwd: Fraction
    ratio_swapped: Fraction
    quotient: Fraction
    left_ideal_count: int
    subgroup_counts: tuple[int, int]  # (dot side, circ side)


def biskew_pair_report(B: SkewBrace) -> BiskewPairReport:
    """Compare the correspondence ratios of a bi-skew brace and its swap;
    their quotient is the subgroup-count quotient of the two groups."""
    if not is_bi_skew(B):
        raise NotBiSkew("pair report requires a bi-skew brace")
    S = swap(B)
    fwd = gc_ratio(B)
    back = gc_ratio(S)
    n_dot = len(subgroups(B.dot))
    n_circ = len(subgroups(B.circ))
    assert len(left_ideals(B)) == len(left_ideals(S))
    q = fwd / back
    assert q == Fraction(n_dot, n_circ)
    return BiskewPairReport(fwd, back, q, len(left_ideals(B)),
                            (n_dot, n_circ))


def e_count(circG: FiniteGroup, N: FiniteGroup, *, bound: int | None = None,
            enable_heavy: bool = False) -> int:
    """Structures on a circG-extension whose type is N."""
    ops = enumerate_operations(circG, bound=bound, enable_heavy=enable_heavy)
    return sum(1 for B in ops if are_isomorphic(B.dot, N))


def f_count(circG: FiniteGroup, N: FiniteGroup, *,
            enable_heavy: bool = False) -> int:
    """Operations o on N with (N, ., o) a brace and (N, o) = circG up to
    isomorphism; counted on the holomorph side, independently of e_count."""
    if circG.order != N.order:
        return 0
    if N.order > _FULL_ENUM_MAX and not enable_heavy:
        if not circG.is_cyclic():
            raise OrderTooLarge(
                f"f_count at order {N.order} requires enable_heavy")
        regs = cyclic_regular_subgroups_in_holomorph(N)
    else:
        regs = regular_subgroups_in_holomorph(N)
    return sum(1 for R in regs
               if are_isomorphic(transport_operation(R), circG))


def byott_check(circG: FiniteGroup, N: FiniteGroup, *,
                enable_heavy: bool = False) -> bool:
    """Exact integer identity e(G,N) * |Aut(N)| == f(G,N) * |Aut(G)|."""
    e = e_count(circG, N, enable_heavy=enable_heavy)
    f = f_count(circG, N, enable_heavy=enable_heavy)
    lhs = e * len(automorphisms(N))
    rhs = f * len(automorphisms(circG))
    if lhs != rhs:
        raise InternalInconsistency(
            f"translation identity fails for ({circG.name}, {N.name}): "
            f"{e} * {len(automorphisms(N))} != {f} * "
            f"{len(automorphisms(circG))}")
    return True


def all_surjective(circ: FiniteGroup, *, bound: int | None = None,
                   enable_heavy: bool = False) -> bool:
    """Whether every structure on a circ-extension has surjective
    correspondence (computed by exhaustive census)."""
    return all(r.is_surjective
               for r in enumerate_reports(circ, bound=bound,
                                          enable_heavy=enable_heavy))


def childs_criterion(circ: FiniteGroup) -> bool:
    """Arithmetic criterion: circ cyclic, and no prime divisor p of the
    order divides q - 1 for another prime divisor q."""
    if not circ.is_cyclic():
        return False
    n = circ.order
    primes = []
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            primes.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        primes.append(m)
    return all((q - 1) % p != 0 for p in primes for q in primes)


def kohl_obstruction(circ: FiniteGroup, N: FiniteGroup) -> int | None:
    """Least order m with more characteristic subgroups of N than
    subgroups of circ, or None.  A witness rules out structures of type N,
    which is asserted against the census whenever that census is cheap."""
    if circ.order != N.order:
        raise OrderTooLarge("groups must have equal order")
    char = distinguished_subgroups(N).characteristic
    subs = subgroups(circ)
    witness = None
    for m in range(1, N.order + 1):
        if N.order % m != 0:
            continue
        n_char = sum(1 for s in char if len(s) == m)
        n_sub = sum(1 for s in subs if len(s) == m)
        if n_char > n_sub:
            witness = m
            break
    if witness is not None and circ.order in COMPLETE_ORDERS \
            and circ.order <= _FULL_ENUM_MAX:
        assert e_count(circ, N) == 0
    return witness


def surjective_iff_power_auto(B: SkewBrace) -> bool:
    """Evaluate surjectivity (left-ideal scan) and the power-automorphism
    property of the gamma values (on circ) independently; they must agree
    for bi-skew braces."""
    if not is_bi_skew(B):
        raise NotBiSkew("the equivalence only applies to bi-skew braces")
    by_ideals = set(left_ideals(B)) == set(subgroups(B.circ))
    by_power = all(
        is_power_automorphism(B.circ, GroupMap(B.circ, B.circ, m))
        for m in gamma(B).maps)
    if by_ideals != by_power:
        raise InternalInconsistency(
            f"ideal scan says {by_ideals}, power scan says {by_power}")
    return by_ideals
