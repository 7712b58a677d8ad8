"""Permutation-level machinery: holomorphs, regular subgroups, transport.

Permutations are image tuples acting on the points 0..n-1.  A subgroup of
the symmetric group is regular when evaluation at 0 is a bijection onto
the point set; equivalently, it is transitive with every non-identity
element fixed-point-free.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .errors import NotNormalized, NotRegular, OrderTooLargeForOracle
from .groups import FiniteGroup, automorphisms, generating_set, make_group

Perm = tuple[int, ...]

ORACLE_DEFAULT_BOUND = 8


def compose(p: Perm, q: Perm) -> Perm:
    """p after q."""
    return tuple(map(p.__getitem__, q))


def perm_order(p: Perm) -> int:
    n = len(p)
    seen = [False] * n
    order = 1
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        g = _gcd(order, length)
        order = order // g * length
    return order


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def is_fixed_point_free(p: Perm) -> bool:
    return all(p[i] != i for i in range(len(p)))


def left_translations(G: FiniteGroup) -> tuple[Perm, ...]:
    """lambda(sigma): tau -> sigma*tau; these are simply the table rows."""
    return G.table


def right_translations(G: FiniteGroup) -> tuple[Perm, ...]:
    """rho(sigma): tau -> tau*sigma^-1."""
    n = G.order
    return tuple(tuple(G.table[t][G.inverse[s]] for t in range(n))
                 for s in range(n))


@dataclass(frozen=True)
class RegularSubgroup:
    """A regular permutation group stored as its sorted element tuple."""

    elements: tuple[Perm, ...]

    @property
    def degree(self) -> int:
        return len(self.elements[0])

    def by_start(self) -> dict[int, Perm]:
        return {p[0]: p for p in self.elements}


def regular_subgroup(perms) -> RegularSubgroup:
    """Validate closure, inverses and regularity of a permutation set."""
    elems = frozenset(tuple(p) for p in perms)
    n = len(next(iter(elems)))
    if len(elems) != n:
        raise NotRegular(f"got {len(elems)} permutations on {n} points")
    if sorted(p[0] for p in elems) != list(range(n)):
        raise NotRegular("evaluation at 0 is not a bijection")
    for p in elems:
        for q in elems:
            if compose(p, q) not in elems:
                raise NotRegular("set is not closed under composition")
    return RegularSubgroup(tuple(sorted(elems)))


@functools.lru_cache(maxsize=None)
def holomorph(N: FiniteGroup) -> tuple[Perm, ...]:
    """The permutations tau -> a * phi(tau) for a in N, phi in Aut(N)."""
    n = N.order
    perms = set()
    for f in automorphisms(N):
        fi = f.images
        for a in range(n):
            row = N.table[a]
            perms.add(tuple(row[fi[t]] for t in range(n)))
    out = tuple(sorted(perms))
    assert len(out) == n * len(automorphisms(N))
    return out


def transport_operation(R: RegularSubgroup) -> FiniteGroup:
    """Group on the points with a*b = (eta_a . eta_b)[0], eta_x[0] = x.

    Row a of the resulting table is exactly eta_a, so the left regular
    representation of the result is R itself.
    """
    by_start = R.by_start()
    n = R.degree
    if len(by_start) != n:
        raise NotRegular("evaluation at 0 is not a bijection")
    return make_group(tuple(by_start[a] for a in range(n)))


def operation_from_regular_subgroup(R: RegularSubgroup, G: FiniteGroup,
                                    *, check_normalized: bool = True) \
        -> FiniteGroup:
    """The opposite-transport operation a*b = nu(nu^-1(b) . nu^-1(a)).

    Together with G's own operation the result forms a skew brace; R must
    be normalized by the left translations of G.
    """
    by_start = R.by_start()
    n = R.degree
    if len(by_start) != n or n != G.order:
        raise NotRegular("evaluation at 0 is not a bijection onto G")
    if check_normalized:
        elems = frozenset(R.elements)
        lam = left_translations(G)
        inv_lam = {s: tuple(lam[G.inverse[s]]) for s in generating_set(G)}
        for s in generating_set(G):
            ls = lam[s]
            li = inv_lam[s]
            for p in R.elements:
                if compose(ls, compose(p, li)) not in elems:
                    raise NotNormalized(
                        "subgroup is not normalized by the left translations")
    table = tuple(tuple(by_start[b][a] for b in range(n)) for a in range(n))
    return make_group(table)


def _grow_regular(candidates_by_start, n: int, id_perm: Perm,
                  accept) -> None:
    """Backtracking core shared by both enumerators.

    Grows a closed, fixed-point-free partial subgroup one candidate at a
    time; the candidate always sends 0 to the least uncovered point, so
    every regular subgroup is reached along exactly one branch.
    """

    def close_with(members: dict[int, Perm], new: Perm):
        # members maps value-at-0 to the unique element taking 0 there;
        # pairs among old members were verified in the previous step
        out = dict(members)
        out[new[0]] = new
        work = list(out.values())
        i = len(work) - 1
        while i < len(work):
            p = work[i]
            for j in range(len(work)):
                q = work[j]
                for r in (compose(p, q), compose(q, p)):
                    known = out.get(r[0])
                    if known is not None:
                        if known != r:
                            return None
                        continue
                    if not is_fixed_point_free(r):
                        return None
                    if len(out) >= n:
                        return None
                    out[r[0]] = r
                    work.append(r)
            i += 1
        if n % len(out) != 0:
            return None
        return out

    def grow(members: dict[int, Perm]) -> None:
        if len(members) == n:
            accept(tuple(sorted(members.values())))
            return
        g = min(x for x in range(n) if x not in members)
        for cand in candidates_by_start.get(g, ()):
            grown = close_with(members, cand)
            if grown is not None:
                grow(grown)

    grow({0: id_perm})


@functools.lru_cache(maxsize=None)
def regular_subgroups_in_holomorph(N: FiniteGroup) \
        -> tuple[RegularSubgroup, ...]:
    """All regular subgroups of the holomorph of N, canonically sorted."""
    n = N.order
    hol = holomorph(N)
    id_perm = tuple(range(n))
    pool: dict[int, list[Perm]] = {}
    for p in hol:
        if p == id_perm:
            continue
        if not is_fixed_point_free(p):
            continue
        if n % perm_order(p) != 0:
            continue
        pool.setdefault(p[0], []).append(p)
    for lst in pool.values():
        lst.sort()
    found: list[tuple[Perm, ...]] = []
    _grow_regular(pool, n, id_perm, found.append)
    return tuple(RegularSubgroup(f) for f in sorted(found))


@functools.lru_cache(maxsize=None)
def cyclic_regular_subgroups_in_holomorph(N: FiniteGroup) \
        -> tuple[RegularSubgroup, ...]:
    """The cyclic regular subgroups of Hol(N): one per n-cycle generator.

    Equivalent to filtering the full enumeration down to cyclic subgroups,
    but linear in |Hol(N)|, which keeps large holomorphs tractable.
    """
    n = N.order
    found = set()
    for p in holomorph(N):
        # an n-cycle generates a cyclic regular subgroup, and conversely
        length = 1
        j = p[0]
        while j != 0:
            j = p[j]
            length += 1
        if length != n:
            continue
        elems = [tuple(range(n))]
        q = p
        while q != elems[0]:
            elems.append(q)
            q = compose(q, p)
        found.add(tuple(sorted(elems)))
    return tuple(RegularSubgroup(f) for f in sorted(found))


def regular_subgroups_normalized_by(G: FiniteGroup, *,
                                    bound: int = ORACLE_DEFAULT_BOUND) \
        -> tuple[RegularSubgroup, ...]:
    """Small-order oracle: all regular subgroups of the full symmetric
    group on G's points normalized by G's left translations.

    Searches over fixed-point-free permutations of order dividing n and
    filters complete subgroups by the normalization condition.
    """
    n = G.order
    if n > bound:
        raise OrderTooLargeForOracle(
            f"oracle bound is {bound}, got order {n}")
    id_perm = tuple(range(n))
    pool: dict[int, list[Perm]] = {}
    for p in itertools.permutations(range(n)):
        if p == id_perm or not is_fixed_point_free(p):
            continue
        if n % perm_order(p) != 0:
            continue
        pool.setdefault(p[0], []).append(p)
    for lst in pool.values():
        lst.sort()

    lam = left_translations(G)
    gens = generating_set(G)
    conj_pairs = [(lam[s], tuple(lam[G.inverse[s]])) for s in gens]

    found: list[tuple[Perm, ...]] = []

    def accept(elems: tuple[Perm, ...]) -> None:
        members = frozenset(elems)
        for ls, li in conj_pairs:
            for p in elems:
                if compose(ls, compose(p, li)) not in members:
                    return
        found.append(elems)

    _grow_regular(pool, n, id_perm, accept)
    return tuple(RegularSubgroup(f) for f in sorted(found))
