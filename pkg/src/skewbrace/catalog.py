"""Built-in catalog of small groups, complete per supported order.

Orders 1..15 and 27 carry every isomorphism type; order 16 only has a
handful of named entries and is never treated as complete.  Dihedral
groups are indexed by the rotation order (D4 has order 8).
"""

from __future__ import annotations

import functools
import hashlib
import itertools

from .errors import CatalogIncompleteForOrder, UnknownName, UnsupportedOrder
from .groups import (
    FiniteGroup,
    direct_product,
    inversion_action,
    isomorphism,
    make_group,
    semidirect_product,
)

# number of isomorphism types per order we claim completeness for
GROUP_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2,
                10: 2, 11: 1, 12: 5, 13: 1, 14: 2, 15: 1, 27: 5}

COMPLETE_ORDERS = frozenset(GROUP_COUNTS)


def cyclic(n: int) -> FiniteGroup:
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return make_group(table, f"C{n}")


def dihedral(k: int) -> FiniteGroup:
    """Dihedral group of order 2k (k >= 3): rotations C_k, reflections."""
    G = semidirect_product(cyclic(k), cyclic(2), inversion_action(cyclic(k)))
    return G.with_name(f"D{k}")


def dicyclic(k: int) -> FiniteGroup:
    """Dicyclic group of order 4k: <a,b | a^2k, b^2 = a^k, bab^-1 = a^-1>.

    dicyclic(2) is the quaternion group Q8, dicyclic(4) is Q16.
    """
    m = 2 * k
    n = 4 * k

    def idx(i: int, j: int) -> int:
        return i * 2 + j

    table = [[0] * n for _ in range(n)]
    for i1 in range(m):
        for j1 in range(2):
            for i2 in range(m):
                for j2 in range(2):
                    if j1 == 0:
                        r, s = (i1 + i2) % m, j2
                    elif j2 == 0:
                        r, s = (i1 - i2) % m, 1
                    else:
                        r, s = (i1 - i2 + k) % m, 0
                    table[idx(i1, j1)][idx(i2, j2)] = idx(r, s)
    return make_group(table, f"Dic{k}" if k != 2 else "Q8")


def alternating4() -> FiniteGroup:
    perms = sorted(p for p in itertools.permutations(range(4)) if _is_even(p))
    pos = {p: i for i, p in enumerate(perms)}
    table = [[pos[tuple(p[q[i]] for i in range(4))] for q in perms]
             for p in perms]
    return make_group(table, "A4")


def _is_even(p) -> bool:
    inversions = sum(1 for i in range(len(p)) for j in range(i + 1, len(p))
                     if p[i] > p[j])
    return inversions % 2 == 0


def heisenberg(p: int) -> FiniteGroup:
    """Unitriangular 3x3 group over F_p, order p^3, exponent p for odd p."""
    n = p * p * p

    def idx(a: int, b: int, c: int) -> int:
        return (a * p + b) * p + c

    table = [[0] * n for _ in range(n)]
    for a in range(p):
        for b in range(p):
            for c in range(p):
                i = idx(a, b, c)
                for a2 in range(p):
                    for b2 in range(p):
                        for c2 in range(p):
                            table[i][idx(a2, b2, c2)] = idx(
                                (a + a2) % p, (b + b2) % p,
                                (c + c2 + a * b2) % p)
    return make_group(table, f"Heisenberg-{n}")


def modular27() -> FiniteGroup:
    """Nonabelian group of order 27 and exponent 9: C9 x| C3, b a b^-1 = a^4."""
    def idx(i: int, j: int) -> int:
        return i * 3 + j

    table = [[0] * 27 for _ in range(27)]
    for i in range(9):
        for j in range(3):
            for i2 in range(9):
                for j2 in range(3):
                    table[idx(i, j)][idx(i2, j2)] = idx(
                        (i + i2 * pow(4, j, 9)) % 9, (j + j2) % 3)
    return make_group(table, "M27")


def semidihedral16() -> FiniteGroup:
    act = tuple(tuple((a * e) % 8 for a in range(8)) for e in (1, 3))
    return semidirect_product(cyclic(8), cyclic(2), act).with_name("SD16")


def modular16() -> FiniteGroup:
    act = tuple(tuple((a * e) % 8 for a in range(8)) for e in (1, 5))
    return semidirect_product(cyclic(8), cyclic(2), act).with_name("M16")


def _named(G: FiniteGroup, name: str) -> FiniteGroup:
    return G.with_name(name)


@functools.lru_cache(maxsize=None)
def _entries() -> dict[str, FiniteGroup]:
    c = cyclic
    groups = [
        c(1), c(2), c(3),
        c(4), _named(direct_product(c(2), c(2)), "C2xC2"),
        c(5),
        c(6), _named(dihedral(3), "D3"),
        c(7),
        c(8), _named(direct_product(c(4), c(2)), "C4xC2"),
        _named(direct_product(direct_product(c(2), c(2)), c(2)), "C2xC2xC2"),
        dihedral(4), dicyclic(2),
        c(9), _named(direct_product(c(3), c(3)), "C3xC3"),
        c(10), dihedral(5),
        c(11),
        c(12), _named(direct_product(c(6), c(2)), "C6xC2"),
        dihedral(6), alternating4(), dicyclic(3),
        c(13),
        c(14), dihedral(7),
        c(15),
        # order 16 is deliberately partial (named access only)
        c(16), _named(direct_product(c(8), c(2)), "C8xC2"),
        _named(direct_product(c(4), c(4)), "C4xC4"),
        _named(direct_product(direct_product(c(4), c(2)), c(2)), "C4xC2xC2"),
        _named(direct_product(direct_product(
            direct_product(c(2), c(2)), c(2)), c(2)), "C2xC2xC2xC2"),
        dihedral(8), _named(dicyclic(4), "Q16"), semidihedral16(), modular16(),
        c(27), _named(direct_product(c(9), c(3)), "C9xC3"),
        _named(direct_product(direct_product(c(3), c(3)), c(3)), "C3xC3xC3"),
        heisenberg(3), modular27(),
    ]
    table = {}
    for G in groups:
        assert G.name not in table, f"duplicate catalog name {G.name}"
        table[G.name] = G
    return table


_ALIASES = {"S3": "D3", "V4": "C2xC2", "Dic2": "Q8"}


def catalog_names() -> tuple[str, ...]:
    return tuple(_entries())


def group_by_name(name: str) -> FiniteGroup:
    entries = _entries()
    key = name.strip()
    key = _ALIASES.get(key, key)
    if key not in entries:
        raise UnknownName(f"no catalog group named {name!r}")
    return entries[key]


@functools.lru_cache(maxsize=None)
def groups_of_order(order: int, *, allow_partial: bool = False) \
        -> tuple[FiniteGroup, ...]:
    """All catalog groups of one order, complete unless allow_partial."""
    found = tuple(G for G in _entries().values() if G.order == order)
    if order in COMPLETE_ORDERS:
        if len(found) != GROUP_COUNTS[order]:
            raise CatalogIncompleteForOrder(
                f"catalog stores {len(found)} groups of order {order}, "
                f"expected {GROUP_COUNTS[order]}")
        return found
    if allow_partial:
        return found
    if found:
        raise CatalogIncompleteForOrder(
            f"catalog is not complete for order {order}")
    raise UnsupportedOrder(f"no catalog groups of order {order}")


def catalog(key) -> list[FiniteGroup]:
    """Catalog lookup by order (complete list) or by name (singleton)."""
    if isinstance(key, int):
        return list(groups_of_order(key))
    return [group_by_name(key)]


def type_name(G: FiniteGroup) -> str:
    """Catalog label of the isomorphism class, or a stable fallback."""
    try:
        candidates = groups_of_order(G.order, allow_partial=True)
    except (UnsupportedOrder, CatalogIncompleteForOrder):
        candidates = ()
    for H in candidates:
        if isomorphism(G, H) is not None:
            return H.name
    digest = hashlib.sha256(repr(_fingerprint(G)).encode()).hexdigest()[:8]
    return f"unknown-order-{G.order}-#{digest}"


def _fingerprint(G: FiniteGroup):
    orders = sorted(G.element_order(a) for a in range(G.order))
    return (G.order, G.is_abelian(), orders)
