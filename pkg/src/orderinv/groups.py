"""Explicit finite groups as dense Cayley tables.

A group of order n lives on indices 0..n-1 with the identity pinned at
index 0.  Instances are immutable and carry their element orders, so all
order statistics downstream are pure table reads.

Construction comes in two flavors: trusted family constructors (cyclic,
dihedral, generalized quaternion, symmetric, elementary abelian, direct
products, and the odd-by-inversion semidirect family) whose tables are
correct by construction, and untrusted ingestion (``from_cayley_table``)
which validates the full group axioms including the O(n^3) associativity
scan.  Constructors accept ``paranoid=True`` to re-run that scan on their
own output.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, lcm

from .numtheory import is_prime

DEFAULT_ORDER_CAP = 5000


class GroupConstructionError(ValueError):
    """Base class for every rejected construction."""


class NotClosed(GroupConstructionError):
    pass


class NoIdentity(GroupConstructionError):
    pass


class NotAssociative(GroupConstructionError):
    pass


class NoInverse(GroupConstructionError):
    pass


class OrderCapExceeded(GroupConstructionError):
    pass


class CoprimalityViolated(GroupConstructionError):
    pass


class ParityViolated(GroupConstructionError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """Immutable multiplication structure; equality is identity.

    mul[i][j] is the product of elements i and j, inv[i] the inverse,
    element_orders[i] the multiplicative order of i.
    """

    order: int
    mul: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    element_orders: tuple[int, ...]
    label: str

    def __repr__(self):  # tables are bulky; keep reprs scannable
        return f"FiniteGroup({self.label!r}, order={self.order})"


def _check_latin_and_identity(mul) -> None:
    n = len(mul)
    full = frozenset(range(n))
    for i, row in enumerate(mul):
        if len(row) != n:
            raise NotClosed(f"row {i} has length {len(row)}, expected {n}")
        bad = [x for x in row if not (0 <= x < n)]
        if bad:
            raise NotClosed(f"row {i} contains out-of-range entry {bad[0]}")
        if frozenset(row) != full:
            raise NotClosed(f"row {i} is not a permutation of 0..{n - 1}")
    for j in range(n):
        if frozenset(mul[i][j] for i in range(n)) != full:
            raise NotClosed(f"column {j} is not a permutation of 0..{n - 1}")
    for i in range(n):
        if mul[0][i] != i:
            raise NoIdentity(f"0 is not a left identity at element {i}")
        if mul[i][0] != i:
            raise NoIdentity(f"0 is not a right identity at element {i}")


def _check_associative(mul) -> None:
    n = len(mul)
    for i in range(n):
        row_i = mul[i]
        for j in range(n):
            ij = row_i[j]
            row_ij = mul[ij]
            row_j = mul[j]
            for k in range(n):
                if row_ij[k] != row_i[row_j[k]]:
                    raise NotAssociative(f"({i}*{j})*{k} != {i}*({j}*{k})")


def _inverses(mul) -> tuple[int, ...]:
    n = len(mul)
    inv = [-1] * n
    for i in range(n):
        for j in range(n):
            if mul[i][j] == 0:
                if mul[j][i] != 0:
                    raise NoInverse(f"element {i} has no two-sided inverse")
                inv[i] = j
                break
        if inv[i] < 0:
            raise NoInverse(f"element {i} has no right inverse")
    return tuple(inv)


def _element_orders(mul) -> tuple[int, ...]:
    n = len(mul)
    orders = [1] * n
    for x in range(1, n):
        y = x
        k = 1
        while y != 0:
            y = mul[y][x]
            k += 1
            if k > n:  # cannot happen once the table validated
                raise NotClosed(f"powers of element {x} do not return to identity")
        orders[x] = k
    return tuple(orders)


def _build(mul_rows, label: str, *, check_associativity: bool) -> FiniteGroup:
    mul = tuple(tuple(row) for row in mul_rows)
    if not mul:
        raise NotClosed("empty multiplication table")
    _check_latin_and_identity(mul)
    if check_associativity:
        _check_associative(mul)
    inv = _inverses(mul)
    return FiniteGroup(
        order=len(mul),
        mul=mul,
        inv=inv,
        element_orders=_element_orders(mul),
        label=label,
    )


def from_cayley_table(table, label: str) -> FiniteGroup:
    """Validate an untrusted table against the full group axioms."""
    return _build(table, label, check_associativity=True)


@dataclass(frozen=True)
class PermutationGenSet:
    """Generators as 0-based image tuples on 0..degree-1."""

    degree: int
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        full = frozenset(range(self.degree))
        for g in self.generators:
            if len(g) != self.degree or frozenset(g) != full:
                raise GroupConstructionError(
                    f"generator {g} is not a permutation of 0..{self.degree - 1}"
                )


def from_permutations(
    gens: PermutationGenSet,
    label: str,
    *,
    order_cap: int = DEFAULT_ORDER_CAP,
    paranoid: bool = False,
) -> FiniteGroup:
    """Close a generating set of permutations and index the result.

    The identity gets index 0; the remaining elements are numbered in BFS
    discovery order, which makes the construction deterministic.
    """
    identity = tuple(range(gens.degree))
    elements = [identity]
    index = {identity: 0}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens.generators:
                q = tuple(p[g[t]] for t in range(gens.degree))
                if q not in index:
                    if len(elements) >= order_cap:
                        raise OrderCapExceeded(
                            f"closure of {label} exceeds order cap {order_cap}"
                        )
                    index[q] = len(elements)
                    elements.append(q)
                    nxt.append(q)
        frontier = nxt
    n = len(elements)
    mul = [
        tuple(index[tuple(a[b[t]] for t in range(gens.degree))] for b in elements)
        for a in elements
    ]
    return _build(mul, label, check_associativity=paranoid)


# ----------------------------------------------------------- families

def cyclic(n: int, *, label: str | None = None, paranoid: bool = False) -> FiniteGroup:
    if n < 1:
        raise GroupConstructionError(f"cyclic group needs order >= 1, got {n}")
    mul = [tuple((i + j) % n for j in range(n)) for i in range(n)]
    return _build(mul, label or f"C{n}", check_associativity=paranoid)


def dihedral(n: int, *, label: str | None = None, paranoid: bool = False) -> FiniteGroup:
    """Symmetries of the regular n-gon, order 2n; element (i, j) is
    rotation^i * flip^j, encoded as i + n*j."""
    if n < 1:
        raise GroupConstructionError(f"dihedral parameter must be >= 1, got {n}")

    def mul_one(i1, j1, i2, j2):
        i = (i1 - i2) % n if j1 else (i1 + i2) % n
        return i + n * (j1 ^ j2)

    mul = [
        tuple(mul_one(i1, j1, i2, j2) for j2 in range(2) for i2 in range(n))
        for j1 in range(2)
        for i1 in range(n)
    ]
    return _build(mul, label or f"D{n}", check_associativity=paranoid)


def quaternion_generalized(
    order: int, *, label: str | None = None, paranoid: bool = False
) -> FiniteGroup:
    """Generalized quaternion group of the given 2-power order >= 8."""
    if order < 8 or order & (order - 1):
        raise GroupConstructionError(
            f"generalized quaternion groups exist for 2-power orders >= 8, got {order}"
        )
    m = order // 2  # index of the cyclic half <a>; b^2 = a^(m/2), b a b^-1 = a^-1
    h = m // 2

    def mul_one(i1, j1, i2, j2):
        if j1 == 0:
            return (i1 + i2) % m + m * j2
        if j2 == 0:
            return (i1 - i2) % m + m
        return (i1 - i2 + h) % m

    mul = [
        tuple(mul_one(i1, j1, i2, j2) for j2 in range(2) for i2 in range(m))
        for j1 in range(2)
        for i1 in range(m)
    ]
    return _build(mul, label or f"Q{order}", check_associativity=paranoid)


def symmetric(k: int, *, label: str | None = None, paranoid: bool = False) -> FiniteGroup:
    """All permutations of k points, in lexicographic order (identity first)."""
    if k < 1:
        raise GroupConstructionError(f"symmetric group parameter must be >= 1, got {k}")
    elements = sorted(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(elements)}
    mul = [
        tuple(index[tuple(a[b[t]] for t in range(k))] for b in elements)
        for a in elements
    ]
    return _build(mul, label or f"S{k}", check_associativity=paranoid)


def elementary_abelian(
    p: int, k: int, *, label: str | None = None, paranoid: bool = False
) -> FiniteGroup:
    """(Z/p)^k with componentwise addition; element index is base-p digits."""
    if not is_prime(p):
        raise GroupConstructionError(f"elementary abelian base {p} is not prime")
    if k < 1:
        raise GroupConstructionError(f"elementary abelian rank must be >= 1, got {k}")
    n = p**k
    if n > DEFAULT_ORDER_CAP:
        raise OrderCapExceeded(f"elementary abelian order {n} exceeds cap")
    digits = [tuple((x // p**t) % p for t in range(k)) for x in range(n)]

    def add(a, b):
        out = 0
        for t in range(k):
            out += ((a[t] + b[t]) % p) * p**t
        return out

    mul = [tuple(add(digits[x], digits[y]) for y in range(n)) for x in range(n)]
    return _build(mul, label or f"E{p}^{k}", check_associativity=paranoid)


def direct_product(
    a: FiniteGroup,
    b: FiniteGroup,
    *,
    label: str | None = None,
    order_cap: int = DEFAULT_ORDER_CAP,
    paranoid: bool = False,
) -> FiniteGroup:
    """Componentwise product on pairs, indexed as i_a * |b| + i_b."""
    n = a.order * b.order
    if n > order_cap:
        raise OrderCapExceeded(
            f"direct product order {n} exceeds cap {order_cap}"
        )
    nb = b.order
    mul = []
    for xa in range(a.order):
        row_a = a.mul[xa]
        for xb in range(nb):
            row_b = b.mul[xb]
            mul.append(
                tuple(
                    row_a[ya] * nb + row_b[yb]
                    for ya in range(a.order)
                    for yb in range(nb)
                )
            )
    return _build(mul, label or f"{a.label}x{b.label}", check_associativity=paranoid)


def inversion_semidirect(
    m: int,
    beta: int,
    u: int,
    *,
    label: str | None = None,
    order_cap: int = DEFAULT_ORDER_CAP,
    paranoid: bool = False,
) -> FiniteGroup:
    """Odd cyclic group of order m extended by a cyclic group of order
    2^u * beta whose odd-index elements act by inversion.

    Elements are pairs (i, j) with i mod m, j mod alpha, indexed i*alpha + j;
    the product is (i1 + (-1)^j1 * i2 mod m, j1 + j2 mod alpha).
    """
    if m < 1 or beta < 1 or u < 1:
        raise GroupConstructionError(
            f"semidirect parameters must be positive, got ({m}, {beta}, {u})"
        )
    alpha = 2**u * beta
    if gcd(m, alpha) != 1:
        raise CoprimalityViolated(
            f"gcd({m}, 2^{u}*{beta}) = {gcd(m, alpha)}, expected 1"
        )
    if m % 2 == 0:
        raise ParityViolated(f"m = {m} must be odd")
    if beta % 2 == 0:
        raise ParityViolated(f"beta = {beta} must be odd")
    n = m * alpha
    if n > order_cap:
        raise OrderCapExceeded(f"semidirect order {n} exceeds cap {order_cap}")
    mul = []
    for i1 in range(m):
        for j1 in range(alpha):
            sign = -1 if j1 % 2 else 1
            mul.append(
                tuple(
                    ((i1 + sign * i2) % m) * alpha + (j1 + j2) % alpha
                    for i2 in range(m)
                    for j2 in range(alpha)
                )
            )
    return _build(mul, label or f"C{m}:C{alpha}", check_associativity=paranoid)
