"""Order statistics of a finite group and the invariants built on them.

Everything is driven by the order profile: the map from each occurring
element order d to the count A(d) of elements of that exact order.  From it
come the solution counts B(m) = #{x : x^m = 1} = sum_{k|m} A(k) (always
divisible by m for a genuine group), cyclic subgroup counts A(d)/phi(d),
the weighted order sums

    sum over x with o(x) | n  of  o(x)^s / phi(o(x))^r

and their excess over the cyclic group of the same order, which is the
quantity whose sign detects structure.  The product of all element orders
is kept in factored form; its closed form n^n / prod p^(B_p) is computed
from the solution counts and cross-checked in tests against the direct
factored product.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .groups import FiniteGroup
from .numtheory import (
    FactoredInteger,
    Scalar,
    divisors,
    exact_exponents,
    factorize,
    mobius_kernel,
    totient,
    weight,
)


class FrobeniusViolated(ValueError):
    """A solution count B(m) not divisible by m: impossible for a group."""


@dataclass(frozen=True, eq=False)
class OrderProfile:
    """Counts of elements by exact order; the sole input to every invariant.

    Only orders that occur are present, values are positive.  Treated as
    immutable everywhere.  Synthetic profiles (tests, corrupted-input
    probes) go through the same validation as profiles read off a group:
    orders divide the group order, there is exactly one identity, counts
    are multiples of phi(d), and they sum to the group order.
    """

    group_order: int
    counts: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        n = self.group_order
        if n < 1:
            raise ValueError(f"group order must be positive, got {n}")
        if self.counts.get(1) != 1:
            raise ValueError("a profile needs exactly one element of order 1")
        total = 0
        for d, count in self.counts.items():
            if d < 1 or n % d:
                raise ValueError(f"order {d} does not divide the group order {n}")
            if count < 1:
                raise ValueError(f"count for order {d} must be positive, got {count}")
            if count % totient(d):
                raise ValueError(
                    f"count {count} for order {d} is not a multiple of phi({d})={totient(d)}"
                )
            total += count
        if total != n:
            raise ValueError(f"profile counts sum to {total}, expected {n}")

    def count(self, d: int) -> int:
        return self.counts.get(d, 0)

    def cyclic_count(self, d: int) -> int:
        """Number of cyclic subgroups of order exactly d."""
        return self.counts.get(d, 0) // totient(d)


@dataclass(frozen=True, eq=False)
class FrobeniusTable:
    """B(m) = #{x : x^m = 1} and the integer ratios B(m)/m, per divisor m."""

    group_order: int
    counts: dict[int, int]
    ratios: dict[int, int]


@lru_cache(maxsize=1024)
def order_profile(group: FiniteGroup) -> OrderProfile:
    return OrderProfile(group.order, dict(Counter(group.element_orders)))


@lru_cache(maxsize=None)
def cyclic_profile(n: int) -> OrderProfile:
    """The profile of a cyclic group: phi(d) elements per divisor d."""
    return OrderProfile(n, {d: totient(d) for d in divisors(n)})


def frobenius_table(profile: OrderProfile) -> FrobeniusTable:
    """Solution counts of x^m = 1 for every divisor m of the group order.

    Raises FrobeniusViolated when some m does not divide B(m); that cannot
    happen for the profile of a group, so it flags corrupted input.
    """
    counts: dict[int, int] = {}
    ratios: dict[int, int] = {}
    for m in divisors(profile.group_order):
        b = sum(profile.count(k) for k in divisors(m))
        if b % m:
            raise FrobeniusViolated(f"B({m}) = {b} is not divisible by {m}")
        counts[m] = b
        ratios[m] = b // m
    return FrobeniusTable(profile.group_order, counts, ratios)


def _require_divisor(profile: OrderProfile, n: int) -> None:
    if n < 1 or profile.group_order % n:
        raise ValueError(
            f"{n} is not a divisor of the group order {profile.group_order}"
        )


def cyclic_subgroup_count(profile: OrderProfile, n: int) -> int:
    """Number of cyclic subgroups whose order divides n."""
    _require_divisor(profile, n)
    return sum(profile.cyclic_count(m) for m in profile.counts if n % m == 0)


def weighted_order_sum(profile: OrderProfile, n: int, r, s) -> Scalar:
    """sum of o(x)^s / phi(o(x))^r over elements with o(x) | n.

    Exact Fraction for integer (r, s), float otherwise.  Grouping by order
    class this is sum_{m|n} A(m) m^s / phi(m)^r.
    """
    _require_divisor(profile, n)
    total: Scalar = Fraction(0) if exact_exponents(r, s) else 0.0
    for m, count in profile.counts.items():
        if n % m == 0:
            total += count * weight(m, r, s)
    return total


def cyclic_excess(profile: OrderProfile, n: int, r, s) -> Scalar:
    """Weighted order sum minus the same sum for the cyclic group of equal
    order; the divisor-restricted comparison invariant.

    The cyclic baseline needs no group construction: a cyclic group has one
    cyclic subgroup per divisor, so its sum over orders dividing n is
    sum_{m|n} m^s/phi(m)^(r-1).  Vanishes identically at r = s = 0.
    """
    _require_divisor(profile, n)
    total: Scalar = Fraction(0) if exact_exponents(r, s) else 0.0
    for m in divisors(n):
        c = profile.cyclic_count(m)
        if c != 1:
            total += (c - 1) * weight(m, r - 1, s)
    return total


def frobenius_expansion(profile: OrderProfile, n: int, r, s) -> Scalar:
    """The weighted order sum evaluated through solution counts:

        sum_{k|n} kernel(k, n/k) * B(k)

    with the Moebius kernel from numtheory.  Algebraically identical to
    weighted_order_sum; kept as a second, structurally different route.
    """
    _require_divisor(profile, n)
    table = frobenius_table(profile)
    total: Scalar = Fraction(0) if exact_exponents(r, s) else 0.0
    for k in divisors(n):
        total += mobius_kernel(k, n // k, r, s) * table.counts[k]
    return total


def product_of_orders(profile: OrderProfile) -> FactoredInteger:
    """prod over all elements of o(x), via the closed form n^n / prod p^(B_p)
    where B_p = sum_{j=1..c_p} B(n / p^j).

    Exponents only; the plain integer would overflow all practical widths
    long before the catalog cap.
    """
    n = profile.group_order
    table = frobenius_table(profile)
    exps: dict[int, int] = {}
    for p, c in factorize(n).items():
        correction = sum(table.counts[n // p**j] for j in range(1, c + 1))
        exps[p] = n * c - correction
    return FactoredInteger.from_exponents(exps)


def product_of_orders_direct(profile: OrderProfile) -> FactoredInteger:
    """The defining product prod_d d^(A(d)), multiplied out in factored form.

    Oracle route for the closed form above.
    """
    out = FactoredInteger()
    for d in sorted(profile.counts):
        out = out * (factorize(d) ** profile.counts[d])
    return out
