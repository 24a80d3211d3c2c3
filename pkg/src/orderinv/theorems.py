"""Executable claims pairing an analytic sign with a structural condition.

Every check computes the cyclic-excess functional (or another invariant)
on one side and evaluates the structural characterization on the other,
then records whether the two sides agree.  A one-sided implementation
bug therefore shows up as ``consistent = False`` instead of passing
silently.  Verdicts never hide failures: the inequality, the equality
condition and their agreement are reported as separate fields.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .groups import FiniteGroup, inversion_semidirect
from .numtheory import (
    divisor_count,
    divisor_power_sum,
    divisors,
    exact_exponents,
    totient,
)
from .order_stats import (
    cyclic_excess,
    cyclic_profile,
    cyclic_subgroup_count,
    frobenius_table,
    order_profile,
    product_of_orders,
)
from .structure import (
    DEFAULT_SUBGROUP_CAP,
    count_cyclic_subgroups,
    is_cyclic,
    is_nilpotent,
    subgroup_as_group,
    unique_subgroup_of_order,
)

# approximate mode asserts strict signs only when they clear this margin
APPROX_SIGN_MARGIN = 1e-6


class ParameterDomainViolated(ValueError):
    """(r, s) or n lies outside the domain the claim is stated for."""


class PreconditionViolated(ValueError):
    """The group does not satisfy the claim's standing hypothesis."""


class EqualityRouteMismatch(RuntimeError):
    """Two supposedly equivalent equality criteria disagreed."""


@dataclass(frozen=True)
class TheoremVerdict:
    """One claim evaluated on one group at one parameter point.

    ``consistent`` is the headline: the analytic side (sign of the
    excess) and the structural side must match the way the claim says.
    A False here on a genuine group means a bug or a counterexample,
    and sweeps treat it as a reportable event either way.
    """

    claim: str
    group: str
    parameters: tuple[tuple[str, object], ...]
    sign: str  # "neg" | "zero" | "pos"
    inequality_holds: bool
    equality_condition_holds: bool
    consistent: bool
    mode: str  # "exact" | "approximate"
    witness: str = ""


def _mode_for(r, s) -> str:
    return "exact" if exact_exponents(r, s) else "approximate"


def _sign_of(value, mode: str) -> str:
    if mode == "exact":
        if value > 0:
            return "pos"
        if value < 0:
            return "neg"
        return "zero"
    if value > APPROX_SIGN_MARGIN:
        return "pos"
    if value < -APPROX_SIGN_MARGIN:
        return "neg"
    return "zero"


def _equality_consistent(sign: str, condition: bool, mode: str) -> bool:
    """Does "excess vanishes iff condition" hold at this point?

    Exact mode demands the biconditional.  In approximate mode a "zero"
    sign only means "within tolerance", so the indeterminate direction
    (tiny value, condition false) is not treated as a refutation; the
    falsifiable direction (condition true, sign strict) still is.
    """
    if mode == "exact":
        return (sign == "zero") == condition
    return not (condition and sign != "zero")


def _require_divisor(group: FiniteGroup, n: int) -> None:
    if n < 1 or group.order % n:
        raise ParameterDomainViolated(
            f"n={n} does not divide the group order {group.order}"
        )


def check_frobenius_divisibility(group: FiniteGroup) -> TheoremVerdict:
    """Each divisor m of |G| divides its solution count B(m), and B(m) >= m.

    All counts hit the floor exactly when the group is cyclic.
    """
    profile = order_profile(group)
    table = frobenius_table(profile)  # raises FrobeniusViolated if m never divides B(m)
    at_floor = all(table.counts[m] == m for m in table.counts)
    low = [m for m, b in table.counts.items() if b < m]
    sign = "zero" if at_floor else "pos"
    condition = is_cyclic(group)
    return TheoremVerdict(
        claim="frobenius-divisibility",
        group=group.label,
        parameters=(("n", group.order),),
        sign=sign,
        inequality_holds=not low,
        equality_condition_holds=condition,
        consistent=not low and (at_floor == condition),
        mode="exact",
        witness="" if not low else f"B(m) below m at {low}",
    )


def check_nonnegative_gap(group: FiniteGroup, n: int, r, s) -> TheoremVerdict:
    """For s < r, s <= 0: excess >= 0, zero iff one cyclic subgroup per divisor of n."""
    if not (s < r and s <= 0):
        raise ParameterDomainViolated(f"need s < r and s <= 0, got r={r}, s={s}")
    _require_divisor(group, n)
    profile = order_profile(group)
    mode = _mode_for(r, s)
    sign = _sign_of(cyclic_excess(profile, n, r, s), mode)
    offending = [m for m in divisors(n) if profile.cyclic_count(m) != 1]
    condition = not offending
    inequality = sign != "neg"
    return TheoremVerdict(
        claim="gap-nonneg",
        group=group.label,
        parameters=(("n", n), ("r", r), ("s", s)),
        sign=sign,
        inequality_holds=inequality,
        equality_condition_holds=condition,
        consistent=inequality and _equality_consistent(sign, condition, mode),
        mode=mode,
        witness="" if condition else f"cyclic subgroup count is not 1 at {offending}",
    )


def check_diagonal_gap(
    group: FiniteGroup, n: int, r, cap: int = DEFAULT_SUBGROUP_CAP
) -> TheoremVerdict:
    """For r = s < 0: excess >= 0, zero iff a unique (nilpotent) subgroup of order n.

    The equality condition is evaluated two independent ways: through the
    solution counts (B(k) = k for every divisor k of n coprime to n/k) and,
    when enumeration is feasible, by literally counting order-n subgroups.
    Disagreement raises EqualityRouteMismatch: it would mean one of two
    proved-equivalent criteria is implemented wrong.
    """
    if not r < 0:
        raise ParameterDomainViolated(f"need r < 0, got r={r}")
    _require_divisor(group, n)
    profile = order_profile(group)
    mode = _mode_for(r, r)
    sign = _sign_of(cyclic_excess(profile, n, r, r), mode)
    inequality = sign != "neg"
    table = frobenius_table(profile)
    condition = all(
        table.counts[k] == k for k in divisors(n) if gcd(k, n // k) == 1
    )
    witness = "equality_route: solution-counts"
    if n in (1, group.order) or group.order <= cap:
        result = unique_subgroup_of_order(group, n, cap)
        if result.status != "unique":
            subgroup_route = False
        elif n == group.order:
            subgroup_route = is_nilpotent(group)
        elif n == 1:
            subgroup_route = True
        else:
            subgroup_route = is_nilpotent(subgroup_as_group(group, result.subgroup))
        if subgroup_route != condition:
            raise EqualityRouteMismatch(
                f"{group.label}, n={n}: solution-count route says {condition}, "
                f"subgroup route says {subgroup_route} (status: {result.status})"
            )
        witness = "equality_route: both-agree"
    return TheoremVerdict(
        claim="gap-diagonal",
        group=group.label,
        parameters=(("n", n), ("r", r), ("s", r)),
        sign=sign,
        inequality_holds=inequality,
        equality_condition_holds=condition,
        consistent=inequality and _equality_consistent(sign, condition, mode),
        mode=mode,
        witness=witness,
    )


def check_nonpositive_gap(group: FiniteGroup, r, s) -> TheoremVerdict:
    """For r <= s-1, s >= 1, at n = |G|: excess <= 0, zero iff the group is cyclic."""
    if not (r <= s - 1 and s >= 1):
        raise ParameterDomainViolated(f"need r <= s-1 and s >= 1, got r={r}, s={s}")
    profile = order_profile(group)
    mode = _mode_for(r, s)
    sign = _sign_of(cyclic_excess(profile, group.order, r, s), mode)
    condition = is_cyclic(group)
    inequality = sign != "pos"
    return TheoremVerdict(
        claim="gap-nonpos",
        group=group.label,
        parameters=(("n", group.order), ("r", r), ("s", s)),
        sign=sign,
        inequality_holds=inequality,
        equality_condition_holds=condition,
        consistent=inequality and _equality_consistent(sign, condition, mode),
        mode=mode,
        witness="",
    )


def check_nilpotent_sign(group: FiniteGroup, r, s) -> TheoremVerdict:
    """Nilpotent non-cyclic groups: the excess has the sign of r - s."""
    if not is_nilpotent(group):
        raise PreconditionViolated(f"{group.label} is not nilpotent")
    if is_cyclic(group):
        raise PreconditionViolated(f"{group.label} is cyclic")
    profile = order_profile(group)
    mode = _mode_for(r, s)
    t = cyclic_excess(profile, group.order, r, s)
    sign = _sign_of(t, mode)
    expected = "pos" if r > s else ("neg" if r < s else "zero")
    matches = sign == expected
    return TheoremVerdict(
        claim="nilpotent-sign",
        group=group.label,
        parameters=(("n", group.order), ("r", r), ("s", s)),
        sign=sign,
        inequality_holds=matches,
        equality_condition_holds=r == s,
        consistent=matches,
        mode=mode,
        witness="" if matches else f"excess {t} but r-s sign is {expected}",
    )


def check_min_cyclic_subgroups(group: FiniteGroup) -> TheoremVerdict:
    """At least d(|G|) cyclic subgroups, exactly d(|G|) iff cyclic."""
    profile = order_profile(group)
    count = cyclic_subgroup_count(profile, group.order)
    floor = divisor_count(group.order)
    diff = count - floor
    sign = "pos" if diff > 0 else ("neg" if diff < 0 else "zero")
    condition = is_cyclic(group)
    inequality = diff >= 0
    return TheoremVerdict(
        claim="min-cyclic-count",
        group=group.label,
        parameters=(("n", group.order),),
        sign=sign,
        inequality_holds=inequality,
        equality_condition_holds=condition,
        consistent=inequality and ((diff == 0) == condition),
        mode="exact",
        witness=f"cyclic subgroups: {count}, divisors: {floor}",
    )


def check_cyclic_part_equivalence(group: FiniteGroup, n: int) -> TheoremVerdict:
    """Three faces of "the n-part of the group is cyclic" must agree:

    (a) B(m) = m for every divisor m of n,
    (b) exactly d(n) cyclic subgroups of order dividing n,
    (c) the solution set of x^n = 1 is a cyclic subgroup of order n.
    """
    _require_divisor(group, n)
    profile = order_profile(group)
    table = frobenius_table(profile)
    at_floor = all(table.counts[m] == m for m in divisors(n))
    count_matches = cyclic_subgroup_count(profile, n) == divisor_count(n)

    orders = group.element_orders
    solutions = [x for x in range(group.order) if n % orders[x] == 0]
    members = set(solutions)
    closed = all(
        group.mul[x][y] in members for x in solutions for y in solutions
    )
    solution_set_cyclic = (
        len(solutions) == n and closed and max(orders[x] for x in solutions) == n
    )

    equivalent = at_floor == count_matches and count_matches == solution_set_cyclic
    return TheoremVerdict(
        claim="cyclic-part-equivalence",
        group=group.label,
        parameters=(("n", n),),
        sign="zero" if at_floor else "pos",
        inequality_holds=equivalent,
        equality_condition_holds=at_floor,
        consistent=equivalent,
        mode="exact",
        witness=(
            f"solution_counts_at_floor={at_floor}, "
            f"cyclic_count_matches={count_matches}, "
            f"solution_set_cyclic={solution_set_cyclic}"
        ),
    )


def check_order_product_maximal(group: FiniteGroup) -> TheoremVerdict:
    """The product of all element orders divides the cyclic group's product,
    with equality exactly for cyclic groups."""
    profile = order_profile(group)
    mine = product_of_orders(profile)
    baseline = product_of_orders(cyclic_profile(group.order))
    divides = mine.divides(baseline)
    equal = mine == baseline
    condition = is_cyclic(group)
    return TheoremVerdict(
        claim="order-product-max",
        group=group.label,
        parameters=(("n", group.order),),
        sign="zero" if equal else ("neg" if divides else "pos"),
        inequality_holds=divides,
        equality_condition_holds=condition,
        consistent=divides and (equal == condition),
        mode="exact",
        witness=f"product {mine.as_json()} vs cyclic {baseline.as_json()}",
    )


def check_semidirect_count(m: int, beta: int, u: int, grid: int = 3) -> TheoremVerdict:
    """Inversion-type semidirect products hit their predicted invariants.

    Builds the group, counts cyclic subgroups three ways (brute table scan,
    order profile, closed-form count), and compares the excess functional
    with its closed form over the integer grid [-grid, grid]^2.
    """
    group = inversion_semidirect(m, beta, u)
    profile = order_profile(group)
    brute = count_cyclic_subgroups(group)
    from_profile = cyclic_subgroup_count(profile, group.order)
    predicted = divisor_count(group.order) + divisor_count(beta) * (m - divisor_count(m))
    counts_agree = brute == from_profile == predicted

    half_order = totient(2**u)
    mismatches = []
    for r in range(-grid, grid + 1):
        for s in range(-grid, grid + 1):
            t = cyclic_excess(profile, group.order, r, s)
            closed_form = (
                Fraction(2) ** (u * s)
                / Fraction(half_order) ** (r - 1)
                * (m - divisor_power_sum(m, r, s))
                * divisor_power_sum(beta, r, s)
            )
            if t != closed_form:
                mismatches.append((r, s))

    surplus = predicted - divisor_count(group.order)
    return TheoremVerdict(
        claim="inversion-semidirect-count",
        group=group.label,
        parameters=(("m", m), ("beta", beta), ("u", u)),
        sign="pos" if surplus > 0 else "zero",
        inequality_holds=counts_agree,
        equality_condition_holds=not mismatches,
        consistent=counts_agree and not mismatches,
        mode="exact",
        witness=(
            f"counts brute={brute} profile={from_profile} predicted={predicted}"
            + (f", excess mismatches at {mismatches}" if mismatches else "")
        ),
    )
