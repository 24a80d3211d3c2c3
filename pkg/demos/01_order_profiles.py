"""Order profiles and solution counts.

Every invariant in this package is computed from the order profile of a
group: how many elements have each order d.  From the profile we get the
solution counts B(m) = #{x : x^m = 1}, which a classical divisibility
theorem pins down to multiples of m, and the ratios f(m) = B(m)/m, which
equal 1 exactly on the divisors where the group looks cyclic.
"""

from orderinv import (
    divisors,
    frobenius_table,
    group_from_label,
    order_profile,
)

for label in ("C12", "S3", "Q8", "D6", "A5"):
    group = group_from_label(label)
    profile = order_profile(group)
    table = frobenius_table(profile)
    print(f"{label} (order {group.order})")
    print("  elements per order:",
          " ".join(f"{d}:{c}" for d, c in sorted(profile.counts.items())))
    for m in divisors(group.order):
        b = table.counts[m]
        note = "" if table.ratios[m] > 1 else "  <- at the floor"
        print(f"  B({m:>2}) = {b:>3} = {table.ratios[m]} * {m}{note}")
    print()

# A cyclic group sits at the floor everywhere: B(m) = m for every divisor.
# Any departure upward is a structural signal; B(m) < m never happens.
