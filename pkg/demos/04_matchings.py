"""Divisibility matchings against the cyclic group.

Can the elements of a group be paired bijectively with the elements of
the cyclic group of the same order so that each order divides its
partner's?  For solvable groups the answer is yes (a theorem); beyond
that it is an open question, so a failure on a non-solvable group would
be an event worth reporting, not a bug.

The search is a max-flow between order classes and cyclic slots; when no
matching exists the residual cut yields a human-checkable certificate: a
set of orders whose elements outnumber the slots that could host them.
"""

from orderinv import (
    OrderProfile,
    find_divisibility_matching,
    group_from_label,
    is_solvable,
    order_profile,
    verify_matching,
)

for label in ("S3", "Q8", "S4", "A5"):
    group = group_from_label(label)
    profile = order_profile(group)
    matching = find_divisibility_matching(profile)
    print(f"{label} (order {group.order}, solvable={is_solvable(group)}):"
          f" {matching.status}")
    if matching.status == "found":
        assert verify_matching(profile, matching)
        for d, row in sorted(matching.assignment.items()):
            targets = ", ".join(f"{c} -> order {e}" for e, c in sorted(row.items()))
            print(f"  {d}: {targets}")
    print()

# No group has this profile: its ten elements of order 4 or 6 outnumber
# the eight slots of order 4, 6 or 12 that could host them.  The solver
# proves the impossibility and names the blocking set.
fake = OrderProfile(12, {1: 1, 2: 1, 4: 6, 6: 4})
matching = find_divisibility_matching(fake)
print(f"synthetic profile of size 12: {matching.status}")
print(f"  blocking orders: {sorted(matching.violator)}")
