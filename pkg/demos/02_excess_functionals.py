"""Weighted order sums and the cyclic excess.

For exponents (r, s) the weighted order sum adds o(x)^s / phi(o(x))^r
over all elements whose order divides n.  Subtracting the same sum for
the cyclic group of equal order gives the excess.  Its sign is a
structure detector:

  s < r, s <= 0   excess >= 0, zero iff each divisor has one cyclic subgroup
  r = s < 0       excess zero iff the group is nilpotent (at n = |G|)
  r < s, s >= 1   excess <= 0, zero iff the group is cyclic
  nilpotent case  sign(excess) = sign(r - s) for non-cyclic nilpotent groups

Everything below is exact rational arithmetic.
"""

from orderinv import (
    cyclic_excess,
    group_from_label,
    order_profile,
    weighted_order_sum,
)

GROUPS = ("C12", "S3", "Q8", "E3^2")

print("excess at sample exponent pairs, n = |G|")
pairs = [(1, 0), (1, -2), (-2, -2), (0, 1), (-1, 2), (2, 2)]
header = "        " + "".join(f"{f'(r={r},s={s})':>12}" for r, s in pairs)
print(header)
for label in GROUPS:
    group = group_from_label(label)
    profile = order_profile(group)
    cells = [cyclic_excess(profile, group.order, r, s) for r, s in pairs]
    print(f"{label:>6}  " + "".join(f"{str(t):>12}" for t in cells))
print()

# The quaternion group is nilpotent but not cyclic, so along the diagonal
# r = s the excess vanishes, and off it the sign flips with r - s:
q8 = order_profile(group_from_label("Q8"))
for r, s in [(2, 0), (1, 0), (0, 0), (0, 1), (0, 2)]:
    t = cyclic_excess(q8, 8, r, s)
    print(f"Q8 excess at (r={r}, s={s}): {t}")
print()

# The sum of element orders is the (0, 1) slice: among groups of one
# order the cyclic group is the unique maximizer.
for label in ("C6", "S3"):
    profile = order_profile(group_from_label(label))
    print(f"sum of element orders of {label}: {weighted_order_sum(profile, 6, 0, 1)}")
