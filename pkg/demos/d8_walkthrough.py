"""Which involution subgroups of D8 are derived subgroups of something in D8?

Only the centre <(1 3)(2 4)> = D8' is.  The derived bound settles the other
four at once; switching it off makes the direct search certify them.
"""

from derivant import Options, all_subgroups, derived_subgroup, format_cycles, integrable_within
from derivant import constructors as C

D8 = C.dihedral(8)
print("D8' =", " ".join(format_cycles(g) for g in derived_subgroup(D8).generators))

strict = Options.direct(derived_bound=False)
for H in all_subgroups(D8):
    if H.order() != 2:
        continue
    label = format_cycles(H.generators[0])
    fast = integrable_within(H, D8)
    slow = integrable_within(H, D8, strict)
    print(f"{label:12} {fast.status:14} via {'+'.join(fast.trace):15} "
          f"direct search: {slow.status}, {len(slow.witnesses)} witnesses")
