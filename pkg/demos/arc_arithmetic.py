"""Tour of multivalued addition on the phase circle.

Adding two unit phases gives the short closed arc between them; adding
antipodal phases gives the whole circle plus zero.  Everything below is
exact rational-turn arithmetic, no floats anywhere.
"""

from tphi.hyperfield import (
    ZERO,
    boxplus_fold,
    boxplus_pair,
    contains_zero,
    format_arcset,
    format_value,
    unit,
    units,
)


def show(label, arcs):
    print(f"{label:28} -> {format_arcset(arcs)}")


one = unit(0)
i = unit(1, 4)
minus_one = unit(1, 2)

show("1 + i", boxplus_pair(one, i))
show("1 + (-1)", boxplus_pair(one, minus_one))
show("1 + 0", boxplus_pair(one, ZERO))
show("1 + i + (-1) + (-i)", boxplus_fold([one, i, minus_one, unit(3, 4)]))

print()
print("zero membership over the sixth roots of unity:")
for a in units(6):
    for b in units(6):
        if contains_zero([a, b]):
            print(f"  0 in {format_value(a)} + {format_value(b)}")

# the semicircle rule: a sum hits zero exactly when no open half-circle
# holds all the distinct terms
spread = [unit(0), unit(1, 3), unit(2, 3)]
print()
print("three thirds of a turn:", contains_zero(spread))
print("two close phases:      ", contains_zero([unit(0), unit(1, 12)]))
