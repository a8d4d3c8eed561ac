"""
A marker automorphism
=====================

Between the markers 100 and 0101 on the golden mean shift, swap the data
symbols 0 and 1.  The overlap condition holds, so this is an automorphism
of order two.
"""

from soficaut import (
    EvPeriodicPoint, MarkerSystem, bundled, is_endomorphism, is_involution,
    marker_to_code, max_overlap, validate_marker_system,
)

golden = bundled("golden_mean")
ms = MarkerSystem.swap("100", "0101", "0", "1")
print("violation:", validate_marker_system(golden, ms), "max overlap:", max_overlap(ms))

g = marker_to_code(golden, ms)
print(g, "order", g.order)

x = EvPeriodicPoint("0", "10010101", "0", 0)
print(" x =", x)
print("gx =", g.code.apply_point(x))

# no special block in (01)^inf, so it is left alone
p = EvPeriodicPoint.periodic("01")
print("g(01)^inf =", g.code.apply_point(p))

print("maps into the shift:", is_endomorphism(golden, g.code))
print("involution (rules composed):", is_involution(golden, g, "exhaustive"))
