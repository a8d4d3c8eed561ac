"""
Left-periodic points and the cocycle
====================================

Points whose left tail is (01)^inf and that break the period at index 2.
An automorphism moves such a point and the shift puts it back; the amount
of shifting is a cocycle.
"""

from soficaut import (
    MarkerSystem, bundled, cocycle_alpha, compose_automorphisms, dot_action,
    marker_to_code, orbit_id, project_pi, sample_cylinder, shift_automorphism,
)

golden = bundled("golden_mean")
m = orbit_id("01", golden)
pts = sample_cylinder(golden, 2, m, "100")
print(len(pts), "sampled points, e.g.", pts[0])

s = shift_automorphism(golden, 1)
g = marker_to_code(golden, MarkerSystem.swap("100", "0101", "0", "1"), "g")

x = pts[5]
print("x        =", x)
print("g . x    =", dot_action(g, x), " alpha =", cocycle_alpha(g, x))
print("alpha(sigma, x) =", cocycle_alpha(s, x))

gs = compose_automorphisms(g, s)
lhs = cocycle_alpha(gs, x)
rhs = cocycle_alpha(g, dot_action(s, x)) + cocycle_alpha(s, x)
print("cocycle identity:", lhs, "==", rhs)
print("projection to the periodic orbit:", project_pi(x, golden))
