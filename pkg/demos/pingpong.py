"""
Ping-pong
=========

Two automorphisms that push points toward [10000] and [10001] respectively,
both away from a third cylinder.  No short reduced word in them acts
trivially on the sampled points, which is evidence of a free subgroup.
"""

from soficaut import bundled, orbit_id, pingpong_check

golden = bundled("golden_mean")
m = orbit_id("01", golden)
for L in (1, 2, 3):
    print(L, pingpong_check(golden, 2, m, "10000", "10001", L))
