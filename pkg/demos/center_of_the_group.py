"""
Only shift powers commute with everything
=========================================

Build a marker system whose data cover every block of length 2R+1, permute
the data, and check that none of the resulting automorphisms is a power of
the shift, while the shift powers are recognised as such.
"""

from soficaut import (
    bundled, identify_power_of_shift, orbit_permutation_auto, ryan_system,
    shift_automorphism,
)

for name in ("golden_mean", "even"):
    c = bundled(name)
    rs = ryan_system(c, 1)
    print(f"{name}: marker {rs.marker}, n={rs.n}, {len(rs.data)} data words, {len(rs.orbits)} orbits")
    d = rs.data
    swap = orbit_permutation_auto(c, rs, {d[0]: d[1], d[1]: d[0]})
    print("  transposition is a shift power?", identify_power_of_shift(c, swap))
    print("  sigma^2 ->", identify_power_of_shift(c, shift_automorphism(c, 2)))
