"""
Moving one cylinder into another
================================

In the fiber over (01)^inf every point starts with 100.  For two disjoint
cylinders [w] and [u] there, build an involution sending [w] into [u],
check it on sampled points and write the certificate.
"""

import json

from soficaut import bundled, minimality_witness, orbit_id, prop31

golden = bundled("golden_mean")
m = orbit_id("01", golden)

cert = prop31(golden, 2, m, "10000", "100101")
print("case:", cert.case, "radius:", cert.automorphism.radius)
print("choices:", cert.choices)
print("verified:", cert.verified, "on", len(cert.samples), "points")
print("first sample:", cert.samples[0])

# the same map read backwards: [w] sits inside g[u]
wit = minimality_witness(golden, 2, m, "100101", "10000")
print("reverse containment verified:", wit.verified)

print(json.dumps(cert.to_json()["markers"], indent=1))
