"""
Shifts, covers and languages
============================

Load the two bundled shifts, look at their Fischer covers and count
allowable words.
"""

from soficaut import bundled, enumerate_words, is_mixing, shift_period

golden = bundled("golden_mean")
even = bundled("even")

# the golden mean forbids 11; the even shift has even runs of 1 between 0s
for name, c in (("golden mean", golden), ("even", even)):
    print(name, c)
    print("  period", shift_period(c), "mixing", is_mixing(c))
    print("  |L_n| for n = 1..10:", [len(enumerate_words(c, n)) for n in range(1, 11)])

print("L_3 of the even shift:", enumerate_words(even, 3))
