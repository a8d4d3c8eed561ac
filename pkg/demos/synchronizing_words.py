"""
Synchronizing words
===================

A word is synchronizing when it pins down the state of the cover.  In the
even shift, odd blocks of 1s never do, and any word with a 0 does.
"""

from soficaut import bundled, extend_to_synchronizing, follower_states, is_synchronizing

even = bundled("even")

for i in range(4):
    w = "1" * (2 * i + 1)
    print(f"{w:>8}: synchronizing={is_synchronizing(even, w)} followers={sorted(follower_states(even, w))}")

for w in ("10", "0110", "11011"):
    print(f"{w:>8}: synchronizing={is_synchronizing(even, w)}")

# the shortest right extension that synchronizes
print("extend 111 ->", extend_to_synchronizing(even, "111"))
