"""
Exhaustive desk-scale verifiers
================================

Each statement the verdict engine relies on is checked here over its full
finite range -- every case, no sampling.  A report says what space was
swept and lists concrete counterexamples when a check is designed to
expose a gap (see the strict prop4 run at the bottom).
"""

import json

from dimeq import (
    lemma2_I,
    lemma2_reduction_cases,
    Partition,
    verify_epsilon_orbit_claim,
    verify_lemma1,
    verify_lemma2,
    verify_lemma2_reduction,
    verify_prop3,
    verify_prop4,
    verify_prop5,
)


def show(r):
    print(f"  {r.statement:18} passed={r.passed}  space={r.space_size} "
          f" params={json.dumps(r.parameters, sort_keys=True)}")


# rectangular orbit pairs always overflow the budget
print("lemma1, n = 6, 12, 30:")
for n in (6, 12, 30):
    show(verify_lemma1(n))

# the positivity margin I and the exhaustive pair sweep behind it
print("\nlemma2 margin examples:")
print("  I((2,1,1),(2,2)) =", lemma2_I(Partition([2, 1, 1]), Partition([2, 2])))
print("  I((4),(2,2))     =", lemma2_I(Partition([4]), Partition([2, 2])))
print("lemma2, n = 8, 16:")
for n in (8, 16):
    show(verify_lemma2(n))

# its reduction to near-rectangular case partitions
print("\nreduction cases (n=7):")
for m1 in range(2, 8):
    cases = lemma2_reduction_cases(7, m1)
    print(f"  m1={m1}: {[str(c.partition) for c in cases]}")
r = verify_lemma2_reduction(7)
show(r)
print("  rational-corner notes:", r.parameters["literal_side_inequality_failures"])

# pairs of short orbits
print("\nprop3, n = 8, 14:")
for n in (8, 14):
    show(verify_prop3(n))

# block-size feasibility searches, integer + exact closed form
print("\nprop4 paper mode (n=10, l=3):")
show(verify_prop4(10, 3))

print("prop4 strict mode (n=10, l=3) -- documents the gap on purpose:")
r = verify_prop4(10, 3, mode="strict")
show(r)
for c in r.counterexamples:
    print("   gap point:", c["blocks"], "sum", c["block_sum"], "<", c["required"])

print("\nprop5 (n=12, q=6, l=3) and a vacuous case (n=6, q=3, l=3):")
show(verify_prop5(12, 6, 3))
show(verify_prop5(6, 3, 3))

# character patterns: enough nonzero flags forces the attached orbit out of
# the rectangle's closure
print("\nepsilon-orbit claim:")
for n, p, q in ((6, 2, 3), (12, 3, 4), (14, 7, 2)):
    show(verify_epsilon_orbit_claim(n, p, q))
