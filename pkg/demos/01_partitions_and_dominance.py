"""
Partitions, transposes, orbit dimensions, dominance
====================================================

Everything downstream reduces to bookkeeping on integer partitions, so
start here.  Run top to bottom; every claim is printed with its numbers.
"""

from dimeq import Partition, enumerate_partitions, dominance_floor

# a partition is weakly decreasing positive parts; parse accepts the same
# JSON-ish text the CLI uses
lam = Partition.parse("[3,2,2,1]")
print("lambda          ", lam)
print("n               ", lam.n)
print("transpose       ", lam.transpose())

# transpose is an involution
assert lam.transpose().transpose() == lam

# the two dimension notions: the orbit with Jordan type lambda inside the
# n^2-dimensional ambient space, and half of it (the representation side)
print("orbit_dim       ", lam.orbit_dim())
print("rep_dim         ", lam.rep_dim())

# the regular orbit (n) is the biggest one, the zero orbit (1^n) the smallest
print("(8)     orbit_dim", Partition([8]).orbit_dim())   # n^2 - n = 56
print("(1^8)   orbit_dim", Partition([1] * 8).orbit_dim())  # 0

# dominance order: prefix sums.  compare() returns one of four outcomes
a, b = Partition([3, 3]), Partition([4, 1, 1])
print(f"{a} vs {b}:", a.compare(b).value)
print(f"{a} vs [2,2,2]:", a.compare(Partition([2, 2, 2])).value)

# strictly bigger in dominance means a strictly bigger orbit
for mu in enumerate_partitions(6):
    rel = Partition([6]).compare(mu)
    assert rel.value in ("equal", "greater")

# enumeration is reverse-lexicographic, largest first
print("partitions of 5 :", [str(p) for p in enumerate_partitions(5)])
print("length <= 2 only:", [str(p) for p in enumerate_partitions(5, max_length=2)])

# the all-twos floor used by several statements: every rectangle with
# parts >= 2 dominates it, and its orbit already fills over half the budget
for n in (6, 7, 10):
    f = dominance_floor(n)
    print(f"floor n={n}: {f}, orbit_dim {f.orbit_dim()} > {n*(n-1)//2}")
    assert f.orbit_dim() > n * (n - 1) // 2

# componentwise addition (rows add; this is how induced orbits combine)
print("[2,1] + [1,1]   =", Partition([2, 1]) + Partition([1, 1]))
print("transpose of sum:", (Partition([2, 1]) + Partition([1, 1])).transpose())
