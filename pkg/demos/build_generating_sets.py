"""Tour of the generating-set constructions.

Builds minimal one-class generating sets of symmetric groups three ways
(chained cycles, Eulerian transposition products, the prime-driven general
construction), checks the structural predicates, and confronts the size
bound with a brute-force search on tiny cases.

Run:  python demos/build_generating_sets.py
"""

import math

from cayleykit import (
    CycleType,
    brute_force_f,
    build_chain,
    construct_basic_tree,
    construct_cycle_pair,
    construct_cycle_tree,
    construct_general,
    extend_tree,
    f_lower_bound,
    general_plan,
    generates,
    predicates,
)

print("=" * 72)
print("1. Chained cycles")
print("=" * 72)

pair = construct_cycle_pair(4)
print(f"two chained 4-cycles on 7 points: {[g.to_text() for g in pair.elements]}")
print(f"  group order = {build_chain(pair.elements, 7).order()} (7! = {math.factorial(7)})")

tree = construct_cycle_tree(4, 10)
print(f"three chained 4-cycles on 10 points: {[g.to_text() for g in tree.elements]}")
print(f"  |T| = {len(tree)} = ceil(9/3), verdict: {generates(tree.elements, 10)}")

# when (k-1) does not divide (n-1), the last cycle overlaps more deeply
tree9 = construct_cycle_tree(4, 9)
print(f"on 9 points the last cycle doubles back: {[g.to_text() for g in tree9.elements]}")

print()
print("=" * 72)
print("2. Products of transpositions from an Eulerian circuit")
print("=" * 72)

basic = construct_basic_tree(3)
flags = predicates(basic, include_balance=False)
print(f"k = 3: {len(basic)} elements on {basic.degree} points")
for g in basic.elements:
    print(f"  {g.to_text()}")
print(f"  semi-connected: {flags['semi_connected']}, split: {flags['split']}")
print(f"  order = 22! exactly: {build_chain(basic.elements, 22).order() == math.factorial(22)}")

extended = extend_tree(basic, CycleType([2, 2, 2]), 25)
print(f"extended to 25 points: |T| = {len(extended)} = {f_lower_bound(CycleType([2,2,2]), 25)}")
print(f"  order = 25! exactly: {build_chain(extended.elements, 25).order() == math.factorial(25)}")

print()
print("=" * 72)
print("3. The general construction for a mixed cycle type")
print("=" * 72)

cycle_type = CycleType([2, 4, 5])
plan = general_plan(cycle_type)
print(f"type ({cycle_type}): prime p = {plan.p}, m = {plan.m}, "
      f"construction degree {plan.degree}, worst-case threshold {plan.phi_bound}")
general = construct_general(cycle_type)
flags = predicates(general)
print(f"{len(general)} generators, first: {general.elements[0].to_text()}")
print(f"  split: {flags['split']}, balanced class sizes: {flags['balanced'].sizes}")
print(f"  c(A) = {cycle_type.c_value} is even, so the elements are even permutations:")
print(f"  verdict = {generates(general.elements, general.degree)} "
      "(an even type can reach the alternating group at most)")

print()
print("=" * 72)
print("4. Brute force agrees with the lower bound at desk scale")
print("=" * 72)

for parts, n in [((2,), 4), ((2,), 5), ((4,), 7)]:
    cycle_type = CycleType(parts)
    bound = f_lower_bound(cycle_type, n)
    found = brute_force_f(cycle_type, n, 4)
    print(f"type ({cycle_type}) on {n} points: bound {bound}, exhaustive search {found}")
