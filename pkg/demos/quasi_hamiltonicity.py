"""Cycle factors, the quasi-hamiltonicity hierarchy, and coset partitions.

Finds 2-regular spanning subgraphs through a symmetric flow network (edges
can be forced into the factor), climbs the recursive edge-set hierarchy to
decide Hamiltonicity, and cross-checks everything against brute-force
oracles.  Ends with a left-coset tiling of a small symmetric group.

Run:  python demos/quasi_hamiltonicity.py
"""

from cayleykit import (
    Permutation,
    brute_hamiltonian,
    complete_bipartite,
    complete_graph,
    coset_partition,
    cycle_factor_forced,
    cycle_graph,
    enumerate_elements,
    hamiltonian_via_qh,
    petersen_graph,
    qh_report,
)

print("=" * 72)
print("1. Cycle factors via the symmetric flow network")
print("=" * 72)

pet = petersen_graph()
factor = cycle_factor_forced(pet, [])
print(f"Petersen has a cycle factor with {len(factor.edges)} edges: {sorted(factor.edges)}")

forced = [(0, 1), (5, 7)]
factor = cycle_factor_forced(pet, forced)
print(f"forcing {forced}: factor still exists and contains them: "
      f"{set(forced) <= factor.edges}")

print(f"K(2,3) admits no factor: {cycle_factor_forced(complete_bipartite(2, 3), []) is None}")

print()
print("=" * 72)
print("2. The hierarchy of usable edge sets")
print("=" * 72)
for name, graph in (("C6", cycle_graph(6)), ("Petersen", pet)):
    rows = qh_report(graph, 3)
    print(f"{name}:")
    for k, count, connected in rows:
        print(f"  level {k}: {count} edges, spanning-connected: {connected}")

print()
print("=" * 72)
print("3. Hamiltonicity through the hierarchy vs brute force")
print("=" * 72)
corpus = [
    ("C7", cycle_graph(7)),
    ("K5", complete_graph(5)),
    ("K(3,3)", complete_bipartite(3, 3)),
    ("K(2,3)", complete_bipartite(2, 3)),
    ("Petersen", pet),
]
for name, graph in corpus:
    via = hamiltonian_via_qh(graph)
    oracle = brute_hamiltonian(graph)
    print(f"{name}: hierarchy says {via}, oracle says {oracle}, agree: {via == oracle}")

print()
print("=" * 72)
print("4. Left coset partitions")
print("=" * 72)
s3 = enumerate_elements(
    [Permutation.from_text("(1 2)", 3), Permutation.from_text("(2 3)", 3)], 3, 10
)
subset = [Permutation.identity(3), Permutation.from_text("(1 2)", 3)]
witness = coset_partition(s3, subset)
print(f"subset {{e, (1 2)}} of S_3 tiles the group from "
      f"{[s.to_text() for s in witness]}")
print(f"a size-4 subset cannot tile (4 does not divide 6): "
      f"{coset_partition(s3, s3[:4]) is None}")
