"""Classify every ideal of Z_12 for S = {1, 3, 9} and S = {1, 4}, then decompose (0)."""
from mullat.decomposition import find_minimal_decomposition, uniqueness_set
from mullat.ring_bridge import ideal_lattice_zn, lift_mult_set
from mullat.s_theory import classify_element, top_set

Z = ideal_lattice_zn(12)
M = Z.M

for s_ring in ([1], [1, 3, 9], [1, 4]):
    S = lift_mult_set(12, s_ring)
    print(f"S = {s_ring}  ->  S_L = {S.labels()}")
    cols = ["element", "s_meets", "prime", "s_prime", "primary", "s_primary", "radical", "saturation", "s_irreducible"]
    print("  " + "  ".join(f"{c:>13}" for c in cols))
    for x in M.elements:
        row = classify_element(M, S, x)
        print("  " + "  ".join(f"{str(row[c] if row[c] is not None else '-'):>13}" for c in cols))
    print()

for S in (top_set(M), lift_mult_set(12, [1, 3, 9])):
    d = find_minimal_decomposition(M, S, Z.index(0))
    P = sorted(uniqueness_set(M, S, Z.index(0)))
    print(f"S_L = {S.labels()}: (0) = " + " ^ ".join(M.labels[q] for q in d.components),
          "| saturated radicals", [M.labels[p] for p in d.saturated_radicals],
          "| P", [M.labels[p] for p in P])
