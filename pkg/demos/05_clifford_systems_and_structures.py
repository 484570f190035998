"""Clifford systems C_m and even Clifford structures on model spaces.

The standard systems (Pauli, quaternionic, octonionic) share one block
recipe; the inductive extension doubles the space and adds one generator.
Counting independent compositions J_ab, J_abc reveals the Lie algebras at
play and the obstruction that keeps Spin(7) "essential" on R^8.
"""

from octoforms.clifford import (
    CliffordSystem,
    all_J_triples,
    delta,
    extend,
    independence_count,
    standard_system,
    trace_invariant,
    verify,
)
from octoforms.models import build_model, structure_census

for kind in ("pauli_U2", "quaternionic_Sp2Sp1", "spin9"):
    c = standard_system(kind)
    print(f"{kind}: C_{c.m} on R^{c.n}, verify {'pass' if verify(c).ok else 'FAIL'},"
          f" tr(P_0...P_m) = {trace_invariant(c)}")

print("\ndelta(m) for m = 1..17:", [delta(m) for m in range(1, 18)])

c9 = extend(standard_system("spin9"))
print(f"extend(spin9) -> C_{c9.m} on R^{c9.n} (2 delta(9) = {2 * delta(9)}),"
      f" verify {'pass' if verify(c9).ok else 'FAIL'}")

# --- the Spin(7) obstruction -----------------------------------------------
spin9 = standard_system("spin9")
c6 = CliffordSystem(n=16, mats=spin9.mats[:7])
triples = all_J_triples(c6)
print(f"\nA C_6 has {len(triples)} triple products J_abc;"
      f" independent: {independence_count(triples)} > 21,")
print("the dimension Spin(7) would allow on R^8; so no Clifford system"
      " can induce the Spin(7) structure there.")

# --- even Clifford structures on the Cayley-Rosenfeld planes ----------------
print()
for name in ("eiii", "evi", "eviii"):
    m = build_model(name)
    print(f"{name.upper():6s}: rank {m.rank:2d} generator family on R^{m.ambient_dim}")

census = structure_census()
print("\nStructure census:")
for key, val in census.items():
    print(f"  {key}: {val}")
print("(lie_eiii = 45 = dim spin(10), generated by the nine J_a9 alone.)")
