"""Maximal tangent vector-field systems on S^{m-1}, up to S^511.

sigma(m) = 2^p + 8q - 1 for m = (2k+1) 2^p 16^q.  Up to m = 128 the fields
come from right multiplications and the J_a = I_a I_9; at m = 256 a second,
block-acting copy of the J_a enters; at m = 512 one last field needs an extra
conjugation D2 -- and this demo shows the naive guess genuinely failing.
"""

from octoforms.spheres import (
    _matrix_conditions,
    build_fields,
    fixed_beta_variant,
    naive_s511_extra,
    sigma,
    verify_system,
)

print("m      :", *(f"{m:5d}" for m in (2, 4, 8, 16, 32, 48, 64, 128, 256, 512)))
print("sigma  :", *(f"{sigma(m):5d}" for m in (2, 4, 8, 16, 32, 48, 64, 128, 256, 512)))

for m in (16, 32, 48, 128, 256, 512):
    v = build_fields(m)
    rep = verify_system(v, samples=1, seed=0)
    print(f"\nS^{m-1}: built {len(v.fields)} fields; exact conditions pass: {rep.ok}")
    for note in v.notes:
        print("  note:", note)

print("\nAny beta works for the eight fields I_a I_beta on S^15:")
print("  all pass:", all(verify_system(fixed_beta_variant(b), samples=1).ok
                          for b in range(1, 10)))

# --- the documented S^511 pitfall ---------------------------------------------
v512 = build_fields(512)
naive = naive_s511_extra()
level1 = list(v512.fields[:8])
level2 = list(v512.fields[8:16])
print("\nOn S^511, D(L_i N) without the extra conjugation:")
print("  against the level-1 fields:",
      "ok" if not _matrix_conditions(level1 + [naive]) else "fails")
fails = _matrix_conditions(level2 + [naive])
print("  against the level-2 fields:", f"fails ({fails[0]})" if fails else "ok")
print("  the D(D2(L_i N)) field instead:",
      "ok" if not _matrix_conditions(list(v512.fields)) else "fails")
