"""The canonical 8-form on R^16, four ways.

The nine symmetric involutions I_1..I_9 generate 36 Kahler 2-forms psi_ab.
Their 9x9 skew matrix has the startlingly short characteristic polynomial
t^9 + tau4 t^5 + tau8 t, and tau4 is (360 times) the canonical 8-form.  Two
more constructions, the quadruple sum Omega_CGM and the octonionic coordinate
form Psi_8, land on scalar multiples of the same object.
"""

from octoforms.canonical import (
    cgm_form,
    kotrbaty_psi8,
    pontrjagin_report,
    quaternionic_forms,
    render_pontrjagin_text,
    spin9_form,
    spin9_psi,
    spin9_taus,
    tau8_and_ratio,
)
from octoforms.exterior import tau2_direct, tau4_direct

psi = spin9_psi()
print("psi_12 =", " ".join(f"{'+' if c > 0 else '-'}{''.join(map(str, idx))}"
                           for idx, c in psi.entry(0, 1).terms()))

taus = spin9_taus()
print("\nSurviving characteristic coefficients:",
      [f"tau{j+1}" for j, t in enumerate(taus) if not t.is_zero()])

tau4 = taus[3]
phi = spin9_form()
print("gcd of tau4 coefficients:", tau4.coeff_gcd())
print("monomials of Phi:", len(phi))
print("Phi is primitive (gcd 1):", phi.coeff_gcd() == 1)

print("\nIndependent routes to the same form:")
print("  sub-Pfaffian sum  == charpoly tau4:", tau4_direct(psi) == tau4)
print("  Omega_CGM         == -4 tau4:      ", cgm_form() == -4 * tau4)
_, psi8 = kotrbaty_psi8()
print("  -Psi_8 / (4*6!)   == Phi:          ", psi8.exact_div(-2880) == phi)

print("\ntau2(psi) = sum psi_ab^2 vanishes:", tau2_direct(psi).is_zero())
c8, ratio = tau8_and_ratio()
print("tau8 =", c8, "* e^{1..16};   (tau4 ^ tau4)/tau8 =", ratio)

# --- the quaternionic shadow on R^8 ------------------------------------------
theta, omega_l = quaternionic_forms()
t2 = tau2_direct(theta)
print("\nQuaternionic analogue: tau2(theta) == -2 Omega_L:", t2 == -2 * omega_l,
      "with coefficient", t2.coefficient((1, 2, 3, 4)), "on e^1234")

print("\n" + render_pontrjagin_text(pontrjagin_report()))
