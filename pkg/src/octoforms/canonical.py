"""The Spin(9) canonical 8-form and its relatives.

Three independent constructions of one object live here: the characteristic
coefficient tau_4 of the 9x9 matrix of Kahler 2-forms (divided by its content
360 to give the primitive integral form Phi), the quadruple-sum 8-form
Omega_CGM, and the octonionic coordinate construction Psi_8.  The module also
carries the quaternionic 4-form analogue on R^8, the scalar polynomial
identity F = 2P^2 - 4Q behind Omega_CGM = -4 tau_4, and the Pontrjagin-class
coefficient table of compact Spin(9)-holonomy manifolds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cayley_dickson import CDElement, left_mult_matrix
from .clifford import standard_system
from .exterior import (
    FormMatrix,
    Multivector,
    charpoly_coeffs,
    kahler_form,
    wedge_dicts,
)
from .linalg import Matrix
from .octform import coordinate_octonion_form


@lru_cache(maxsize=None)
def spin9_psi() -> FormMatrix:
    """The 9x9 skew matrix of Kahler 2-forms psi_ab of J_ab = I_a I_b."""
    c = standard_system("spin9")
    return FormMatrix.from_endomorphisms(c.int_arrays())


@lru_cache(maxsize=None)
def spin9_taus() -> tuple:
    """Characteristic coefficients tau_1..tau_9 of the spin9 form matrix."""
    return tuple(charpoly_coeffs(spin9_psi()))


@lru_cache(maxsize=None)
def spin9_form() -> Multivector:
    """The canonical 8-form Phi: tau_4 divided by its coefficient content.

    The content equals 360 (pinned by the acceptance suite), so this realizes
    360 Phi = tau_4(psi) with integer, gcd-1 coefficients.
    """
    tau4 = spin9_taus()[3]
    return tau4.exact_div(tau4.coeff_gcd())


@lru_cache(maxsize=None)
def cgm_form() -> Multivector:
    """The 8-form sum_{a,b,a',b'} psi_ab ^ psi_ab' ^ psi_a'b ^ psi_a'b'.

    Grouped as sum_{a,a'} (sum_b psi_ab ^ psi_a'b)^2, which is the same sum
    because homogeneous 2-forms commute under the wedge.
    """
    f = spin9_psi()
    n = f.n
    total: dict = {}
    for a in range(9):
        for a2 in range(a, 9):
            inner: dict = {}
            for b in range(9):
                for m, c in wedge_dicts(f.entry_dict(a, b), f.entry_dict(a2, b)).items():
                    v = inner.get(m, 0) + c
                    if v:
                        inner[m] = v
                    else:
                        inner.pop(m, None)
            mult = 1 if a2 == a else 2
            for m, c in wedge_dicts(inner, inner).items():
                v = total.get(m, 0) + mult * c
                if v:
                    total[m] = v
                else:
                    total.pop(m, None)
    return Multivector(n, total)


def _random_skew_entries(rng: random.Random) -> dict:
    x = {}
    for a in range(9):
        for b in range(a + 1, 9):
            x[(a, b)] = Fraction(rng.randint(-12, 12), rng.randint(1, 6))
    return x


def _fpq_values(x: dict):
    """F, P, Q of the scalar skew matrix with upper entries x[(a, b)]."""

    def ent(a, b):
        if a == b:
            return Fraction(0)
        if a < b:
            return x[(a, b)]
        return -x[(b, a)]

    f = Fraction(0)
    for a in range(9):
        for b in range(9):
            for a2 in range(9):
                for b2 in range(9):
                    f += ent(a, b) * ent(a, b2) * ent(a2, b) * ent(a2, b2)
    p = sum(x[k] * x[k] for k in x)
    q = Fraction(0)
    from itertools import combinations

    for a1, a2, a3, a4 in combinations(range(9), 4):
        pf = ent(a1, a2) * ent(a3, a4) - ent(a1, a3) * ent(a2, a4) + ent(a1, a4) * ent(a2, a3)
        q += pf * pf
    return f, p, q


@dataclass(frozen=True)
class FPQReport:
    trials: int
    all_exact: bool
    first_failure: dict | None


def fpq_identity_check(trials: int, seed: int = 0) -> FPQReport:
    """Verify F = 2 P^2 - 4 Q on random rational skew 9x9 matrices, exactly."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    for t in range(trials):
        x = _random_skew_entries(rng)
        f, p, q = _fpq_values(x)
        if f != 2 * p * p - 4 * q:
            return FPQReport(trials=t + 1, all_exact=False, first_failure=dict(x))
    return FPQReport(trials=trials, all_exact=True, first_failure=None)


@lru_cache(maxsize=None)
def quaternionic_forms() -> tuple:
    """(theta, Omega_L): the 5x5 matrix of Kahler forms of the quaternionic
    system on R^8 and the left quaternionic 4-form.

    Omega_L = omega_{L_i}^2 + omega_{L_j}^2 + omega_{L_k}^2 where L_u acts by
    left multiplication on each quaternion slot of H^2 = R^8; the identity
    tau_2(theta) = -2 Omega_L is pinned by the acceptance suite.
    """
    c = standard_system("quaternionic_Sp2Sp1")
    theta = FormMatrix.from_endomorphisms(c.int_arrays())
    eye2 = Matrix.identity(2)
    omega_l = Multivector.zero(8)
    for t in (1, 2, 3):
        lmat = eye2.kron(left_mult_matrix(CDElement.unit(2, t)))
        w = kahler_form(lmat.to_int_array())
        omega_l = omega_l + w.wedge(w)
    return theta, omega_l


@lru_cache(maxsize=None)
def kotrbaty_psi8() -> tuple:
    """(intermediates, Psi8): the octonionic coordinate construction.

    dx, dy are octonion-valued 1-forms; the four 4-forms are wedged in the
    printed left parenthesization ((conj(dx) ^ dx) ^ conj(dx)) ^ dx, etc.
    Psi8 is returned as a real 8-form; its imaginary octonion part vanishes
    identically and Phi = -Psi8 / (4 * 6!) = -Psi8 / 2880.
    """
    dx = coordinate_octonion_form(16, 0)
    dy = coordinate_octonion_form(16, 8)
    dxc = dx.conjugate()
    dyc = dy.conjugate()

    psi40 = dxc.wedge(dx).wedge(dxc).wedge(dx)
    psi31 = dyc.wedge(dx).wedge(dxc).wedge(dx)
    psi13 = dxc.wedge(dy).wedge(dyc).wedge(dy)
    psi04 = dyc.wedge(dy).wedge(dyc).wedge(dy)

    psi8 = (
        psi40.wedge(psi40.conjugate())
        + 4 * psi31.wedge(psi31.conjugate())
        + (-5) * (psi31.wedge(psi13) + psi13.conjugate().wedge(psi31.conjugate()))
        + 4 * psi13.wedge(psi13.conjugate())
        + psi04.wedge(psi04.conjugate())
    )
    intermediates = {"psi40": psi40, "psi31": psi31, "psi13": psi13, "psi04": psi04, "psi8": psi8}
    if not psi8.imaginary_is_zero():
        raise AssertionError("Psi8 has a nonzero imaginary octonion part")
    real = Multivector(16, psi8.real_part())
    return intermediates, real


def tau8_and_ratio() -> tuple:
    """(top coefficient of tau_8, the rational (tau_4 ^ tau_4) / tau_8).

    Both 16-forms are multiples of e^{1..16}; tau_8 = 0 would contradict the
    characteristic polynomial shape, so it is an error.
    """
    taus = spin9_taus()
    top = tuple(range(1, 17))
    c8 = taus[7].coefficient(top)
    if c8 == 0:
        raise ValueError("tau_8 vanishes; characteristic polynomial is degenerate")
    t4 = taus[3]
    c44 = Multivector(16, wedge_dicts(t4._t, t4._t)).coefficient(top)
    return c8, Fraction(c44, c8)


def pontrjagin_report() -> dict:
    """Pontrjagin classes of a compact Spin(9)-holonomy M^16 and the E-bundle
    normalizations they come from; coefficients are exact rationals paired
    with the power of pi they multiply."""
    taus = spin9_taus()
    top = tuple(range(1, 17))
    return {
        "manifold_classes": [
            {"class": "p1(M)", "coefficient": Fraction(0), "pi_power": 0, "of": "1"},
            {"class": "p2(M)", "coefficient": Fraction(-45, 2), "pi_power": -4, "of": "[Phi_Spin9]"},
            {"class": "p3(M)", "coefficient": Fraction(0), "pi_power": 0, "of": "1"},
            {"class": "p4(M)", "coefficient": Fraction(-13, 256), "pi_power": -8, "of": "[tau8(psi)]"},
        ],
        "bundle_classes": [
            {"class": "p1(E)", "coefficient": Fraction(0), "pi_power": 0, "of": "1"},
            {"class": "p2(E)", "coefficient": Fraction(360, 16), "pi_power": -4, "of": "[Phi_Spin9]"},
            {"class": "p3(E)", "coefficient": Fraction(0), "pi_power": 0, "of": "1"},
            {"class": "p4(E)", "coefficient": Fraction(1, 256), "pi_power": -8, "of": "[tau8(psi)]"},
        ],
        "relations": [
            "p1(M) = 2 p1(E)",
            "p2(M) = (7/4) p1(E)^2 - p2(E)",
            "p3(M) = (1/8) (7 p1(E)^3 - 12 p1(E) p2(E) + 16 p3(E))",
            "p4(M) = (1/128) (35 p1(E)^4 - 120 p1(E)^2 p2(E) + 400 p1(E) p3(E) - 1664 p4(E))",
        ],
        "normalizations": {
            "tau4_content": spin9_form().coeff_gcd() and spin9_taus()[3].coeff_gcd(),
            "tau4_monomials": len(taus[3]),
            "tau8_top_coefficient": taus[7].coefficient(top),
        },
    }


def render_pontrjagin_text(report: dict) -> str:
    lines = ["Pontrjagin classes (compact Spin(9)-holonomy M^16):"]
    for row in report["manifold_classes"]:
        c = row["coefficient"]
        if c == 0:
            lines.append(f"  {row['class']} = 0")
        else:
            lines.append(f"  {row['class']} = ({c}) * pi^{row['pi_power']} * {row['of']}")
    lines.append("E-bundle classes:")
    for row in report["bundle_classes"]:
        c = row["coefficient"]
        if c == 0:
            lines.append(f"  {row['class']} = 0")
        else:
            lines.append(f"  {row['class']} = ({c}) * pi^{row['pi_power']} * {row['of']}")
    lines.append("Relations:")
    for r in report["relations"]:
        lines.append(f"  {r}")
    norm = report["normalizations"]
    lines.append(
        f"Normalizations: gcd(tau4) = {norm['tau4_content']}, "
        f"{norm['tau4_monomials']} monomials, tau8 top coefficient "
        f"{norm['tau8_top_coefficient']}"
    )
    return "\n".join(lines)
