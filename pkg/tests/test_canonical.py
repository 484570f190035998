"""The canonical 8-form: all of its constructions agree, exactly."""

from fractions import Fraction

import pytest

from octoforms.canonical import (
    _fpq_values,
    cgm_form,
    fpq_identity_check,
    kotrbaty_psi8,
    pontrjagin_report,
    quaternionic_forms,
    render_pontrjagin_text,
    spin9_form,
    spin9_psi,
    spin9_taus,
    tau8_and_ratio,
)
from octoforms.exterior import Multivector, tau2_direct, tau4_direct, wedge_dicts


def test_charpoly_shape():
    taus = spin9_taus()
    for j in (1, 2, 3, 5, 6, 7, 9):
        assert taus[j - 1].is_zero(), f"tau_{j} should vanish"
    assert not taus[3].is_zero() and not taus[7].is_zero()


def test_tau_grades():
    taus = spin9_taus()
    assert taus[3].is_homogeneous(8)
    assert taus[7].is_homogeneous(16)


def test_360_factor_and_gcd():
    tau4 = spin9_taus()[3]
    assert tau4.coeff_gcd() == 360
    phi = spin9_form()
    assert phi.coeff_gcd() == 1
    assert 360 * phi == tau4
    assert phi.is_integer()


def test_702_monomials():
    assert len(spin9_form()) == 702


def test_phi_wedge_phi_is_top():
    phi = spin9_form()
    sq = Multivector(16, wedge_dicts(dict(phi.mask_items()), dict(phi.mask_items())))
    assert len(sq) == 1
    assert sq.coefficient(tuple(range(1, 17))) != 0


def test_cgm_equals_minus_4_tau4():
    assert cgm_form() == -4 * spin9_taus()[3]


def test_cgm_702_monomials():
    assert len(cgm_form()) == 702


def test_tau2_sum_of_squares_vanishes():
    assert tau2_direct(spin9_psi()).is_zero()


def test_tau4_dual_route():
    assert tau4_direct(spin9_psi()) == spin9_taus()[3]


def test_fpq_trivial_and_single_pair():
    zero = {(a, b): Fraction(0) for a in range(9) for b in range(a + 1, 9)}
    assert _fpq_values(zero) == (0, 0, 0)
    x = dict(zero)
    x[(0, 1)] = Fraction(1)
    f, p, q = _fpq_values(x)
    assert (f, p, q) == (2, 1, 0)
    assert f == 2 * p * p - 4 * q


def test_fpq_random_trials():
    rep = fpq_identity_check(15, seed=7)
    assert rep.all_exact and rep.first_failure is None


def test_fpq_rejects_zero_trials():
    with pytest.raises(ValueError):
        fpq_identity_check(0)


def test_quaternionic_table_entries():
    theta, _ = quaternionic_forms()
    t12 = theta.entry(0, 1)
    assert t12.coefficient((1, 2)) == -1
    assert t12.coefficient((3, 4)) == 1
    assert t12.coefficient((5, 6)) == 1
    assert t12.coefficient((7, 8)) == -1
    assert len(t12) == 4


def test_quaternionic_tau2_identity():
    theta, omega_l = quaternionic_forms()
    t2 = tau2_direct(theta)
    assert t2.coefficient((1, 2, 3, 4)) == -12
    assert t2 == -2 * omega_l


def test_quaternionic_tau4_top_form():
    theta, _ = quaternionic_forms()
    t4 = tau4_direct(theta)
    assert not t4.is_zero()
    assert t4.is_homogeneous(8)  # a top form on R^8


def test_kotrbaty_identities():
    inter, psi8 = kotrbaty_psi8()
    assert inter["psi8"].imaginary_is_zero()
    assert psi8.exact_div(-2880) == spin9_form()
    assert spin9_form() + psi8.exact_div(2880) == Multivector.zero(16)


def test_kotrbaty_grades():
    inter, _ = kotrbaty_psi8()
    for name in ("psi40", "psi31", "psi13", "psi04"):
        assert inter[name].grades() == {4}, name


def test_tau8_and_ratio():
    c8, ratio = tau8_and_ratio()
    assert c8 != 0
    assert isinstance(ratio, Fraction) and ratio != 0
    # recorded: the pointwise ratio (tau4 ^ tau4) / tau8 on R^16
    assert ratio == Fraction(-12)


def test_tau6_and_tau2_vanish():
    taus = spin9_taus()
    assert taus[1].is_zero() and taus[5].is_zero()


def test_pontrjagin_report_rows():
    rep = pontrjagin_report()
    rows = {r["class"]: r for r in rep["manifold_classes"]}
    assert rows["p1(M)"]["coefficient"] == 0
    assert rows["p3(M)"]["coefficient"] == 0
    assert rows["p2(M)"]["coefficient"] == Fraction(-45, 2)
    assert rows["p2(M)"]["pi_power"] == -4
    assert rows["p4(M)"]["coefficient"] == Fraction(-13, 256)
    assert rows["p4(M)"]["pi_power"] == -8
    text = render_pontrjagin_text(rep)
    assert "-45/2" in text and "-13/256" in text and "p1(M) = 0" in text


def test_fl_runs_under_10s():
    import time

    from octoforms.exterior import charpoly_coeffs

    t0 = time.time()
    charpoly_coeffs(spin9_psi())
    assert time.time() - t0 < 10.0


def test_quaternionic_charpoly_routes_agree():
    from octoforms.exterior import FormMatrix, charpoly_coeffs

    theta, _ = quaternionic_forms()
    taus = charpoly_coeffs(theta)
    assert taus[1] == tau2_direct(theta)
    assert taus[3] == tau4_direct(theta)
    for j in (1, 3, 5):  # odd coefficients vanish by skew-symmetry
        assert taus[j - 1].is_zero()


def test_charpoly_of_zero_matrix():
    from octoforms.exterior import FormMatrix, charpoly_coeffs

    f = FormMatrix(1, 4, {})
    taus = charpoly_coeffs(f)
    assert len(taus) == 1 and taus[0].is_zero()
