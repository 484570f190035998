"""Monte-Carlo line integral: oracle checks, determinism, convergence."""

import numpy as np
import pytest

from octoforms.berger import (
    _eps,
    _process_block,
    _sample_sphere9,
    berger_mc,
    phi_dense,
    slot_blade,
    slot_masks,
)
from tests_util_det import exact_det


def test_slot_ordering():
    masks = slot_masks()
    assert len(masks) == 12870
    assert slot_blade(0) == (1, 2, 3, 4, 5, 6, 7, 8)
    assert slot_blade(12869) == (9, 10, 11, 12, 13, 14, 15, 16)


def test_eps_signs_against_exact_determinants():
    """eps(S) must satisfy det[E_S | A_T] = eps * det(A[S^c, T])."""
    rng = np.random.default_rng(0)
    a = rng.integers(-9, 9, size=(8, 8))
    from itertools import combinations

    for k in range(9):
        for s_bits in combinations(range(8), k):
            t_bits = tuple(range(8 - k))  # one T per S suffices: eps is T-free
            cols = []
            for s in s_bits:
                col = [0] * 8
                col[s] = 1
                cols.append(col)
            for t in t_bits:
                cols.append([int(a[i, t]) for i in range(8)])
            mat = [[cols[j][i] for j in range(8)] for i in range(8)]
            comp = [i for i in range(8) if i not in s_bits]
            minor = [[int(a[i, t]) for t in t_bits] for i in comp]
            want = exact_det(mat)
            got = _eps(s_bits) * (exact_det(minor) if minor else 1)
            assert want == got, (s_bits,)


def test_block_slot_values_against_determinant_oracle():
    """Recompute a handful of slot values of one tiny block directly."""
    sums = np.zeros(12870)
    sumsq = np.zeros(12870)
    count = 8
    _process_block(123, 0, count, sums, sumsq)

    v = _sample_sphere9(123, 0, count)
    from octoforms.cayley_dickson import CDElement

    total = np.zeros(12870)
    for s in range(count):
        u8, r = v[s, :8], v[s, 8]
        m = u8 / (1.0 + r)
        mm = float(m @ m)
        rows = []
        for i in range(8):
            e = [0.0] * 8
            e[i] = 1.0
            prod = CDElement(3, [float(x) for x in e]) * CDElement(3, list(map(float, m)))
            rows.append(list(e) + [float(c) for c in prod.coeffs])
        b = np.array(rows) / np.sqrt(1.0 + mm)
        for slot in (0, 1, 5000, 12869):
            blade = [i - 1 for i in slot_blade(slot)]
            sub = b[:, blade]
            total[slot] += -np.linalg.det(sub)  # estimator orientation flip
    for slot in (0, 1, 5000, 12869):
        assert np.isclose(total[slot], sums[slot], rtol=1e-6, atol=1e-9), slot


def test_bit_reproducibility_across_workers():
    f1, r1 = berger_mc(3000, seed=42, workers=1)
    f2, r2 = berger_mc(3000, seed=42, workers=2)
    assert np.array_equal(f1.coeffs, f2.coeffs)
    assert np.array_equal(f1.sigma, f2.sigma)
    assert r1.fitted_scale == r2.fitted_scale
    f3, _ = berger_mc(3000, seed=43, workers=1)
    assert not np.array_equal(f1.coeffs, f3.coeffs)


def test_cosine_alignment_small_run():
    _, rep = berger_mc(20000, seed=0, workers=1)
    assert rep.cosine_similarity > 0.995
    assert rep.fitted_scale > 0


def test_convergence_two_point():
    """RMS distance to the fitted multiple of Phi scales like 1/sqrt(N)."""
    phi = phi_dense().astype(np.float64)

    def rms(n):
        form, rep = berger_mc(n, seed=3, workers=1)
        resid = form.coeffs - rep.fitted_scale * phi
        return float(np.sqrt(np.mean(resid * resid)))

    r1 = rms(8000)
    r2 = rms(32000)
    ratio = r1 / r2
    assert 1.5 < ratio < 2.7  # fourfold samples should halve the RMS


def test_zero_slot_noise_band_small_run():
    form, rep = berger_mc(20000, seed=0, workers=1)
    phi = phi_dense()
    zero = phi == 0
    assert rep.zero_slots == int(zero.sum()) == 12870 - 702
    # overwhelmingly within 3 sigma; deterministic for the pinned seed
    assert rep.zero_slots_within_3sigma / rep.zero_slots > 0.99


def test_input_validation():
    with pytest.raises(ValueError):
        berger_mc(0)
    with pytest.raises(ValueError):
        berger_mc(10, workers=0)
