"""Even Clifford structures on model spaces.

The three Cayley-Rosenfeld planes beyond F II carry generator families on
K ox R^16 for K = C, H, O: the K-units act by right multiplication on the
K factor (kron(R_u, Id16)) and the nine octonionic involutions act on the
R^16 factor (kron(Id, I_a)).  Compositions J_ab = gen_a gen_b land in skew
endomorphisms; their spans and Lie closures realize spin(10), spin(12) and
spin(16) inside the respective orthogonal algebras.

The Grassmannian families use the Spin(8) generators m_u on O + O and the
m_{u,v} = m_u m_v compositions, applied diagonally to tangent vectors listed
as octonion pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from .cayley_dickson import CDElement, right_mult_matrix
from .clifford import independence_count, standard_system
from .exterior import FormMatrix, Multivector, kahler_form, tau2_direct, tau4_coefficient
from .linalg import Matrix, lie_closure_dim

MODEL_NAMES = ("eiii", "evi", "eviii", "gr8r", "gr4c", "gr2h")


@dataclass(frozen=True)
class EvenCliffordModel:
    name: str
    ambient_dim: int
    generators: tuple  # numpy int64 arrays
    rank: int

    def generator(self, a: int) -> np.ndarray:
        return self.generators[a]


def _ru(level: int, t: int) -> np.ndarray:
    return right_mult_matrix(CDElement.unit(level, t)).to_int_array()


def _rosenfeld_generators(level: int) -> list:
    """kron(R_u, Id16) for the imaginary units, then kron(Id, I_a)."""
    spin9 = standard_system("spin9").int_arrays()
    d = 1 << level
    eye16 = np.eye(16, dtype=np.int64)
    eyed = np.eye(d, dtype=np.int64)
    gens = [np.kron(_ru(level, t), eye16) for t in range(1, d)]
    gens.extend(np.kron(eyed, i_a) for i_a in spin9)
    return gens


def _m_u(u: CDElement) -> np.ndarray:
    ru = right_mult_matrix(u).to_int_array()
    ruc = right_mult_matrix(u.conjugate()).to_int_array()
    z = np.zeros((8, 8), dtype=np.int64)
    return np.block([[z, ru], [-ruc, z]])


def build_model(name: str) -> EvenCliffordModel:
    if name not in MODEL_NAMES:
        raise ValueError(f"unknown model {name!r}; expected one of {MODEL_NAMES}")
    if name == "eiii":
        gens = _rosenfeld_generators(1)
        return EvenCliffordModel(name, 32, tuple(gens), 10)
    if name == "evi":
        gens = _rosenfeld_generators(2)
        return EvenCliffordModel(name, 64, tuple(gens), 12)
    if name == "eviii":
        gens = _rosenfeld_generators(3)
        return EvenCliffordModel(name, 128, tuple(gens), 16)
    if name == "gr8r":
        gens = [_m_u(CDElement.unit(3, t)) for t in range(8)]
        return EvenCliffordModel(name, 16, tuple(gens), 8)
    if name == "gr4c":
        # units spanning F = <1, i, j, k, e, f> inside O
        gens = [_m_u(CDElement.unit(3, t)) for t in range(6)]
        return EvenCliffordModel(name, 16, tuple(gens), 6)
    gens = standard_system("quaternionic_Sp2Sp1").int_arrays()
    return EvenCliffordModel("gr2h", 8, tuple(gens), 5)


def lambda2_generators(model: EvenCliffordModel) -> list:
    """All compositions J_ab = gen_a gen_b (a < b); each must be skew."""
    out = []
    for a, b in combinations(range(len(model.generators)), 2):
        j = model.generators[a] @ model.generators[b]
        if not np.array_equal(j, -j.T):
            raise AssertionError(f"J_{a}{b} is not skew-symmetric")
        out.append(j)
    return out


def spin_generators(model: EvenCliffordModel) -> list:
    """The J_{a,last} family generating the model's spin algebra."""
    last = len(model.generators) - 1
    return [model.generators[a] @ model.generators[last] for a in range(last)]


def eiii_kahler() -> Multivector:
    """Kahler 2-form of the complex structure of the E III model space."""
    model = build_model("eiii")
    return kahler_form(model.generators[0])


@lru_cache(maxsize=1)
def eiii_form_matrix() -> FormMatrix:
    model = build_model("eiii")
    return FormMatrix.from_endomorphisms(list(model.generators))


def eiii_tau2() -> Multivector:
    """tau_2 of the 10x10 matrix of Kahler forms; equals -3 omega^2."""
    tau2 = tau2_direct(eiii_form_matrix())
    omega = eiii_kahler()
    if tau2 != -3 * omega.wedge(omega):
        raise AssertionError("tau_2 != -3 omega^2 on the E III model")
    return tau2


def eiii_tau4_nonzero() -> bool:
    """tau_4 of the E III form matrix is a nonzero 8-form.

    Witnessed by one coefficient: the full 8-form on R^32 is expensive, and a
    single nonzero blade already settles non-vanishing.
    """
    return tau4_coefficient(eiii_form_matrix(), (1, 2, 3, 4, 5, 6, 7, 8)) != 0


def m_uv(u: CDElement, v: CDElement) -> Matrix:
    """diag(-R_u R_conj(v), -R_conj(u) R_v): for orthonormal octonions u, v a
    complex structure with m_vu = -m_uv."""
    if u.level != 3 or v.level != 3:
        raise ValueError("u and v must be octonions")
    ru = right_mult_matrix(u)
    rv = right_mult_matrix(v)
    ruc = right_mult_matrix(u.conjugate())
    rvc = right_mult_matrix(v.conjugate())
    z = Matrix.zero(8, 8)
    return Matrix.from_blocks([[-(ru @ rvc), z], [z, -(ruc @ rv)]])


def grassmann_phi_apply(u: CDElement, v: CDElement, tangent) -> list:
    """Apply m_uv diagonally to a tangent vector listed as octonion pairs."""
    tangent = list(tangent)
    if len(tangent) % 2:
        raise ValueError("tangent must list an even number of octonions")
    mat = m_uv(u, v)
    out = []
    for a, b in zip(tangent[::2], tangent[1::2]):
        vec = list(a.coeffs) + list(b.coeffs)
        img = mat.apply(vec)
        out.append(CDElement(3, img[:8]))
        out.append(CDElement(3, img[8:]))
    return out


def structure_census(deep: bool = False) -> dict:
    """Independence counts and Lie-closure dimensions of the model families.

    A Clifford system C_6 cannot exist on R^8 (it needs N = 2 delta(6) = 16),
    so the 35 triple products witnessing the Spin(7) obstruction are computed
    from a C_6 inside the standard spin9 system on R^16; 35 still exceeds the
    21-dimensional component of the Spin(7) 2-form decomposition.
    """
    spin9 = standard_system("spin9").int_arrays()
    j_pairs = [
        spin9[a] @ spin9[b] for a, b in combinations(range(9), 2)
    ]
    j_triples = [
        spin9[a] @ spin9[b] @ spin9[c] for a, b, c in combinations(range(9), 3)
    ]
    c6 = spin9[:7]
    c6_triples = [
        c6[a] @ c6[b] @ c6[c] for a, b, c in combinations(range(7), 3)
    ]
    quat = standard_system("quaternionic_Sp2Sp1").int_arrays()
    quat_pairs = [quat[a] @ quat[b] for a, b in combinations(range(5), 2)]

    eiii = build_model("eiii")
    census = {
        "spin9_pairs": independence_count(j_pairs),
        "spin9_triples": independence_count(j_triples),
        "c6_triples": independence_count(c6_triples),
        "quaternionic_pairs": independence_count(quat_pairs),
        "so16_dim": independence_count(j_pairs + j_triples),
        "spin7_bound": 21,
        "lie_spin9": lie_closure_dim(j_pairs),
        "lie_eiii": lie_closure_dim(spin_generators(eiii), max_dim=200),
    }
    if deep:
        evi = build_model("evi")
        eviii = build_model("eviii")
        census["lie_evi"] = lie_closure_dim(lambda2_generators(evi), max_dim=300)
        census["lie_eviii"] = lie_closure_dim(lambda2_generators(eviii), max_dim=300)
    return census
