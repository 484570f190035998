"""The octonionic Hopf fibration S^15 -> S^8 in coordinates.

Points of R^16 = O^2 are octonion pairs (x, y).  The unit sphere S^8 in
O x R acts by the symmetric involutions [[r, R_conj(u)], [R_u, -r]]; the nine
standard involutions I_1..I_9 are this action at the basis vectors.  The Hopf
map is taken to be the vector of coefficients lambda with

    N = sum_a lambda_a I_a N,
    lambda_1 = 2 x.y,  lambda_{1+t} = -2 x.(y u_t)  (u_t = i..h),
    lambda_9 = |x|^2 - |y|^2,

which is constant on fibers and satisfies sum lambda^2 = 1 on the sphere.
Off the sphere each lambda is homogeneous of degree 2.  The line at infinity
l_inf = {(0, y)} maps to (0,...,0,-1) in this chart; the paper's prose places
it over the north pole, a sign convention documented here and not patched.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cayley_dickson import CDElement, right_mult_matrix
from .clifford import standard_system
from .linalg import Matrix


@dataclass(frozen=True)
class SpherePoint16:
    """A point (x, y) of O^2 with rational coordinates on the unit sphere."""

    x: CDElement
    y: CDElement

    def __post_init__(self):
        if self.x.level != 3 or self.y.level != 3:
            raise ValueError("coordinates must be octonions (level 3)")
        if self.x.norm2() + self.y.norm2() != 1:
            raise ValueError("point is not on the unit sphere")

    def coords(self) -> tuple:
        return self.x.coeffs + self.y.coeffs


@lru_cache(maxsize=1)
def spin9_involutions() -> tuple:
    return standard_system("spin9").mats


@lru_cache(maxsize=1)
def _involution_perms() -> tuple:
    """(source column, sign) per row of each I_a; they are signed permutations."""
    perms = []
    for mat in spin9_involutions():
        rows = []
        for i in range(16):
            entries = [(j, mat[i, j]) for j in range(16) if mat[i, j]]
            if len(entries) != 1 or entries[0][1] not in (1, -1):
                raise AssertionError("involution is not a signed permutation")
            rows.append(entries[0])
        perms.append(tuple(rows))
    return tuple(perms)


def hopf_action(u: CDElement, r) -> Matrix:
    """The symmetric involution of the unit vector (u, r) in S^8 = O x R."""
    if u.level != 3:
        raise ValueError("u must be an octonion")
    if u.norm2() + r * r != 1:
        raise ValueError("(u, r) must be a unit vector")
    ru = right_mult_matrix(u)
    ruc = right_mult_matrix(u.conjugate())
    eye = Matrix.identity(8)
    return Matrix.from_blocks(
        [[eye.scaled(r), ruc], [ru, eye.scaled(-r)]]
    )


def _dot(a, b):
    return sum(p * q for p, q in zip(a, b))


def lambda_coeffs_raw(x: CDElement, y: CDElement) -> tuple:
    """The nine lambda values without the sphere-membership check."""
    lam = [2 * _dot(x.coeffs, y.coeffs)]
    for t in range(1, 8):
        yu = y * CDElement.unit(3, t)
        lam.append(-2 * _dot(x.coeffs, yu.coeffs))
    lam.append(x.norm2() - y.norm2())
    return tuple(lam)


def lambda_coeffs(p: SpherePoint16) -> tuple:
    """lambda with sum lambda^2 = 1 and N = sum lambda_a I_a N, both exact."""
    lam = lambda_coeffs_raw(p.x, p.y)
    if sum(v * v for v in lam) != 1:
        raise AssertionError("sum of squared lambda coefficients is not 1")
    return lam


def hopf_map(p: SpherePoint16) -> tuple:
    """The fiberwise-constant lambda vector: the Hopf map in coordinates."""
    return lambda_coeffs(p)


def spin9_sections(p: SpherePoint16) -> list:
    """The nine vectors I_a N at N = p, as exact coordinate lists."""
    coords = p.coords()
    return [
        [c if s > 0 else -c for c, s in ((coords[j], s) for j, s in rows)]
        for rows in _involution_perms()
    ]


def reconstruct(p: SpherePoint16) -> list:
    """sum_a lambda_a I_a N; equals N exactly on the sphere."""
    lam = lambda_coeffs(p)
    sections = spin9_sections(p)
    return [
        sum(lam[a] * sections[a][i] for a in range(9)) for i in range(16)
    ]


def fiber_orthogonality_check(p: SpherePoint16, fiber_tangent) -> bool:
    """True when the supplied fiber tangent is orthogonal to every I_a N."""
    tangent = list(fiber_tangent)
    if len(tangent) != 16:
        raise ValueError("tangent must have 16 coordinates")
    return all(_dot(tangent, s) == 0 for s in spin9_sections(p))


def rational_sphere_point(rng: random.Random) -> SpherePoint16:
    """Random rational point of S^15: stereographic image of a rational t."""
    t = [Fraction(rng.randint(-6, 6), rng.randint(1, 5)) for _ in range(15)]
    s = sum(v * v for v in t)
    den = 1 + s
    coords = [2 * v / den for v in t] + [(1 - s) / den]
    return SpherePoint16(
        x=CDElement(3, coords[:8]), y=CDElement(3, coords[8:])
    )
