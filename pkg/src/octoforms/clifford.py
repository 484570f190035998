"""Clifford systems: symmetric anticommuting involutions on R^N.

The standard systems are generated uniformly from the doubling construction:
for the level-k Cayley-Dickson algebra A (dim d = 2**k), the 2+d symmetric
involutions on A^2 = R^{2d} are

    antidiag(Id, Id),   [[0, -R_u], [R_u, 0]] for the d-1 imaginary units u,
    diag(Id, -Id),

giving the Pauli system (k=1), the quaternionic system (k=2) and the
octonionic system I_1..I_9 (k=3).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cayley_dickson import CDElement, right_mult_matrix
from .linalg import Matrix, RowSpace, rank

STANDARD_KINDS = ("pauli_U2", "quaternionic_Sp2Sp1", "spin9")
_KIND_LEVEL = {"pauli_U2": 1, "quaternionic_Sp2Sp1": 2, "spin9": 3}

# Seeds of Table "Clifford systems": delta(m) for m = 1..8, then
# delta(8 + h) = 16 * delta(h).
_DELTA_SEED = {1: 1, 2: 2, 3: 4, 4: 4, 5: 8, 6: 8, 7: 8, 8: 8}


@dataclass(frozen=True)
class CliffordSystem:
    """m+1 symmetric anticommuting involutions on R^n (mats[alpha] = P_alpha)."""

    n: int
    mats: tuple

    @property
    def m(self) -> int:
        return len(self.mats) - 1

    def __post_init__(self):
        for p in self.mats:
            if p.rows != self.n or p.cols != self.n:
                raise ValueError("endomorphism size mismatch")

    def int_arrays(self) -> list:
        return [p.to_int_array() for p in self.mats]


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    failures: tuple = ()

    def __bool__(self):
        return self.ok


def verify(c: CliffordSystem) -> VerifyReport:
    """Check the three axioms, reporting the first violation of each kind."""
    failures = []
    try:
        arrs = c.int_arrays()
        eye = np.eye(c.n, dtype=np.int64)
        sym = lambda a: np.array_equal(a, a.T)
        square = lambda a: np.array_equal(a @ a, eye)
        anti = lambda a, b: np.array_equal(a @ b, -(b @ a))
    except ValueError:
        arrs = list(c.mats)
        eye = Matrix.identity(c.n)
        sym = lambda a: a.is_symmetric()
        square = lambda a: a @ a == eye
        anti = lambda a, b: a @ b == -(b @ a)

    for i, p in enumerate(arrs):
        if not sym(p):
            failures.append(f"P_{i} is not symmetric")
            break
    for i, p in enumerate(arrs):
        if not square(p):
            failures.append(f"P_{i}^2 != Id")
            break
    done = False
    for i in range(len(arrs)):
        for j in range(i + 1, len(arrs)):
            if not anti(arrs[i], arrs[j]):
                failures.append(f"P_{i} P_{j} != -P_{j} P_{i}")
                done = True
                break
        if done:
            break
    return VerifyReport(ok=not failures, failures=tuple(failures))


def standard_system(kind: str) -> CliffordSystem:
    """The Pauli, quaternionic, or octonionic (spin9) system."""
    if kind not in _KIND_LEVEL:
        raise ValueError(f"unknown kind {kind!r}; expected one of {STANDARD_KINDS}")
    level = _KIND_LEVEL[kind]
    d = 1 << level
    zero = Matrix.zero(d, d)
    eye = Matrix.identity(d)
    mats = [Matrix.from_blocks([[zero, eye], [eye, zero]])]
    for t in range(1, d):
        r = right_mult_matrix(CDElement.unit(level, t))
        mats.append(Matrix.from_blocks([[zero, -r], [r, zero]]))
    mats.append(Matrix.from_blocks([[eye, zero], [zero, -eye]]))
    return CliffordSystem(n=2 * d, mats=tuple(mats))


def delta(m: int) -> int:
    """Dimension constant: an irreducible C_m lives on R^{2 delta(m)}."""
    if m < 1:
        raise ValueError("delta(m) needs m >= 1")
    if m <= 8:
        return _DELTA_SEED[m]
    return 16 * delta(m - 8)


def extend(c: CliffordSystem, extra=()) -> CliffordSystem:
    """Next system C_{m+1} on R^{2N} from a verified C_m on R^N.

    Q_0 = antidiag(Id, Id), Q_{m+1} = diag(Id, -Id), and for alpha = 1..m
    Q_alpha = offdiag(-P_0 P_alpha, P_0 P_alpha).  ``extra`` lists additional
    complex structures S on R^N (e.g. further unit right multiplications) to
    append as offdiag(-S, S): whether they extend the system is decided by
    verify() on the result, not assumed.
    """
    rep = verify(c)
    if not rep.ok:
        raise ValueError(f"cannot extend an invalid system: {rep.failures}")
    n = c.n
    zero = Matrix.zero(n, n)
    eye = Matrix.identity(n)
    p0 = c.mats[0]
    mats = [Matrix.from_blocks([[zero, eye], [eye, zero]])]
    for alpha in range(1, len(c.mats)):
        j = p0 @ c.mats[alpha]
        mats.append(Matrix.from_blocks([[zero, -j], [j, zero]]))
    for s in extra:
        mats.append(Matrix.from_blocks([[zero, -s], [s, zero]]))
    mats.append(Matrix.from_blocks([[eye, zero], [zero, -eye]]))
    out = CliffordSystem(n=2 * n, mats=tuple(mats))
    rep = verify(out)
    if not rep.ok:
        raise ValueError(f"extension failed verification: {rep.failures}")
    return out


def trace_invariant(c: CliffordSystem):
    """tr(P_0 P_1 ... P_m); |value| = 2 delta(m) distinguishes the two
    equivalence classes when m = 0 mod 4, and the standard systems give 0
    otherwise."""
    rep = verify(c)
    if not rep.ok:
        raise ValueError(f"invalid system: {rep.failures}")
    prod = c.mats[0]
    for p in c.mats[1:]:
        prod = prod @ p
    return prod.trace()


def compose_J(c: CliffordSystem, indices) -> Matrix:
    """J_{ab} = P_a P_b or J_{abc} = P_a P_b P_c for strictly increasing
    1-based indices; the result is a skew complex structure."""
    idx = list(indices)
    if len(idx) not in (2, 3):
        raise ValueError("indices must have length 2 or 3")
    if idx != sorted(idx) or len(set(idx)) != len(idx):
        raise ValueError("indices must be strictly increasing")
    if idx[0] < 1 or idx[-1] > len(c.mats):
        raise ValueError("index out of range")
    prod = c.mats[idx[0] - 1]
    for a in idx[1:]:
        prod = prod @ c.mats[a - 1]
    if not prod.is_skew():
        raise AssertionError("composition is not skew")
    if prod @ prod != -Matrix.identity(c.n):
        raise AssertionError("composition does not square to -Id")
    return prod


def all_J_pairs(c: CliffordSystem) -> list:
    k = len(c.mats)
    return [compose_J(c, (a, b)) for a in range(1, k + 1) for b in range(a + 1, k + 1)]


def all_J_triples(c: CliffordSystem) -> list:
    k = len(c.mats)
    return [
        compose_J(c, (a, b, g))
        for a in range(1, k + 1)
        for b in range(a + 1, k + 1)
        for g in range(b + 1, k + 1)
    ]


def independence_count(mats) -> int:
    """Rank of the Gram matrix under <A, B> = tr(A^T B)/n."""
    if not mats:
        return 0
    first = mats[0]
    if isinstance(first, Matrix) and not first.is_integer():
        n = first.rows
        gram = [
            [sum(a * b for a, b in zip(x._e, y._e)) for y in mats] for x in mats
        ]
        return rank(Matrix.from_rows(gram))
    arrs = np.stack(
        [m.to_int_array() if isinstance(m, Matrix) else np.asarray(m, dtype=np.int64) for m in mats]
    )
    flat = arrs.reshape(len(mats), -1)
    gram = flat @ flat.T
    space = RowSpace()
    for row in gram:
        space.add({j: int(v) for j, v in enumerate(row) if v})
    return space.dim
