"""Sparse exact exterior algebra over R^n.

A multivector is a sparse map from basis blades to rational coefficients.
Blades are bitmasks: bit p set means index p+1 belongs to the blade (indices
are 1-based at the API surface).  The wedge sign is the parity of the number
of index crossings when merging two disjoint blades.

Two wedge engines coexist: a pure-Python dict engine valid for any n and any
rational coefficients, and a vectorized integer kernel (n <= 16) used by the
characteristic-polynomial loop.  The kernel accumulates integer-valued
float64 partial sums and is guarded so every intermediate stays below 2**52,
where float64 arithmetic on integers is exact; it falls back to the dict
engine otherwise.  Both engines are cross-checked in the test suite.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd

import numpy as np

from .linalg import Matrix

_POP16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.int64)

# float64 sums of integers are exact strictly below 2**53; keep headroom.
_FLOAT_EXACT = 2**52


def merge_sign(mask_a: int, mask_b: int) -> int:
    """Sign of e^A ^ e^B for disjoint blades (parity of index crossings).

    Crossings are pairs (a, b) with a in A, b in B, a > b: exactly the swaps
    needed to sort the concatenation of the two increasing index lists.
    """
    inv = 0
    a = mask_a
    while a:
        low = a & -a
        inv += (mask_b & (low - 1)).bit_count()
        a ^= low
    return -1 if inv & 1 else 1


def _indices_to_mask(indices) -> int:
    mask = 0
    for i in indices:
        bit = 1 << (i - 1)
        if bit & mask:
            raise ValueError("repeated index in blade")
        mask |= bit
    return mask


def _mask_to_indices(mask: int) -> tuple:
    out = []
    p = 0
    while mask:
        if mask & 1:
            out.append(p + 1)
        mask >>= 1
        p += 1
    return tuple(out)


class Multivector:
    """Immutable sparse multivector with exact coefficients."""

    __slots__ = ("n", "_t")

    def __init__(self, n: int, terms: dict):
        self.n = n
        self._t = {m: c for m, c in terms.items() if c}
        if any(m >> n for m in self._t):
            raise ValueError(f"blade outside ambient dimension {n}")

    @classmethod
    def zero(cls, n: int) -> "Multivector":
        return cls(n, {})

    @classmethod
    def blade(cls, n: int, indices, coeff=1) -> "Multivector":
        """Monomial c * e^{i1...ik} from strictly increasing 1-based indices."""
        if list(indices) != sorted(indices):
            raise ValueError("blade indices must be strictly increasing")
        return cls(n, {_indices_to_mask(indices): coeff})

    @classmethod
    def scalar(cls, n: int, value) -> "Multivector":
        return cls(n, {0: value})

    def terms(self):
        """Iterate (indices tuple, coefficient), blades sorted lexicographically."""
        for m in sorted(self._t, key=_mask_to_indices):
            yield _mask_to_indices(m), self._t[m]

    def mask_items(self):
        return self._t.items()

    def coefficient(self, indices):
        return self._t.get(_indices_to_mask(indices), 0)

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def __eq__(self, other):
        return (
            isinstance(other, Multivector) and self.n == other.n and self._t == other._t
        )

    def __repr__(self):
        k = len(self._t)
        return f"Multivector(n={self.n}, {k} term{'s' if k != 1 else ''})"

    def __add__(self, other: "Multivector") -> "Multivector":
        self._check(other)
        t = dict(self._t)
        for m, c in other._t.items():
            v = t.get(m, 0) + c
            if v:
                t[m] = v
            else:
                t.pop(m, None)
        return Multivector(self.n, t)

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self + (-other)

    def __neg__(self) -> "Multivector":
        return Multivector(self.n, {m: -c for m, c in self._t.items()})

    def __rmul__(self, s) -> "Multivector":
        if isinstance(s, Multivector):
            raise TypeError("use wedge() (or ^) for exterior products")
        if s == 0:
            return Multivector.zero(self.n)
        return Multivector(self.n, {m: s * c for m, c in self._t.items()})

    __mul__ = __rmul__

    def __xor__(self, other: "Multivector") -> "Multivector":
        return self.wedge(other)

    def _check(self, other: "Multivector"):
        if self.n != other.n:
            raise ValueError("ambient dimension mismatch")

    def grades(self) -> set:
        return {m.bit_count() for m in self._t}

    def grade(self) -> int:
        """Grade of a homogeneous multivector (0 for the zero form)."""
        gs = self.grades()
        if not gs:
            return 0
        if len(gs) > 1:
            raise ValueError("multivector is not homogeneous")
        return gs.pop()

    def is_homogeneous(self, grade: int | None = None) -> bool:
        gs = self.grades()
        if grade is None:
            return len(gs) <= 1
        return gs <= {grade}

    def wedge(self, other: "Multivector") -> "Multivector":
        self._check(other)
        return Multivector(self.n, wedge_dicts(self._t, other._t))

    def coeff_gcd(self) -> int:
        g = 0
        for c in self._t.values():
            if isinstance(c, Fraction):
                raise ValueError("gcd is defined for integer coefficients only")
            g = gcd(g, abs(c))
        return g

    def exact_div(self, k: int) -> "Multivector":
        out = {}
        for m, c in self._t.items():
            q = _div_exact(c, k)
            out[m] = q
        return Multivector(self.n, out)

    def max_abs(self):
        return max((abs(c) for c in self._t.values()), default=0)

    def is_integer(self) -> bool:
        return all(not isinstance(c, Fraction) or c.denominator == 1 for c in self._t.values())


def _div_exact(c, k: int):
    if isinstance(c, int):
        q, r = divmod(c, k)
        if r == 0:
            return q
        return Fraction(c, k)
    v = c / k
    return int(v) if v.denominator == 1 else v


def wedge_dicts(a: dict, b: dict) -> dict:
    """Exact dict-engine wedge; loops the smaller factor outside."""
    if len(a) > len(b):
        # wedge is graded-commutative; swapping costs a sign per term pair,
        # so keep the loop order and swap operands explicitly instead.
        out = {}
        for mb, cb in b.items():
            for ma, ca in a.items():
                if ma & mb:
                    continue
                s = merge_sign(ma, mb)
                m = ma | mb
                v = out.get(m, 0) + (ca * cb if s > 0 else -ca * cb)
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return out
    out = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            if ma & mb:
                continue
            s = merge_sign(ma, mb)
            m = ma | mb
            v = out.get(m, 0) + (ca * cb if s > 0 else -ca * cb)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


def _dict_is_int(d: dict) -> bool:
    return all(isinstance(c, int) for c in d.values())


def _to_arrays(d: dict):
    masks = np.fromiter(d.keys(), dtype=np.int64, count=len(d))
    coeffs = np.fromiter((float(v) for v in d.values()), dtype=np.float64, count=len(d))
    return masks, coeffs


class _KernelUnsafe(Exception):
    pass


def _kernel_wedge_sum(pairs, n: int) -> dict:
    """Sum of wedges of (small int dict, large int dict) pairs, n <= 16.

    Accumulates into a dense float64 buffer via bincount; every partial sum is
    integer-valued and bounded below 2**52, else _KernelUnsafe is raised.
    """
    if n > 16:
        raise _KernelUnsafe
    size = 1 << n
    buf = np.zeros(size, dtype=np.float64)
    bound = 0
    for a, b in pairs:
        if not a or not b:
            continue
        if not (_dict_is_int(a) and _dict_is_int(b)):
            raise _KernelUnsafe
        max_a = max(abs(c) for c in a.values())
        max_b = max(abs(c) for c in b.values())
        bound += min(len(a), len(b)) * max_a * max_b
        if bound >= _FLOAT_EXACT:
            raise _KernelUnsafe
        mb, cb = _to_arrays(b)
        for ma, ca in a.items():
            alive = ((mb & ma) == 0).astype(np.float64)
            inv = np.zeros(len(mb), dtype=np.int64)
            rest = ma
            while rest:
                low = rest & -rest
                inv += _POP16[mb & (low - 1)]
                rest ^= low
            signs = 1.0 - 2.0 * (inv & 1)
            vals = cb * (float(ca) * signs) * alive
            buf += np.bincount(mb | ma, weights=vals, minlength=size)
    nz = np.nonzero(buf)[0]
    vals = buf[nz]
    if not np.all(vals == np.rint(vals)):
        raise AssertionError("kernel produced a non-integer value")
    return {int(m): int(v) for m, v in zip(nz, vals)}


def wedge_sum(pairs, n: int) -> dict:
    """Exact sum of pairwise wedges; kernel when profitable, dicts otherwise."""
    pairs = [(a, b) for a, b in pairs if a and b]
    work = sum(len(a) * len(b) for a, b in pairs)
    if n <= 16 and work > 2000:
        try:
            return _kernel_wedge_sum(pairs, n)
        except _KernelUnsafe:
            pass
    out: dict = {}
    for a, b in pairs:
        for m, c in wedge_dicts(a, b).items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


def kahler_form(j, n: int | None = None) -> Multivector:
    """Kahler 2-form of a skew endomorphism: psi(X, Y) = <X, JY>.

    Accepts an exact Matrix or an integer numpy array; the coefficient on
    e^{pq} (p < q) is J[p-1, q-1].
    """
    if isinstance(j, Matrix):
        if not j.is_skew():
            raise ValueError("kahler_form needs a skew endomorphism")
        size = j.rows
        entry = lambda p, q: j[p, q]
    else:
        arr = np.asarray(j)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError("square matrix required")
        if not np.array_equal(arr, -arr.T):
            raise ValueError("kahler_form needs a skew endomorphism")
        size = arr.shape[0]
        entry = lambda p, q: int(arr[p, q])
    if n is None:
        n = size
    t = {}
    for p in range(size):
        for q in range(p + 1, size):
            c = entry(p, q)
            if c:
                t[(1 << p) | (1 << q)] = c
    return Multivector(n, t)


class FormMatrix:
    """Skew k x k matrix of homogeneous 2-forms on R^n."""

    __slots__ = ("k", "n", "_upper")

    def __init__(self, k: int, n: int, upper: dict):
        """upper maps (a, b) with 0 <= a < b < k to the 2-form entry."""
        self.k = k
        self.n = n
        self._upper = {}
        for (a, b), mv in upper.items():
            if not (0 <= a < b < k):
                raise ValueError("upper entries need 0 <= a < b < k")
            if mv.n != n:
                raise ValueError("entry ambient dimension mismatch")
            if not mv.is_homogeneous(2):
                raise ValueError("entries must be homogeneous 2-forms")
            if mv:
                self._upper[(a, b)] = mv

    @classmethod
    def from_endomorphisms(cls, mats, n: int | None = None) -> "FormMatrix":
        """Kahler-form matrix psi_ab of the compositions J_ab = M_a M_b."""
        arrs = [m.to_int_array() if isinstance(m, Matrix) else np.asarray(m) for m in mats]
        size = arrs[0].shape[0]
        if n is None:
            n = size
        upper = {}
        for a in range(len(arrs)):
            for b in range(a + 1, len(arrs)):
                upper[(a, b)] = kahler_form(arrs[a] @ arrs[b], n)
        return cls(len(arrs), n, upper)

    def entry(self, a: int, b: int) -> Multivector:
        if a == b:
            return Multivector.zero(self.n)
        if a < b:
            return self._upper.get((a, b), Multivector.zero(self.n))
        mv = self._upper.get((b, a))
        return -mv if mv is not None else Multivector.zero(self.n)

    def entry_dict(self, a: int, b: int) -> dict:
        if a == b:
            return {}
        if a < b:
            mv = self._upper.get((a, b))
            return mv._t if mv is not None else {}
        mv = self._upper.get((b, a))
        return {m: -c for m, c in mv._t.items()} if mv is not None else {}


def charpoly_coeffs(f: FormMatrix) -> list:
    """Coefficients tau_1..tau_k of det(tI - f) over the even exterior algebra.

    Faddeev-LeVerrier recursion: M_1 = f, c_s = -tr(M_s)/s,
    M_{s+1} = f (M_s + c_s I).  Divisions by s are exact because the c_s are
    the characteristic coefficients themselves.  tau_s is a 2s-form.
    """
    k, n = f.k, f.n
    psi = [[f.entry_dict(i, j) for j in range(k)] for i in range(k)]
    cur = [row[:] for row in psi]
    taus = []
    for step in range(1, k + 1):
        tr: dict = {}
        for i in range(k):
            for m, c in cur[i][i].items():
                v = tr.get(m, 0) + c
                if v:
                    tr[m] = v
                else:
                    tr.pop(m, None)
        c_step = {m: _div_exact(-c, step) for m, c in tr.items()}
        taus.append(Multivector(n, c_step))
        if step == k:
            break
        nxt = []
        for i in range(k):
            row = []
            for j in range(k):
                pairs = []
                for t in range(k):
                    b = cur[t][j]
                    if t == j and c_step:
                        b = dict(b)
                        for m, c in c_step.items():
                            v = b.get(m, 0) + c
                            if v:
                                b[m] = v
                            else:
                                b.pop(m, None)
                    if psi[i][t] and b:
                        pairs.append((psi[i][t], b))
                row.append(wedge_sum(pairs, n))
            nxt.append(row)
        cur = nxt
    return taus


def tau2_direct(f: FormMatrix) -> Multivector:
    """Second characteristic coefficient via the direct sum of squares."""
    out = Multivector.zero(f.n)
    for (a, b), mv in f._upper.items():
        out = out + mv.wedge(mv)
    return out


def tau4_coefficient(f: FormMatrix, indices) -> "int | Fraction":
    """Coefficient of tau_4 on one blade, by restricting every entry to
    sub-blades of the target before wedging; avoids building the full form."""
    target = _indices_to_mask(indices)

    def restricted(a, b):
        return {m: c for m, c in f.entry_dict(a, b).items() if not (m & ~target)}

    total = 0
    for a, b, c, d in combinations(range(f.k), 4):
        pf: dict = {}
        for sgn, (p, q, r, s) in ((1, (a, b, c, d)), (-1, (a, c, b, d)), (1, (a, d, b, c))):
            for m, coeff in wedge_dicts(restricted(p, q), restricted(r, s)).items():
                v = pf.get(m, 0) + sgn * coeff
                if v:
                    pf[m] = v
                else:
                    pf.pop(m, None)
        total += wedge_dicts(pf, pf).get(target, 0)
    return total


def tau4_direct(f: FormMatrix) -> Multivector:
    """Fourth characteristic coefficient as the sum of squared sub-Pfaffians.

    For every a < b < c < d:  (f_ab ^ f_cd - f_ac ^ f_bd + f_ad ^ f_bc)^2.
    Uses the dict engine only, independently of the Faddeev-LeVerrier path.
    """
    if f.k < 4:
        raise ValueError("tau4 needs a matrix of size >= 4")
    total: dict = {}
    for a, b, c, d in combinations(range(f.k), 4):
        pf = Multivector(f.n, wedge_dicts(f.entry_dict(a, b), f.entry_dict(c, d)))
        pf = pf - Multivector(f.n, wedge_dicts(f.entry_dict(a, c), f.entry_dict(b, d)))
        pf = pf + Multivector(f.n, wedge_dicts(f.entry_dict(a, d), f.entry_dict(b, c)))
        for m, coeff in wedge_dicts(pf._t, pf._t).items():
            v = total.get(m, 0) + coeff
            if v:
                total[m] = v
            else:
                total.pop(m, None)
    return Multivector(f.n, total)
