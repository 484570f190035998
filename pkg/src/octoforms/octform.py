"""Exterior forms with octonion coefficients.

Coefficients live in the level-3 Cayley-Dickson algebra and multiply in the
operand order of the wedge: (a ox e^A) ^ (b ox e^B) = (a*b) ox (e^A ^ e^B).
Octonion multiplication is neither commutative nor associative, so chains of
wedges must keep the intended parenthesization; nothing here reassociates.

Conjugation negates the seven imaginary components coefficient-wise; this is
the unique extension of octonion conjugation satisfying
conj(alpha ^ beta) = (-1)^{kl} conj(beta) ^ conj(alpha) on k- and l-forms.
"""

from __future__ import annotations

import numpy as np

from .cayley_dickson import basis_products
from .exterior import _POP16, merge_sign

_OCT_TABLE = basis_products(3)

# Structure tensor T[a, b, c] = coefficient of e_c in e_a * e_b.
_OCT_TENSOR = np.zeros((8, 8, 8), dtype=np.int64)
for (_a, _b), (_c, _s) in _OCT_TABLE.items():
    _OCT_TENSOR[_a, _b, _c] = _s

_INT64_SAFE = 2**62


def oct_mul8(a: tuple, b: tuple) -> tuple:
    """Octonion product of two coefficient 8-tuples."""
    out = [0] * 8
    for p, ca in enumerate(a):
        if not ca:
            continue
        for q, cb in enumerate(b):
            if not cb:
                continue
            r, s = _OCT_TABLE[(p, q)]
            out[r] += s * ca * cb
    return tuple(out)


def oct_conj8(a: tuple) -> tuple:
    return (a[0],) + tuple(-c for c in a[1:])


class OctForm:
    """Sparse exterior form on R^n with octonion coefficients."""

    __slots__ = ("n", "_t")

    def __init__(self, n: int, terms: dict):
        self.n = n
        self._t = {m: tuple(c) for m, c in terms.items() if any(c)}
        if any(m >> n for m in self._t):
            raise ValueError(f"blade outside ambient dimension {n}")

    @classmethod
    def zero(cls, n: int) -> "OctForm":
        return cls(n, {})

    def mask_items(self):
        return self._t.items()

    def __len__(self):
        return len(self._t)

    def __eq__(self, other):
        return isinstance(other, OctForm) and self.n == other.n and self._t == other._t

    def __repr__(self):
        return f"OctForm(n={self.n}, {len(self._t)} terms)"

    def __add__(self, other: "OctForm") -> "OctForm":
        if self.n != other.n:
            raise ValueError("ambient dimension mismatch")
        t = {m: list(c) for m, c in self._t.items()}
        for m, c in other._t.items():
            if m in t:
                for i in range(8):
                    t[m][i] += c[i]
            else:
                t[m] = list(c)
        return OctForm(self.n, t)

    def __sub__(self, other: "OctForm") -> "OctForm":
        return self + (-1) * other

    def __rmul__(self, s) -> "OctForm":
        return OctForm(self.n, {m: tuple(s * x for x in c) for m, c in self._t.items()})

    __mul__ = __rmul__

    def conjugate(self) -> "OctForm":
        return OctForm(self.n, {m: oct_conj8(c) for m, c in self._t.items()})

    def grades(self) -> set:
        return {m.bit_count() for m in self._t}

    def real_part(self) -> dict:
        """{mask: real coefficient} of the real component."""
        return {m: c[0] for m, c in self._t.items() if c[0]}

    def imaginary_is_zero(self) -> bool:
        return all(all(x == 0 for x in c[1:]) for c in self._t.values())

    def max_abs(self) -> int:
        return max((max(abs(x) for x in c) for c in self._t.values()), default=0)

    def wedge(self, other: "OctForm") -> "OctForm":
        """self ^ other, multiplying coefficients in this operand order."""
        if self.n != other.n:
            raise ValueError("ambient dimension mismatch")
        la, lb = len(self._t), len(other._t)
        if self.n <= 16 and la * lb > 3000:
            out = _oct_wedge_kernel(self, other)
            if out is not None:
                return out
        return self._wedge_dict(other)

    def _wedge_dict(self, other: "OctForm") -> "OctForm":
        out: dict = {}
        for ma, ca in self._t.items():
            for mb, cb in other._t.items():
                if ma & mb:
                    continue
                prod = oct_mul8(ca, cb)
                s = merge_sign(ma, mb)
                m = ma | mb
                acc = out.get(m)
                if acc is None:
                    out[m] = [s * x for x in prod] if s < 0 else list(prod)
                else:
                    if s > 0:
                        for i in range(8):
                            acc[i] += prod[i]
                    else:
                        for i in range(8):
                            acc[i] -= prod[i]
        return OctForm(self.n, out)


def _oct_wedge_kernel(a: OctForm, b: OctForm):
    """Vectorized integer wedge for n <= 16; None if the int64 bound fails."""
    ma = np.fromiter(a._t.keys(), dtype=np.int64, count=len(a._t))
    mb = np.fromiter(b._t.keys(), dtype=np.int64, count=len(b._t))
    ca = np.array([a._t[int(m)] for m in ma], dtype=np.int64)
    cb = np.array([b._t[int(m)] for m in mb], dtype=np.int64)
    bound = 64 * min(len(ma), len(mb)) * int(np.abs(ca).max()) * int(np.abs(cb).max())
    if bound >= _INT64_SAFE:
        return None

    cross = ma[:, None] & mb[None, :]
    alive = cross == 0
    inv = np.zeros(cross.shape, dtype=np.int64)
    for p, mask_a in enumerate(ma):
        rest = int(mask_a)
        while rest:
            low = rest & -rest
            inv[p] += _POP16[mb & (low - 1)]
            rest ^= low
    signs = np.where(inv & 1, -1, 1) * alive
    # products[p, q, c] = (ca[p] * cb[q])_c as octonions
    prods = np.einsum("pa,qb,abc->pqc", ca, cb, _OCT_TENSOR)
    prods *= signs[:, :, None]
    out_masks = (ma[:, None] | mb[None, :]).ravel()
    prods = prods.reshape(-1, 8)
    buf = np.zeros((1 << a.n, 8), dtype=np.int64)
    np.add.at(buf, out_masks, prods)
    nz = np.nonzero(np.any(buf, axis=1))[0]
    return OctForm(a.n, {int(m): tuple(int(x) for x in buf[m]) for m in nz})


def coordinate_octonion_form(n: int, offset: int) -> OctForm:
    """The octonion-valued 1-form sum_p e_p ox dcoord_{offset+p} (p = 0..7)."""
    terms = {}
    for p in range(8):
        c = [0] * 8
        c[p] = 1
        terms[1 << (offset + p)] = tuple(c)
    return OctForm(n, terms)
