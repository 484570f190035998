"""Exact dense linear algebra over the rationals.

Matrices are immutable, row-major, with ``int`` or ``fractions.Fraction``
entries.  Everything here is pure and safe to share across threads.  Rank and
Lie-closure computations reduce integer rows fraction-free (cross-multiplied,
gcd-normalized), so no rational blow-up occurs even for 128x128 inputs.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np

Scalar = "int | Fraction"

# numpy int64 products must stay below this; all matrices handled here have
# entries of magnitude a few thousand at most.
_INT64_SAFE = 2**62


class Matrix:
    """Immutable dense matrix with exact rational entries."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, rows: int, cols: int, entries):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self._e = entries

    @classmethod
    def from_rows(cls, rows) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def from_blocks(cls, blocks) -> "Matrix":
        """Assemble from a 2D grid of matrices (block rows must align)."""
        rows = []
        for brow in blocks:
            height = brow[0].rows
            if any(b.rows != height for b in brow):
                raise ValueError("block heights differ within a block row")
            for i in range(height):
                rows.append([x for b in brow for x in b.row(i)])
        return cls.from_rows(rows)

    @classmethod
    def from_array(cls, arr) -> "Matrix":
        arr = np.asarray(arr)
        return cls(arr.shape[0], arr.shape[1], [int(x) for x in arr.ravel()])

    def __getitem__(self, ij):
        i, j = ij
        return self._e[i * self.cols + j]

    def row(self, i: int):
        return self._e[i * self.cols : (i + 1) * self.cols]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and all(a == b for a, b in zip(self._e, other._e))
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self._e))

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols})"

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self._e, other._e)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self._e, other._e)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-a for a in self._e])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    def scaled(self, s) -> "Matrix":
        return Matrix(self.rows, self.cols, [s * a for a in self._e])

    def _same_shape(self, other: "Matrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def _require_square(self):
        if self.rows != self.cols:
            raise ValueError("matrix is not square")

    def transpose(self) -> "Matrix":
        n, m = self.rows, self.cols
        return Matrix(m, n, [self._e[i * m + j] for j in range(m) for i in range(n)])

    def trace(self):
        self._require_square()
        return sum(self._e[i * self.cols + i] for i in range(self.rows))

    def is_symmetric(self) -> bool:
        self._require_square()
        n = self.cols
        return all(
            self._e[i * n + j] == self._e[j * n + i] for i in range(n) for j in range(i + 1, n)
        )

    def is_skew(self) -> bool:
        self._require_square()
        n = self.cols
        if any(self._e[i * n + i] != 0 for i in range(n)):
            return False
        return all(
            self._e[i * n + j] == -self._e[j * n + i] for i in range(n) for j in range(i + 1, n)
        )

    def is_integer(self) -> bool:
        return all(isinstance(a, int) or a.denominator == 1 for a in self._e)

    def to_int_array(self) -> np.ndarray:
        """Exact int64 view; raises if any entry is not an integer."""
        if not self.is_integer():
            raise ValueError("matrix has non-integer entries")
        arr = np.array([int(a) for a in self._e], dtype=np.int64)
        return arr.reshape(self.rows, self.cols)

    def apply(self, vec):
        """Matrix-vector product on an exact coefficient sequence."""
        vec = list(vec)
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return [
            sum(self._e[i * self.cols + j] * vec[j] for j in range(self.cols))
            for i in range(self.rows)
        ]

    def kron(self, other: "Matrix") -> "Matrix":
        out = []
        for i in range(self.rows):
            for p in range(other.rows):
                row = []
                for j in range(self.cols):
                    a = self._e[i * self.cols + j]
                    row.extend(a * b for b in other.row(p))
                out.append(row)
        return Matrix.from_rows(out)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise ValueError(f"dimension mismatch: {a.rows}x{a.cols} @ {b.rows}x{b.cols}")
    bt = b.transpose()
    out = []
    for i in range(a.rows):
        arow = a.row(i)
        for j in range(b.cols):
            brow = bt.row(j)
            out.append(sum(x * y for x, y in zip(arow, brow)))
    return Matrix(a.rows, b.cols, out)


def is_symmetric(a: Matrix) -> bool:
    return a.is_symmetric()


def is_skew(a: Matrix) -> bool:
    return a.is_skew()


def trace(a: Matrix):
    return a.trace()


def transpose(a: Matrix) -> Matrix:
    return a.transpose()


def _strip_content(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v if v >= 0 else -v)
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


class RowSpace:
    """Incremental row space over the rationals.

    Rows are sparse ``{column: int}`` dicts; reduction is fraction-free
    (cross-multiplication followed by content stripping), so coefficients stay
    integral throughout.
    """

    def __init__(self):
        self._pivots: dict[int, dict] = {}

    @property
    def dim(self) -> int:
        return len(self._pivots)

    def add(self, row: dict) -> bool:
        """Reduce ``row``; add the remainder to the space. True if dim grew."""
        row = {k: v for k, v in row.items() if v}
        while row:
            col = min(row)
            piv = self._pivots.get(col)
            if piv is None:
                row = _strip_content(row)
                if row[col] < 0:
                    row = {k: -v for k, v in row.items()}
                self._pivots[col] = row
                return True
            a = piv[col]
            b = row[col]
            new = {}
            for k, v in row.items():
                new[k] = a * v
            for k, v in piv.items():
                w = new.get(k, 0) - b * v
                if w:
                    new[k] = w
                else:
                    new.pop(k, None)
            row = _strip_content(new)
        return False

    def contains(self, row: dict) -> bool:
        saved = dict(self._pivots)
        grew = self.add(row)
        if grew:
            self._pivots = saved
        return not grew


def _row_of_fractions(entries) -> dict:
    """Clear denominators of one row; scaling does not change the row space."""
    den = 1
    for v in entries:
        if isinstance(v, Fraction):
            den = den * v.denominator // gcd(den, v.denominator)
    return {j: int(v * den) for j, v in enumerate(entries) if v}


def rank(m: Matrix) -> int:
    """Exact rank via incremental fraction-free row reduction."""
    space = RowSpace()
    for i in range(m.rows):
        space.add(_row_of_fractions(m.row(i)))
    return space.dim


def _as_int_matrices(generators) -> list[np.ndarray]:
    mats = []
    for g in generators:
        if isinstance(g, Matrix):
            g._require_square()
            den = 1
            for v in g._e:
                if isinstance(v, Fraction):
                    den = den * v.denominator // gcd(den, v.denominator)
            arr = np.array(
                [int(v * den) for v in g._e], dtype=np.int64
            ).reshape(g.rows, g.cols)
        else:
            arr = np.asarray(g, dtype=np.int64)
            if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
                raise ValueError("generators must be square")
        mats.append(arr)
    if len({m.shape for m in mats}) > 1:
        raise ValueError("generators differ in size")
    return mats


def _vec_sparse(arr: np.ndarray) -> dict:
    flat = arr.ravel()
    idx = np.nonzero(flat)[0]
    return {int(i): int(flat[i]) for i in idx}


def lie_closure_dim(generators, max_dim: int | None = None) -> int:
    """Dimension of the smallest Lie algebra of matrices containing the span
    of ``generators``.

    Repeatedly brackets the current basis and extends it by every bracket that
    enlarges the row space, until stable.  Generators must be square, equally
    sized and skew-symmetric; ``max_dim`` is a safety bound.
    """
    mats = _as_int_matrices(generators)
    if not mats:
        return 0
    n = mats[0].shape[0]
    if max_dim is None:
        max_dim = n * (n - 1) // 2
    for m in mats:
        if not np.array_equal(m, -m.T):
            raise ValueError("generators must be skew-symmetric")

    space = RowSpace()
    basis: list[np.ndarray] = []
    for m in mats:
        if space.add(_vec_sparse(m)):
            basis.append(m)
            if len(basis) > max_dim:
                raise ValueError(f"Lie closure exceeds max_dim={max_dim}")

    # Bracket every unordered pair exactly once, including pairs formed with
    # elements appended during the sweep.
    i = 0
    while i < len(basis):
        a = basis[i]
        amax = int(np.abs(a).max())
        for j in range(i):
            b = basis[j]
            bmax = int(np.abs(b).max())
            if amax and bmax and 2 * n * amax * bmax >= _INT64_SAFE:
                raise OverflowError("bracket coefficients exceed the int64 safety bound")
            br = a @ b - b @ a
            if space.add(_vec_sparse(br)):
                basis.append(br)
                if len(basis) > max_dim:
                    raise ValueError(f"Lie closure exceeds max_dim={max_dim}")
        i += 1
    return len(basis)
