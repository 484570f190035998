"""JSON/CSV serialization: rationals as "p/q" strings, never floats.

Multivector JSON: {"n": 16, "grade": 8, "terms": [{"blade": [1, ...],
"coeff": "2"}, ...]} with blades sorted lexicographically.  CSV rows are
"blade;coeff" with dash-joined indices.  Monte-Carlo floats are emitted with
17 significant digits.
"""

from __future__ import annotations

from fractions import Fraction

from .exterior import Multivector
from .linalg import Matrix


def rational_str(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


def float_str(x: float) -> str:
    return format(x, ".17g")


def multivector_to_json(mv: Multivector) -> dict:
    grades = mv.grades()
    return {
        "n": mv.n,
        "grade": grades.pop() if len(grades) == 1 else sorted(grades),
        "terms": [
            {"blade": list(idx), "coeff": rational_str(c)} for idx, c in mv.terms()
        ],
    }


def multivector_from_json(obj: dict) -> Multivector:
    mv = Multivector.zero(obj["n"])
    for term in obj["terms"]:
        mv = mv + Multivector.blade(obj["n"], term["blade"], parse_rational(term["coeff"]))
    return mv


def multivector_to_csv(mv: Multivector) -> str:
    lines = ["blade;coeff"]
    for idx, c in mv.terms():
        lines.append(f"{'-'.join(map(str, idx))};{rational_str(c)}")
    return "\n".join(lines) + "\n"


def matrix_to_json(m: Matrix) -> list:
    return [[rational_str(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]


def int_matrix_to_triplets(arr) -> list:
    """Sparse triplet rows [row, col, value] of an integer matrix, 0-based."""
    import numpy as np

    rows, cols = np.nonzero(arr)
    return [[int(r), int(c), int(arr[r, c])] for r, c in zip(rows, cols)]
