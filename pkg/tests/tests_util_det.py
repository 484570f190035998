"""Exact determinant helper for test oracles (cofactor expansion)."""

from fractions import Fraction


def exact_det(rows) -> Fraction:
    n = len(rows)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        total += (-1) ** j * Fraction(rows[0][j]) * exact_det(minor)
    return total
