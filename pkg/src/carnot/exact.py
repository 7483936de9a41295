"""Integer linear algebra used by the geometric predicates.

Everything here works on Python ints (or Fractions cleared to ints by the
caller); no floating point.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Vector = tuple[int, int, int]


def cross(u: Sequence[int], v: Sequence[int]) -> Vector:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def det3(u: Sequence[int], v: Sequence[int], w: Sequence[int]) -> int:
    return dot(u, cross(v, w))


def clear_denominators(values: Sequence[int | Fraction]) -> list[int]:
    """Scale a vector of rationals to integers (common denominator)."""
    den = 1
    for v in values:
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    return [int(v * den) for v in values]


def primitive(values: Sequence[int | Fraction]) -> tuple[int, ...]:
    """Coprime integer representative, first nonzero entry positive.

    Raises ValueError on the zero vector.
    """
    ints = clear_denominators(values)
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        raise ValueError("zero vector has no projective representative")
    for v in ints:
        if v != 0:
            if v < 0:
                g = -g
            break
    return tuple(v // g for v in ints)


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot = next((r for r in range(rank, n_rows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, n_rows):
            for c in range(col + 1, n_cols):
                m[r][c] = (m[r][c] * p - m[r][col] * m[rank][c]) // prev
            m[r][col] = 0
        prev = p
        rank += 1
    return rank


def bareiss_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (exact, fraction-free)."""
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        p = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * p - m[i][k] * m[k][j]) // prev
        prev = p
    return sign * m[n - 1][n - 1] if n else 1


def kernel_vector(rows: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Generator of the kernel of an n x (n+1) integer matrix of rank n.

    Entry i is (-1)^i times the minor with column i deleted; the caller is
    responsible for checking the rank first (a rank-deficient matrix gives
    the zero vector).
    """
    n_cols = len(rows[0])
    out = []
    for i in range(n_cols):
        minor = [[r[j] for j in range(n_cols) if j != i] for r in rows]
        d = bareiss_det(minor)
        out.append(-d if i % 2 else d)
    return tuple(out)


def adjugate3(m: Sequence[Sequence[int]]) -> list[list[int]]:
    """Adjugate of a 3x3 matrix; for symmetric m the result is symmetric."""
    r0, r1, r2 = m
    # columns of the adjugate are cross products of pairs of rows
    c0 = cross(r1, r2)
    c1 = cross(r2, r0)
    c2 = cross(r0, r1)
    return [[c0[i], c1[i], c2[i]] for i in range(3)]


def matvec(m: Sequence[Sequence[int]], v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(a * b for a, b in zip(row, v)) for row in m)


def modp_det(rows: Sequence[Sequence[int]], p: int) -> int:
    """Determinant modulo a prime; used as a cheap nonzero filter."""
    m = [[v % p for v in r] for r in rows]
    n = len(m)
    det = 1
    for k in range(n):
        pivot = next((r for r in range(k, n) if m[r][k]), None)
        if pivot is None:
            return 0
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            det = -det
        det = det * m[k][k] % p
        inv = pow(m[k][k], -1, p)
        for i in range(k + 1, n):
            f = m[i][k] * inv % p
            if f:
                row_k = m[k]
                row_i = m[i]
                for j in range(k, n):
                    row_i[j] = (row_i[j] - f * row_k[j]) % p
    return det % p
