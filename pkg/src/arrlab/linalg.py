"""Exact rational linear algebra: RREF, nullspaces, primitive integer vectors.

Everything works over fractions.Fraction so downstream canonical forms
(flats, hyperplanes, derivation coefficients) compare bitwise.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vec = tuple[Fraction, ...]


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def vec(entries: Iterable) -> Vec:
    return tuple(frac(x) for x in entries)


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum((frac(a) * frac(b) for a, b in zip(u, v)), Fraction(0))


def rref(rows: Iterable[Sequence]) -> tuple[tuple[Vec, ...], tuple[int, ...]]:
    """Reduced row echelon form.

    Returns (nonzero rows, pivot column indices).  The output is the unique
    canonical RREF, so equal row spaces give bitwise-equal results.
    """
    mat = [list(map(frac, r)) for r in rows]
    if not mat:
        return (), ()
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = mat[r][c]
        mat[r] = [x / inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return tuple(tuple(row) for row in mat[:r]), tuple(pivots)


def rank(rows: Iterable[Sequence]) -> int:
    return len(rref(rows)[0])


def nullspace(rows: Iterable[Sequence], ncols: int) -> list[Vec]:
    """Deterministic basis of {x : M x = 0}, one vector per free column."""
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[fc]
        basis.append(tuple(v))
    return basis


def reduce_against(row: Sequence, red: Sequence[Vec], pivots: Sequence[int]) -> Vec:
    """Residual of a row after elimination by RREF rows (zero iff in row space)."""
    out = list(map(frac, row))
    for r, p in zip(red, pivots):
        if out[p] != 0:
            f = out[p]
            out = [a - f * b for a, b in zip(out, r)]
    return tuple(out)


def primitive(v: Sequence) -> tuple[int, ...]:
    """Scale a nonzero rational vector to coprime integers, leading entry > 0."""
    fv = [frac(x) for x in v]
    den = 1
    for x in fv:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fv]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def scaled_integer_vector(v: Sequence) -> tuple[tuple[int, ...], Fraction]:
    """Primitive integer form of v together with the factor c: v = c * primitive."""
    p = primitive(v)
    j = next(i for i, x in enumerate(p) if x != 0)
    return p, frac(v[j]) / p[j]
