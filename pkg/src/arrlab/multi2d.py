"""Derivation modules of rank-2 multiarrangements, solved exactly.

A derivation theta = P dx + Q dy of degree d lies in D(A, m) iff each
line form alpha_i^{m_i} divides a_i P + b_i Q.  Divisibility becomes
linear conditions on the 2(d+1) coefficients after a unimodular change
of variables sending alpha_i to a coordinate, so everything reduces to
exact rational nullspaces.  Rank-2 multiarrangements are always free,
which the Saito determinant certifies instance by instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .linalg import Vec, frac, nullspace, primitive, rank, rref

HPoly = tuple[Fraction, ...]  # homogeneous bivariate: coeffs[j] * x^(d-j) y^j


class InternalInconsistencyError(RuntimeError):
    """Freeness of rank-2 multiarrangements guarantees a Saito pair exists;
    failing to find one means an implementation bug, not a mathematical fact."""


@dataclass(frozen=True)
class Multi2D:
    """Pairwise non-parallel primitive integer line forms with multiplicities."""

    lines: tuple[tuple[int, int], ...]
    mults: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.mults)

    def active(self) -> "Multi2D":
        """Drop multiplicity-0 lines."""
        pairs = [(l, m) for l, m in zip(self.lines, self.mults) if m > 0]
        return Multi2D(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))


def multi2d(lines: Sequence[Sequence[int]], mults: Sequence[int]) -> Multi2D:
    if len(lines) != len(mults):
        raise ValueError("multiplicity length does not match line count")
    canon = []
    for l in lines:
        if len(l) != 2:
            raise ValueError(f"line form {l} is not bivariate")
        canon.append(primitive(l))
    if len(set(canon)) != len(canon):
        raise ValueError("parallel (equal) lines are not allowed")
    if any(m < 0 for m in mults):
        raise ValueError("negative multiplicity")
    return Multi2D(tuple(canon), tuple(int(m) for m in mults))


@dataclass(frozen=True)
class Derivation2:
    """theta = P dx + Q dy with homogeneous P, Q of common degree."""

    p: HPoly
    q: HPoly

    @property
    def degree(self) -> int:
        return len(self.p) - 1

    def to_json(self) -> dict:
        return {"P": [str(c) for c in self.p], "Q": [str(c) for c in self.q]}


def _hmul(p: Sequence, q: Sequence) -> HPoly:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += frac(a) * frac(b)
    return tuple(out)


def _linear_power(s, t, k: int) -> HPoly:
    """(s*first + t*second)^k as a homogeneous coefficient vector."""
    return tuple(frac(comb(k, i)) * frac(s) ** (k - i) * frac(t) ** i
                 for i in range(k + 1))


def lines_product(ma: Multi2D) -> HPoly:
    """Defining form prod alpha_i^{m_i} (degree = |m|)."""
    out: HPoly = (Fraction(1),)
    for (a, b), m in zip(ma.lines, ma.mults):
        for _ in range(m):
            out = _hmul(out, (frac(a), frac(b)))
    return out


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    g, x, y = _egcd(b, a % b)
    return (g, y, x - (a // b) * y)


def _subst_matrix(a: int, b: int, d: int) -> list[list[Fraction]]:
    """Coefficient matrix of R(x,y) -> R(x(u,w), y(u,w)) with u = a x + b y.

    Uses the unimodular completion w = c x + d0 y (a d0 - b c = 1), so the
    substitution is integer-preserving.
    """
    g, x0, y0 = _egcd(a, b)
    assert g == 1, "line form must be primitive"
    d0, c = x0, -y0  # a*d0 - b*c = a*x0 + b*y0 = 1
    # x = d0 u - b w ; y = -c u + a w
    cols = []
    for j in range(d + 1):
        xpart = _linear_power(d0, -b, d - j)
        ypart = _linear_power(-c, a, j)
        cols.append(_hmul(xpart, ypart))
    return [[cols[j][i] for j in range(d + 1)] for i in range(d + 1)]


def _divisibility_rows(line: tuple[int, int], m: int, d: int) -> list[list[Fraction]]:
    """Linear conditions on (p_0..p_d, q_0..q_d) for alpha^m | a P + b Q."""
    a, b = line
    sub = _subst_matrix(a, b, d)
    rows = []
    lo = max(0, d - m + 1)  # indices with u-exponent d - i < m
    for i in range(lo, d + 1):
        row = [frac(a) * sub[i][j] for j in range(d + 1)]
        row += [frac(b) * sub[i][j] for j in range(d + 1)]
        rows.append(row)
    return rows


def _condition_rows(ma: Multi2D, d: int) -> list[list[Fraction]]:
    rows = []
    for line, m in zip(ma.lines, ma.mults):
        if m > 0:
            rows.extend(_divisibility_rows(line, m, d))
    return rows


def derivation_space(ma: Multi2D, d: int) -> list[Derivation2]:
    """Deterministic basis of the degree-d slice of D(A, m)."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    basis = nullspace(_condition_rows(ma, d), 2 * (d + 1))
    out = []
    for v in basis:
        w = primitive(v)  # integer coefficients, deterministic sign
        out.append(Derivation2(tuple(map(frac, w[: d + 1])),
                               tuple(map(frac, w[d + 1:]))))
    return out


def derivation_space_dim(ma: Multi2D, d: int) -> int:
    return len(derivation_space(ma, d))


def in_module(theta: Derivation2, ma: Multi2D) -> bool:
    """Direct divisibility check that theta lies in D(A, m)."""
    d = theta.degree
    coords = list(theta.p) + list(theta.q)
    for row in _condition_rows(ma, d):
        if sum(r * c for r, c in zip(row, coords)) != 0:
            return False
    return True


def _monomial_multiples(theta: Derivation2, d2: int) -> list[Vec]:
    """Coefficient vectors of x^i y^(k-i) * theta in the degree-d2 slice."""
    d1 = theta.degree
    k = d2 - d1
    vecs = []
    for i in range(k + 1):
        mono = [Fraction(0)] * (k + 1)
        mono[k - i] = Fraction(1)  # x^i y^(k-i)
        p = _hmul(mono, theta.p)
        q = _hmul(mono, theta.q)
        vecs.append(tuple(p) + tuple(q))
    return vecs


def saito_determinant(t1: Derivation2, t2: Derivation2) -> HPoly:
    det = _hmul(t1.p, t2.q)
    neg = _hmul(t2.p, t1.q)
    return tuple(a - b for a, b in zip(det, neg))


def _proportionality(p: Sequence[Fraction], q: Sequence[Fraction]) -> Fraction | None:
    """c with p = c q (c may be 0); None if not proportional or q = 0 != p."""
    if len(p) != len(q):
        return None
    j = next((i for i, x in enumerate(q) if x != 0), None)
    if j is None:
        return None if any(p) else Fraction(0)
    c = frac(p[j]) / q[j]
    return c if all(frac(a) == c * frac(b) for a, b in zip(p, q)) else None


def saito_constant(t1: Derivation2, t2: Derivation2, ma: Multi2D) -> Fraction | None:
    """The nonzero c with det = c * prod alpha^m, or None if Saito fails."""
    c = _proportionality(saito_determinant(t1, t2), lines_product(ma.active()))
    return c if c else None


def saito_check(t1: Derivation2, t2: Derivation2, ma: Multi2D) -> bool:
    """Saito's criterion in rank 2: det equals c * prod alpha^m with c != 0."""
    for t in (t1, t2):
        if not in_module(t, ma):
            raise ValueError("derivation is not in D(A, m)")
    return saito_constant(t1, t2, ma) is not None


@dataclass(frozen=True)
class ExponentsResult:
    exponents: tuple[int, int]
    basis: tuple[Derivation2, Derivation2]
    saito: Fraction

    def to_json(self) -> dict:
        return {
            "exponents": list(self.exponents),
            "basis": [t.to_json() for t in self.basis],
            "saito_det_constant": str(self.saito),
        }


def exponents2d(ma: Multi2D) -> ExponentsResult:
    """Exponents (d1 <= d2) and a Saito-certified basis of D(A, m)."""
    act = ma.active()
    total = act.total
    if total == 0:
        raise ValueError("at least one positive multiplicity required")
    d1 = basis1 = None
    for d in range(total // 2 + 1):
        basis = derivation_space(act, d)
        if basis:
            d1, basis1 = d, basis
            break
    if d1 is None:
        raise InternalInconsistencyError("no minimal-degree derivation found")
    theta1 = basis1[0]
    d2 = total - d1

    if d2 == d1:
        candidates = basis1[1:]
    else:
        mult_span = _monomial_multiples(theta1, d2)
        red, pivots = rref(mult_span)
        base_rank = len(red)
        candidates = []
        for t in derivation_space(act, d2):
            v = tuple(t.p) + tuple(t.q)
            if rank(list(red) + [v]) > base_rank:
                candidates.append(t)
    for theta2 in candidates:
        c = saito_constant(theta1, theta2, act)
        if c is not None:
            assert d1 + d2 == total
            return ExponentsResult((d1, d2), (theta1, theta2), c)
    raise InternalInconsistencyError(
        f"no Saito partner in degree {d2} for exponents ({d1}, {d2})"
    )
