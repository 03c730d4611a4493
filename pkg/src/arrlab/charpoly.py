"""Intersection posets, Moebius functions, Poincare/characteristic polynomials.

The poset is built breadth-first by codimension with canonical-form
deduplication; Moebius values come from the recursive sum over lower
intervals.  A separate incremental line-sweep oracle cross-checks chamber
counts of planar arrangements independently of the poset.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .arr_core import Arrangement, Flat, ambient_flat, essentialize
from .linalg import frac

DEFAULT_FLAT_BUDGET = 10**6
FLAT_BUDGET_ENV = "ARRLAB_FLAT_BUDGET"


class FlatBudgetError(RuntimeError):
    """Raised when the intersection poset outgrows the resource budget."""

    def __init__(self, codim: int, count: int, budget: int):
        self.codim = codim
        super().__init__(
            f"flat budget exceeded at codimension {codim}: {count} > {budget}"
        )


def flat_budget() -> int:
    raw = os.environ.get(FLAT_BUDGET_ENV)
    return int(raw) if raw else DEFAULT_FLAT_BUDGET


# ---------------------------------------------------------------------------
# Integer polynomials (coefficient lists by degree)


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...]  # coeffs[i] multiplies t^i; trailing zeros trimmed

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coeffs or not other.coeffs:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return intpoly(out)

    def to_json(self) -> list[int]:
        return list(self.coeffs)


def intpoly(coeffs: Sequence[int]) -> IntPolynomial:
    cs = list(int(c) for c in coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return IntPolynomial(tuple(cs))


ONE = intpoly([1])


def factorization_check(p: IntPolynomial, exps: Iterable[int]) -> bool:
    """True iff p equals prod (1 + m t) over the multiset exactly."""
    prod = ONE
    for m in exps:
        prod = prod * intpoly([1, int(m)])
    return prod == p


def integer_roots(p: IntPolynomial) -> list[int] | None:
    """Roots of a monic integer polynomial, or None if it does not split over Z.

    Root magnitudes are bounded by the largest coefficient magnitude + 1,
    and all roots of characteristic polynomials here are >= 0.
    """
    if not p.coeffs or p.coeffs[-1] != 1:
        return None
    roots: list[int] = []
    cur = list(p.coeffs)
    bound = max(abs(c) for c in cur) + 1
    for r in range(0, bound + 1):
        while len(cur) > 1:
            # synthetic division by (t - r)
            quot = [0] * (len(cur) - 1)
            acc = 0
            for i in range(len(cur) - 1, 0, -1):
                acc = acc * r + cur[i]
                quot[i - 1] = acc
            rem = acc * r + cur[0]
            if rem != 0:
                break
            roots.append(r)
            cur = quot
        if len(cur) == 1:
            break
    if len(cur) != 1 or cur[0] != 1:
        return None
    return sorted(roots)


# ---------------------------------------------------------------------------
# Intersection poset


@dataclass(frozen=True)
class PosetFlat:
    flat: Flat
    hyperplanes: frozenset[int]
    mobius: int


@dataclass(frozen=True)
class IntersectionPoset:
    arrangement: Arrangement
    levels: tuple[tuple[PosetFlat, ...], ...]  # grouped by codimension

    def all_flats(self) -> list[PosetFlat]:
        return [pf for level in self.levels for pf in level]

    def to_json(self) -> dict:
        return {
            "flats": [
                {
                    "codim": c,
                    "dim": pf.flat.dim,
                    "mobius": pf.mobius,
                    "hyperplanes": sorted(pf.hyperplanes),
                }
                for c, level in enumerate(self.levels)
                for pf in level
            ]
        }


def intersection_poset(arr: Arrangement) -> IntersectionPoset:
    """All nonempty intersections of subfamilies, with Moebius values."""
    budget = flat_budget()
    bottom = ambient_flat(arr.dim)
    # raw levels: canonical flat -> set of containing hyperplane indices
    levels: list[dict[Flat, frozenset[int]]] = [{bottom: frozenset()}]
    total = 1
    while True:
        frontier = levels[-1]
        nxt: dict[Flat, frozenset[int]] = {}
        for flat, hset in frontier.items():
            for i, h in enumerate(arr.hyperplanes):
                if i in hset:
                    continue
                cut = flat.intersect(h)
                if cut is None or cut is flat:
                    continue
                if cut not in nxt:
                    nxt[cut] = frozenset(
                        j
                        for j, k in enumerate(arr.hyperplanes)
                        if cut.contains_hyperplane_locus(k)
                    )
        if not nxt:
            break
        total += len(nxt)
        if total > budget:
            raise FlatBudgetError(len(levels), total, budget)
        levels.append(nxt)

    # Moebius by recursion: mu(bottom) = 1, sum over closed lower interval = 0.
    mobius: dict[frozenset[int], int] = {}
    out_levels: list[tuple[PosetFlat, ...]] = []
    seen: list[tuple[Flat, frozenset[int]]] = []
    for level in levels:
        row = []
        for flat in sorted(level, key=lambda f: f.rows):
            hset = level[flat]
            if not seen:
                mu = 1
            else:
                mu = -sum(mobius[prev_h] for prev_f, prev_h in seen if prev_h < hset)
                if not hset:
                    mu = 1  # only the bottom has an empty localization
            mobius[hset] = mu
            row.append(PosetFlat(flat, hset, mu))
        seen.extend((pf.flat, pf.hyperplanes) for pf in row)
        out_levels.append(tuple(row))
    return IntersectionPoset(arr, tuple(out_levels))


def poincare(arr: Arrangement, poset: IntersectionPoset | None = None) -> IntPolynomial:
    """pi(A, t) = sum over flats of |mu| t^codim."""
    poset = poset or intersection_poset(arr)
    coeffs = [0] * len(poset.levels)
    for c, level in enumerate(poset.levels):
        coeffs[c] = sum(abs(pf.mobius) for pf in level)
    return intpoly(coeffs)


def char_poly(arr: Arrangement, poset: IntersectionPoset | None = None) -> IntPolynomial:
    """Essential characteristic polynomial sum mu(X) t^{dim X - dim center}."""
    if not arr.central:
        raise ValueError("characteristic polynomial requires a central arrangement")
    poset = poset or intersection_poset(arr)
    r = len(poset.levels) - 1  # essential rank
    shift = arr.dim - r
    coeffs = [0] * (r + 1)
    for level in poset.levels:
        for pf in level:
            coeffs[pf.flat.dim - shift] += pf.mobius
    return intpoly(coeffs)


def chambers(arr: Arrangement, poset: IntersectionPoset | None = None) -> int:
    """Number of chambers, as pi(A, 1) (Zaslavsky)."""
    return poincare(arr, poset)(1)


# ---------------------------------------------------------------------------
# Independent 2D region-counting oracle


def chambers_2d_oracle(arr: Arrangement) -> int:
    """Incremental exact count of regions of a line arrangement in the plane.

    regions = 1 + sum_i (1 + p_i) with p_i the number of distinct points
    where line i meets lines 1..i-1.  Intersections are exact rationals;
    independent of the poset machinery.
    """
    ess = essentialize(arr)
    if ess.dim != 2:
        raise ValueError(f"oracle needs essential rank 2, got {ess.dim}")
    lines = [(frac(h.normal[0]), frac(h.normal[1]), h.offset) for h in ess.hyperplanes]
    regions = 1
    for i, (a1, b1, c1) in enumerate(lines):
        pts: set[tuple[Fraction, Fraction]] = set()
        for a2, b2, c2 in lines[:i]:
            det = a1 * b2 - a2 * b1
            if det == 0:
                continue
            x = (c1 * b2 - c2 * b1) / det
            y = (a1 * c2 - a2 * c1) / det
            pts.add((x, y))
        regions += 1 + len(pts)
    return regions
