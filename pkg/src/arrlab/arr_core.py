"""Affine and central hyperplane arrangements over exact rationals.

Hyperplanes are stored in canonical form (primitive integer normal with
positive leading entry, rational offset), so set semantics, deduplication
and golden comparisons are exact.  All values are immutable; every
operation is a pure function and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import Vec, frac, nullspace, reduce_against, rref, scaled_integer_vector


@dataclass(frozen=True, order=True)
class Hyperplane:
    """The locus {v : normal . v = offset} in canonical form."""

    normal: tuple[int, ...]
    offset: Fraction

    @property
    def dim(self) -> int:
        return len(self.normal)

    def row(self) -> Vec:
        """Augmented row (coefficients..., rhs) of the defining equation."""
        return tuple(map(frac, self.normal)) + (self.offset,)

    def to_json(self) -> dict:
        return {"normal": list(self.normal), "offset": str(self.offset)}


def hyperplane(normal: Sequence, offset=0) -> Hyperplane:
    """Canonicalize alpha . v = k: primitive integer alpha, leading entry > 0."""
    p, c = scaled_integer_vector(normal)
    return Hyperplane(p, frac(offset) / c)


@dataclass(frozen=True)
class Arrangement:
    """Finite duplicate-free set of hyperplanes in a fixed ambient dimension."""

    dim: int
    hyperplanes: tuple[Hyperplane, ...]

    @property
    def central(self) -> bool:
        return all(h.offset == 0 for h in self.hyperplanes)

    def __len__(self) -> int:
        return len(self.hyperplanes)

    def __contains__(self, h: Hyperplane) -> bool:
        return h in self.hyperplanes

    def delete(self, h: Hyperplane) -> "Arrangement":
        if h not in self.hyperplanes:
            raise ValueError(f"hyperplane {h} not in arrangement")
        return Arrangement(self.dim, tuple(k for k in self.hyperplanes if k != h))

    def add(self, h: Hyperplane) -> "Arrangement":
        if h.dim != self.dim:
            raise ValueError("dimension mismatch")
        if h in self.hyperplanes:
            raise ValueError(f"hyperplane {h} already present")
        return arrangement(self.dim, self.hyperplanes + (h,))

    def essential_rank(self) -> int:
        from .linalg import rank

        return rank([h.normal for h in self.hyperplanes])

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "hyperplanes": [h.to_json() for h in self.hyperplanes],
            "central": self.central,
        }


def arrangement(dim: int, hyps: Iterable[Hyperplane]) -> Arrangement:
    """Deduplicate and sort; sorting fixes every downstream output order."""
    uniq = sorted(set(hyps))
    for h in uniq:
        if h.dim != dim:
            raise ValueError(f"hyperplane in R^{h.dim} inside arrangement in R^{dim}")
    return Arrangement(dim, tuple(uniq))


def from_json(data: dict) -> Arrangement:
    return arrangement(
        data["dim"],
        [hyperplane(h["normal"], Fraction(h["offset"])) for h in data["hyperplanes"]],
    )


# ---------------------------------------------------------------------------
# Flats (affine subspaces in canonical RREF form)


@dataclass(frozen=True)
class Flat:
    """Nonempty affine subspace, canonicalized as the RREF of its equations."""

    ambient_dim: int
    rows: tuple[Vec, ...]  # augmented rows (coeffs..., rhs), reduced echelon

    @property
    def dim(self) -> int:
        return self.ambient_dim - len(self.rows)

    @property
    def codim(self) -> int:
        return len(self.rows)

    def contains_hyperplane_locus(self, h: Hyperplane) -> bool:
        """True iff this flat is contained in h."""
        pivots = tuple(next(i for i, x in enumerate(r) if x != 0) for r in self.rows)
        return all(x == 0 for x in reduce_against(h.row(), self.rows, pivots))

    def intersect(self, h: Hyperplane) -> "Flat | None":
        """Flat cut by h: self if h contains it, None if empty, else codim+1."""
        red, pivots = rref(list(self.rows) + [h.row()])
        if len(red) == len(self.rows):
            return self
        if pivots and pivots[-1] == self.ambient_dim:
            return None  # 0 = nonzero: empty intersection
        return Flat(self.ambient_dim, red)


def ambient_flat(dim: int) -> Flat:
    return Flat(dim, ())


def flat_from_rows(ambient_dim: int, rows: Iterable[Sequence]) -> Flat:
    red, pivots = rref(rows)
    if pivots and pivots[-1] == ambient_dim:
        raise ValueError("inconsistent system: empty locus is not a flat")
    return Flat(ambient_dim, red)


def flat_from_point(point: Sequence) -> Flat:
    n = len(point)
    rows = []
    for i, x in enumerate(point):
        row = [Fraction(0)] * (n + 1)
        row[i] = Fraction(1)
        row[n] = frac(x)
        rows.append(row)
    return flat_from_rows(n, rows)


def flat_of(arr: Arrangement, indices: Iterable[int]) -> Flat | None:
    """Intersection of the selected hyperplanes, or None if empty."""
    f: Flat | None = ambient_flat(arr.dim)
    for i in indices:
        f = f.intersect(arr.hyperplanes[i])
        if f is None:
            return None
    return f


def containing_hyperplanes(arr: Arrangement, flat: Flat) -> frozenset[int]:
    return frozenset(
        i for i, h in enumerate(arr.hyperplanes) if flat.contains_hyperplane_locus(h)
    )


def localization(arr: Arrangement, flat: Flat) -> Arrangement:
    """Sub-arrangement of hyperplanes containing the flat."""
    return arrangement(
        arr.dim, [h for h in arr.hyperplanes if flat.contains_hyperplane_locus(h)]
    )


# ---------------------------------------------------------------------------
# Root-system driven constructions (rs is duck-typed: see rootsys.RootSystem)


def _validate_mults(rs, *mults) -> list[tuple[int, ...]]:
    out = []
    for m in mults:
        t = tuple(int(x) for x in m)
        if len(t) != len(rs.orbits):
            raise ValueError(
                f"multiplicity length {len(t)} != orbit count {len(rs.orbits)}"
            )
        if any(x < 0 for x in t):
            raise ValueError(f"negative multiplicity in {t}")
        out.append(t)
    return out


def weyl_arrangement(rs) -> Arrangement:
    """Central arrangement of the reflecting hyperplanes ker(alpha)."""
    return arrangement(rs.ambient_dim, [hyperplane(r, 0) for r in rs.positive_roots])


def is_shi_catalan(rs, a, b) -> bool:
    """True iff a - b takes values in {-1, 0} on every orbit."""
    a, b = _validate_mults(rs, a, b)
    return all(aj - bj in (-1, 0) for aj, bj in zip(a, b))


def deform(rs, a, b) -> Arrangement:
    """Translates alpha . v = k for -a_j <= k <= b_j on each orbit j."""
    a, b = _validate_mults(rs, a, b)
    hyps = []
    for j, orbit in enumerate(rs.orbits):
        for i in orbit:
            root = rs.positive_roots[i]
            for k in range(-a[j], b[j] + 1):
                hyps.append(hyperplane(root, k))
    return arrangement(rs.ambient_dim, hyps)


# ---------------------------------------------------------------------------
# Coning and deconing


def infinity_hyperplane(cone_dim: int) -> Hyperplane:
    """x0 = 0, with the homogenizing coordinate placed last."""
    return hyperplane((0,) * (cone_dim - 1) + (1,), 0)


def cone(arr: Arrangement) -> Arrangement:
    """Homogenize {alpha = k} to {alpha - k x0 = 0} and add {x0 = 0}."""
    hyps = [infinity_hyperplane(arr.dim + 1)]
    for h in arr.hyperplanes:
        hyps.append(hyperplane(tuple(h.normal) + (-h.offset,), 0))
    return arrangement(arr.dim + 1, hyps)


def decone(arr: Arrangement, infinity: Hyperplane) -> Arrangement:
    """Inverse of coning: slice at x0 = 1 after moving `infinity` to {x0 = 0}."""
    if not arr.central:
        raise ValueError("decone requires a central arrangement")
    if infinity not in arr.hyperplanes:
        raise ValueError("designated infinity hyperplane not in arrangement")
    nu = infinity.normal
    p = next(i for i, x in enumerate(nu) if x != 0)
    keep = [i for i in range(arr.dim) if i != p]
    hyps = []
    for h in arr.hyperplanes:
        if h == infinity:
            continue
        g = h.normal
        coeffs = [frac(g[i]) - frac(g[p]) * frac(nu[i]) / nu[p] for i in keep]
        rhs = -frac(g[p]) / nu[p]
        hyps.append(hyperplane(coeffs, rhs))
    return arrangement(arr.dim - 1, hyps)


# ---------------------------------------------------------------------------
# Restriction, Ziegler restriction, essentialization


def _kernel_basis(normal: Sequence) -> list[Vec]:
    return nullspace([list(normal)], len(normal))


def restriction_with_counts(
    arr: Arrangement, h: Hyperplane
) -> tuple[Arrangement, dict[Hyperplane, int]]:
    """Traces {h cap K} inside h, with how many K collapse onto each trace.

    Coordinates inside h come from the deterministic reduced-echelon kernel
    basis of the normal, with a pivot-coordinate base point.
    """
    if h not in arr.hyperplanes:
        raise ValueError("restriction hyperplane not in arrangement")
    nu = h.normal
    p = next(i for i, x in enumerate(nu) if x != 0)
    base = [Fraction(0)] * arr.dim
    base[p] = h.offset / nu[p]
    basis = _kernel_basis(nu)
    counts: dict[Hyperplane, int] = {}
    for k in arr.hyperplanes:
        if k == h:
            continue
        beta = k.row()
        coeffs = [sum(frac(beta[i]) * bv[i] for i in range(arr.dim)) for bv in basis]
        if all(c == 0 for c in coeffs):
            continue  # parallel to h: empty or coincident trace
        rhs = k.offset - sum(frac(beta[i]) * base[i] for i in range(arr.dim))
        trace = hyperplane(coeffs, rhs)
        counts[trace] = counts.get(trace, 0) + 1
    return arrangement(arr.dim - 1, counts.keys()), counts


def restriction(arr: Arrangement, h: Hyperplane) -> Arrangement:
    return restriction_with_counts(arr, h)[0]


def ziegler_restriction(
    arr: Arrangement, h0: Hyperplane
) -> tuple[Arrangement, dict[Hyperplane, int]]:
    """Restriction onto h0 weighted by collapse counts z(X) = |{K : K cap h0 = X}|."""
    if not arr.central:
        raise ValueError("Ziegler restriction requires a central arrangement")
    if arr.dim < 2:
        raise ValueError("Ziegler restriction requires ambient dimension >= 2")
    return restriction_with_counts(arr, h0)


def essentialize(arr: Arrangement) -> Arrangement:
    """Project out the lineality space onto row-space coordinates."""
    red, pivots = rref([h.normal for h in arr.hyperplanes])
    r = len(red)
    hyps = [hyperplane([frac(h.normal[p]) for p in pivots], h.offset)
            for h in arr.hyperplanes]
    return arrangement(r, hyps)


# ---------------------------------------------------------------------------
# Flats at infinity (the localization lemma for coned deformations)


def direction_hyperplane(h: Hyperplane, cone_dim: int) -> Hyperplane:
    """Central parallel of a coned hyperplane: drop the x0 component."""
    body = h.normal[: cone_dim - 1]
    if all(x == 0 for x in body):
        raise ValueError("hyperplane at infinity has no direction hyperplane")
    return hyperplane(body, 0)


def flat_at_infinity_correspondence(rs, a, b, x_flat: Flat) -> Flat:
    """The unique central flat Y of the Weyl arrangement with X = cY cap H_inf."""
    arr = cone(deform(rs, a, b))
    n = rs.ambient_dim
    if x_flat.ambient_dim != n + 1:
        raise ValueError("flat does not live in the cone space")
    h_inf = infinity_hyperplane(n + 1)
    if not x_flat.contains_hyperplane_locus(h_inf):
        raise ValueError("flat is not contained in the hyperplane at infinity")
    rows = []
    for i in containing_hyperplanes(arr, x_flat):
        h = arr.hyperplanes[i]
        if h == h_inf:
            continue
        central = direction_hyperplane(h, n + 1)
        rows.append(central.row())
    y = flat_from_rows(n, rows)
    # Consistency: embedding Y into the cone and cutting with x0 = 0 gives X back.
    embedded = [tuple(r[:-1]) + (Fraction(0), r[-1]) for r in y.rows]
    embedded.append(h_inf.row())
    assert flat_from_rows(n + 1, embedded) == x_flat
    return y


def localized_deformation(rs, a, b, y_flat: Flat) -> Arrangement:
    """The deformation of the localized Weyl arrangement A_Y, coned."""
    a, b = _validate_mults(rs, a, b)
    hyps = []
    for j, orbit in enumerate(rs.orbits):
        for i in orbit:
            root_h = hyperplane(rs.positive_roots[i], 0)
            if not y_flat.contains_hyperplane_locus(root_h):
                continue
            for k in range(-a[j], b[j] + 1):
                hyps.append(hyperplane(rs.positive_roots[i], k))
    return cone(arrangement(rs.ambient_dim, hyps))
