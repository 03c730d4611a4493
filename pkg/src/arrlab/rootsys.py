"""Crystallographic root systems with exact integer coordinates.

Supported: A1-A4, B2-B4, C2-C4, D3-D4, G2, in the standard integer
realizations (A_l inside R^{l+1}, G2 in the sum-zero realization inside
R^3).  Orbits come from reflection closure, exponents from the integer
roots of the characteristic polynomial of each orbit sub-arrangement.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from . import arr_core, charpoly

Root = tuple[int, ...]

SUPPORTED_RANKS = {"A": range(1, 5), "B": range(2, 5), "C": range(2, 5),
                   "D": range(3, 5), "G": (2,)}


class UnsupportedTypeError(ValueError):
    pass


class NonIntegralExponentsError(ArithmeticError):
    """Characteristic polynomial of an orbit union failed to split over Z.

    Not expected for Weyl orbit unions; firing means an implementation bug.
    """


@dataclass(frozen=True)
class RootSystem:
    type_label: str
    rank: int
    ambient_dim: int
    positive_roots: tuple[Root, ...]      # lex-sorted, pairwise non-parallel
    simple_roots: tuple[int, ...]         # indices into positive_roots
    orbits: tuple[tuple[int, ...], ...]   # partition of root indices
    orbit_exponents: tuple[tuple[int, ...], ...]
    orbit_h: tuple[int, ...]              # h_j = largest orbit exponent + 1

    def orbit_of(self, root_index: int) -> int:
        for j, orb in enumerate(self.orbits):
            if root_index in orb:
                return j
        raise IndexError(root_index)

    def to_json(self) -> dict:
        return {
            "type": self.type_label,
            "rank": self.rank,
            "roots": [list(r) for r in self.positive_roots],
            "orbits": [list(o) for o in self.orbits],
            "exponents": [list(e) for e in self.orbit_exponents],
            "h": list(self.orbit_h),
        }


def parse_type_label(label: str) -> tuple[str, int]:
    label = label.strip().upper()
    if len(label) < 2 or label[0] not in "ABCDG" or not label[1:].isdigit():
        raise UnsupportedTypeError(f"unsupported Weyl type {label!r}")
    return label[0], int(label[1:])


def _raw_positive_roots(family: str, rank: int) -> list[Root]:
    n = rank
    roots: list[list[int]] = []

    def e(i: int, dim: int) -> list[int]:
        v = [0] * dim
        v[i] = 1
        return v

    if family == "A":
        dim = n + 1
        for i in range(dim):
            for j in range(i + 1, dim):
                roots.append([a - b for a, b in zip(e(i, dim), e(j, dim))])
    elif family in ("B", "C", "D"):
        dim = n
        for i in range(n):
            for j in range(i + 1, n):
                roots.append([a - b for a, b in zip(e(i, dim), e(j, dim))])
                roots.append([a + b for a, b in zip(e(i, dim), e(j, dim))])
        if family == "B":
            for i in range(n):
                roots.append(e(i, dim))
        elif family == "C":
            for i in range(n):
                roots.append([2 * x for x in e(i, dim)])
    elif family == "G":
        roots = [[0, 1, -1], [1, -1, 0], [1, 0, -1],       # short
                 [1, 1, -2], [1, -2, 1], [2, -1, -1]]      # long
    else:
        raise UnsupportedTypeError(family)
    return [tuple(r) for r in roots]


def _positive_rep(v: Sequence[int]) -> Root:
    lead = next(x for x in v if x != 0)
    return tuple(v) if lead > 0 else tuple(-x for x in v)


def reflect(alpha: Root, beta: Root) -> Root:
    """s_alpha(beta) = beta - 2 (alpha.beta)/(alpha.alpha) alpha (exact integers)."""
    num = 2 * sum(a * b for a, b in zip(alpha, beta))
    den = sum(a * a for a in alpha)
    if num % den != 0:
        raise ArithmeticError(f"non-crystallographic pair {alpha}, {beta}")
    c = num // den
    return tuple(b - c * a for a, b in zip(alpha, beta))


def _reflection_orbits(roots: Sequence[Root]) -> tuple[tuple[int, ...], ...]:
    index = {r: i for i, r in enumerate(roots)}
    parent = list(range(len(roots)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for alpha in roots:
        for i, beta in enumerate(roots):
            img = _positive_rep(reflect(alpha, beta))
            j = index[img]
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    groups: dict[int, list[int]] = {}
    for i in range(len(roots)):
        groups.setdefault(find(i), []).append(i)
    return tuple(tuple(sorted(g)) for g in sorted(groups.values(), key=min))


def compute_orbits(rs: RootSystem) -> tuple[tuple[int, ...], ...]:
    """Transitive closure of root indices under all reflections, up to sign."""
    return _reflection_orbits(rs.positive_roots)


def _simple_root_indices(roots: Sequence[Root]) -> tuple[int, ...]:
    rootset = set(roots)
    simple = []
    for i, r in enumerate(roots):
        if not any(
            tuple(x - y for x, y in zip(r, s)) in rootset for s in roots if s != r
        ):
            simple.append(i)
    return tuple(simple)


def _orbit_union_exponents(
    roots: Sequence[Root], rank: int, ambient_dim: int,
    orbits: Sequence[Sequence[int]], subset: Iterable[int],
) -> tuple[int, ...]:
    chosen = sorted(set(subset))
    for j in chosen:
        if not 0 <= j < len(orbits):
            raise IndexError(f"orbit index {j} out of range")
    hyps = [arr_core.hyperplane(roots[i], 0) for j in chosen for i in orbits[j]]
    if not hyps:
        return (0,) * rank
    arr = arr_core.arrangement(ambient_dim, hyps)
    chi = charpoly.char_poly(arr)
    exps = charpoly.integer_roots(chi)
    if exps is None:
        raise NonIntegralExponentsError(
            f"characteristic polynomial {chi.coeffs} does not split over Z"
        )
    return tuple(sorted([0] * (rank - len(exps)) + exps))


def build_root_system(type_label: str, rank: int | None = None) -> RootSystem:
    """Construct the root system for a label like "B3" (or ("B", 3))."""
    if rank is None:
        family, rank = parse_type_label(type_label)
    else:
        family = type_label.strip().upper()
    if family not in SUPPORTED_RANKS or rank not in SUPPORTED_RANKS[family]:
        raise UnsupportedTypeError(f"unsupported Weyl type {family}{rank}")
    roots = tuple(sorted(_raw_positive_roots(family, rank)))
    ambient = len(roots[0])
    orbits = _reflection_orbits(roots)
    exps = tuple(
        _orbit_union_exponents(roots, rank, ambient, orbits, [j])
        for j in range(len(orbits))
    )
    return RootSystem(
        type_label=f"{family}{rank}",
        rank=rank,
        ambient_dim=ambient,
        positive_roots=roots,
        simple_roots=_simple_root_indices(roots),
        orbits=orbits,
        orbit_exponents=exps,
        orbit_h=tuple(max(e) + 1 for e in exps),
    )


def orbit_exponents(rs: RootSystem, orbit_subset: Iterable[int]) -> tuple[int, ...]:
    """Exponents of the union of the selected orbits (rank-many, zero-padded)."""
    return _orbit_union_exponents(
        rs.positive_roots, rs.rank, rs.ambient_dim, rs.orbits, orbit_subset
    )


def h_vector(rs: RootSystem) -> tuple[int, ...]:
    return rs.orbit_h
