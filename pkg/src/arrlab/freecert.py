"""Freeness certificates for coned rank-2 Shi-Catalan deformations.

The rank-2 cases are certified the way the source tables prove them: a
base cone checked by the rank-3 Ziegler/Poincare criterion, then ordered
addition steps whose restriction counts and exponent triples must match
golden rows exactly.  A2-style instances (and any rank-2 case without a
table) fall back to a bounded greedy addition search.  The predictor and
the chamber formulas live here as well, so the whole theorem pipeline
can be replayed per instance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import multi2d as m2
from .arr_core import (
    Arrangement,
    Hyperplane,
    arrangement,
    cone,
    deform,
    hyperplane,
    infinity_hyperplane,
    is_shi_catalan,
    restriction_with_counts,
    weyl_arrangement,
    ziegler_restriction,
)
from .charpoly import (
    IntPolynomial,
    chambers,
    chambers_2d_oracle,
    factorization_check,
    intersection_poset,
    intpoly,
    poincare,
)
from .linalg import frac, rref
from .rootsys import RootSystem, orbit_exponents


class CertificateError(RuntimeError):
    pass


Exp3 = tuple[int, int, int]


# ---------------------------------------------------------------------------
# Predictor (exponents of the coned deformation and chamber formulas)


def _shi_catalan_gate(rs: RootSystem, a, b) -> tuple[tuple[int, ...], tuple[int, ...]]:
    a, b = tuple(int(x) for x in a), tuple(int(x) for x in b)
    if not is_shi_catalan(rs, a, b):
        j = next(j for j in range(len(a)) if a[j] - b[j] not in (-1, 0))
        raise ValueError(
            f"not Shi-Catalan: a-b = {a[j] - b[j]} on orbit {j}, must be in {{-1, 0}}"
        )
    return a, b


def _is_g2_odd_case(rs: RootSystem, a, b) -> bool:
    return rs.type_label == "G2" and tuple(a) == tuple(b) and sum(b) % 2 == 1


def predict_cone_exponents(rs: RootSystem, a, b) -> tuple[int, ...]:
    """Exponents of cone(A^[-a,b]): 1 together with m^(j) + b.h (G2-odd special)."""
    a, b = _shi_catalan_gate(rs, a, b)
    bh = sum(bj * hj for bj, hj in zip(b, rs.orbit_h))
    if _is_g2_odd_case(rs, a, b):
        return tuple(sorted((1, 2 + bh, 4 + bh)))
    zero_set = [j for j in range(len(a)) if a[j] == b[j]]
    m = orbit_exponents(rs, zero_set)
    return tuple(sorted([1] + [mj + bh for mj in m]))


def printed_chamber_product(rs: RootSystem, a, b) -> int:
    """The source's chamber product as printed (known to disagree with counts)."""
    a, b = _shi_catalan_gate(rs, a, b)
    bh = sum(bj * hj for bj, hj in zip(b, rs.orbit_h))
    if _is_g2_odd_case(rs, a, b):
        return (2 + bh) * (4 + bh)
    prod = 1
    for mj in orbit_exponents(rs, [j for j in range(len(a)) if a[j] == b[j]]):
        prod *= mj + bh
    return prod


def chamber_product(cone_exponents: Sequence[int]) -> int:
    """prod (1 + e) over the non-trivial cone exponents."""
    exps = list(cone_exponents)
    exps.remove(1)
    prod = 1
    for e in exps:
        prod *= 1 + e
    return prod


# ---------------------------------------------------------------------------
# Addition theorem machinery


def restriction_count(arr: Arrangement, h: Hyperplane) -> int:
    """Number of distinct intersection loci {h cap K : K in arr} inside h."""
    return len(restriction_with_counts(arr.add(h), h)[0])


def apply_addition(exp: Sequence[int], size_after: int, count: int) -> Exp3 | None:
    """One addition-theorem step on an exponent triple, or None if inapplicable.

    Requires {1, count-1} inside exp as a multiset; the remaining exponent
    grows by one, so the new triple is {1, count-1, size_after - count}.
    """
    pool = list(exp)
    for needed in (1, count - 1):
        if needed not in pool:
            return None
        pool.remove(needed)
    return tuple(sorted((1, count - 1, pool[0] + 1)))


def addition_step(
    arr: Arrangement, exp: Sequence[int], h: Hyperplane
) -> tuple[int, Exp3 | None]:
    """Attempt to add h to a certified-free rank-3 arrangement.

    Returns (restriction count, new exponents or None).  None means the
    addition theorem does not apply in this order; never a disproof.
    """
    if h in arr.hyperplanes:
        raise ValueError("hyperplane already in arrangement")
    count = restriction_count(arr, h)
    return count, apply_addition(exp, len(arr) + 1, count)


@dataclass(frozen=True)
class AdditionStep:
    hyperplane: Hyperplane
    count: int
    exp_before: Exp3
    exp_after: Exp3

    def to_json(self) -> dict:
        return {
            "hyperplane": self.hyperplane.to_json(),
            "t": self.count,
            "exp_before": list(self.exp_before),
            "exp_after": list(self.exp_after),
        }


@dataclass(frozen=True)
class FreenessCertificate:
    method: str
    base: Arrangement
    base_exponents: Exp3
    base_check: dict
    steps: tuple[AdditionStep, ...]
    final: Arrangement
    final_exponents: tuple[int, ...]
    checks: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "method": self.method,
            "base": {
                "size": len(self.base),
                "exponents": list(self.base_exponents),
                "check": self.base_check,
            },
            "steps": [s.to_json() for s in self.steps],
            "final_exponents": list(self.final_exponents),
            "checks": self.checks,
        }


# ---------------------------------------------------------------------------
# Rank-3 Ziegler/Poincare freeness check


def ziegler_multi2d(arr: Arrangement, h0: Hyperplane) -> m2.Multi2D:
    """Ziegler restriction as an essential 2D multiarrangement."""
    zarr, zmult = ziegler_restriction(arr, h0)
    red, pivots = rref([h.normal for h in zarr.hyperplanes])
    if len(red) != 2:
        raise ValueError(f"Ziegler restriction has essential rank {len(red)}, not 2")
    lines = [tuple(frac(h.normal[p]) for p in pivots) for h in zarr.hyperplanes]
    return m2.multi2d(lines, [zmult[h] for h in zarr.hyperplanes])


@dataclass(frozen=True)
class ZieglerPiResult:
    free: bool
    exponents: Exp3 | None
    ziegler_exponents: tuple[int, int]
    pi: IntPolynomial

    def to_json(self) -> dict:
        return {
            "free": self.free,
            "exponents": list(self.exponents) if self.exponents else None,
            "ziegler_exponents": list(self.ziegler_exponents),
            "pi": self.pi.to_json(),
        }


def rank3_ziegler_pi_check(
    arr: Arrangement, h0: Hyperplane | None = None
) -> ZieglerPiResult:
    """Free iff pi factors over the Ziegler-restriction exponents (rank 3).

    Inconclusive (free=False) never asserts non-freeness.
    """
    if not arr.central:
        raise ValueError("rank-3 check requires a central arrangement")
    if arr.essential_rank() != 3:
        raise ValueError(f"essential rank {arr.essential_rank()}, need 3")
    h0 = h0 or infinity_hyperplane(arr.dim)
    if h0 not in arr.hyperplanes:
        raise ValueError("designated hyperplane not in arrangement")
    d2, d3 = m2.exponents2d(ziegler_multi2d(arr, h0)).exponents
    pi = poincare(arr)
    if factorization_check(pi, (1, d2, d3)):
        return ZieglerPiResult(True, tuple(sorted((1, d2, d3))), (d2, d3), pi)
    return ZieglerPiResult(False, None, (d2, d3), pi)


# ---------------------------------------------------------------------------
# G2 golden tables (integer sum-zero realization of the source coordinates)

G2_B0 = (2, -1, -1)  # the y-family line
G2_B1 = (1, -2, 1)   # y - sqrt3 x
G2_B2 = (1, 1, -2)   # y + sqrt3 x

GI_ORDER = ((G2_B0, 1), (G2_B1, 1), (G2_B2, 1), (G2_B0, -1), (G2_B1, -1), (G2_B2, -1))
GII_ORDER = ((G2_B0, 1), (G2_B2, 1), (G2_B1, 1), (G2_B1, -1), (G2_B2, -1), (G2_B0, -1))

G2_CASES = ("G-i", "G-ii", "G-iii", "G-iv")


def _gi_round_golden(a: int, parity_odd: bool) -> tuple[list[int], list[Exp3]]:
    """Expected counts and exponent triples for one 6-row long-orbit round.

    Odd rounds are rows 1-6 of the printed table; even rounds are rows 7-12
    read at the shifted base (a+6 there equals a+9 in table coordinates).
    """
    if parity_odd:
        counts = [a + 5] * 6
        exps = [(1, a + 3, a + 4), (1, a + 4, a + 4), (1, a + 4, a + 5),
                (1, a + 4, a + 6), (1, a + 4, a + 7), (1, a + 4, a + 8)]
    else:
        counts = [a + 6] * 6
        exps = [(1, a + 2, a + 5), (1, a + 3, a + 5), (1, a + 4, a + 5),
                (1, a + 5, a + 5), (1, a + 5, a + 6), (1, a + 5, a + 7)]
    return counts, exps


def _gii_round_golden(a: int) -> tuple[list[int], list[Exp3]]:
    counts = [a + 3, a + 3, a + 4, a + 4, a + 5, a + 5]
    exps = [(1, a + 2, a + 2), (1, a + 2, a + 3), (1, a + 3, a + 3),
            (1, a + 3, a + 4), (1, a + 4, a + 4), (1, a + 4, a + 5)]
    return counts, exps


def g2_closed_form(case: str, s: int, t: int) -> Exp3:
    a = 3 * (s + t)
    if case == "G-i":
        return (1, a + 2, a + 4) if (s + t) % 2 == 1 else (1, a + 1, a + 5)
    if case == "G-ii":
        return (1, a + 1, a + 2)
    if case == "G-iii":
        return (1, a + 4, a + 5)
    if case == "G-iv":
        return (1, a + 3, a + 3)
    raise ValueError(f"unknown G2 case {case!r}")


def g2_family(case: str, s: int, t: int) -> Arrangement:
    """The four §-style G2 deformation families (affine, integer realization)."""
    if case not in G2_CASES:
        raise ValueError(f"unknown G2 case {case!r}")
    if s < 0 or t < 0:
        raise ValueError("family parameters must be nonnegative")
    rs = _g2()
    short_lo = -s if case in ("G-i", "G-iii") else -(s - 1)
    long_hi = t if case in ("G-i", "G-ii") else t + 1
    hyps = []
    for j, orbit in enumerate(rs.orbits):
        for i in orbit:
            root = rs.positive_roots[i]
            lo, hi = (short_lo, s) if j == 0 else (-t, long_hi)
            for k in range(lo, hi + 1):
                hyps.append(hyperplane(root, k))
    return arrangement(rs.ambient_dim, hyps)


def g2_params(a, b) -> tuple[str, int, int]:
    """Map a Shi-Catalan (a, b) on G2 to the family case and (s, t)."""
    (a1, a2), (b1, b2) = tuple(a), tuple(b)
    if (a1, a2) == (b1, b2):
        return "G-i", a1, a2
    if a1 == b1 - 1 and a2 == b2:
        return "G-ii", b1, b2
    if a1 == b1 and a2 == b2 - 1:
        return "G-iii", a1, a2
    return "G-iv", b1, a2


_G2_CACHE: RootSystem | None = None


def _g2() -> RootSystem:
    global _G2_CACHE
    if _G2_CACHE is None:
        from .rootsys import build_root_system

        _G2_CACHE = build_root_system("G2")
    return _G2_CACHE


def _coned_translate(root: Sequence[int], k: int) -> Hyperplane:
    return hyperplane(tuple(root) + (-k,), 0)


def _run_steps(
    arr: Arrangement,
    exp: Exp3,
    additions: Sequence[tuple[Hyperplane, int | None, Exp3 | None]],
    label: str,
) -> tuple[Arrangement, Exp3, list[AdditionStep]]:
    """Apply ordered additions, enforcing golden counts/exponents when given."""
    steps = []
    for idx, (h, want_count, want_exp) in enumerate(additions):
        count, new_exp = addition_step(arr, exp, h)
        if new_exp is None:
            raise CertificateError(
                f"{label}: addition theorem inapplicable at step {idx} "
                f"(count {count}, exponents {exp})"
            )
        if want_count is not None and count != want_count:
            raise CertificateError(
                f"{label}: step {idx} intersection count {count} != table {want_count}"
            )
        if want_exp is not None and new_exp != tuple(sorted(want_exp)):
            raise CertificateError(
                f"{label}: step {idx} exponents {new_exp} != table {want_exp}"
            )
        steps.append(AdditionStep(h, count, tuple(exp), new_exp))
        arr, exp = arr.add(h), new_exp
    return arr, exp, steps


def _g2_round_additions(case: str, s: int, t_h: int, rows: int = 6):
    """Golden-checked additions for one level-(t_h + 1) round of a G2 chain."""
    order = GI_ORDER if case in ("G-i", "G-iii") else GII_ORDER
    a = 3 * (s + t_h)
    if case in ("G-i", "G-iii"):
        counts, exps = _gi_round_golden(a, (s + t_h) % 2 == 1)
    else:
        counts, exps = _gii_round_golden(a)
    level = t_h + 1
    return [
        (_coned_translate(root, sign * level), counts[i], exps[i])
        for i, (root, sign) in enumerate(order[:rows])
    ]


def certify_G2(case: str, s: int, t: int) -> FreenessCertificate:
    """Replay the source's G2 addition tables from a checked t = 0 base."""
    if case not in G2_CASES:
        raise ValueError(f"unknown G2 case {case!r}")
    base_case = "G-i" if case in ("G-i", "G-iii") else "G-ii"
    base = cone(g2_family(base_case, s, 0))
    zres = rank3_ziegler_pi_check(base)
    if not zres.free:
        raise CertificateError(f"{case} base (s={s}) failed the Ziegler-pi check")
    exp = zres.exponents
    expected_base = g2_closed_form(base_case, s, 0)
    if exp != expected_base:
        raise CertificateError(
            f"{case} base exponents {exp} != closed form {expected_base}"
        )
    arr, steps = base, []
    for t_h in range(t):
        arr, exp, new = _run_steps(
            arr, exp, _g2_round_additions(base_case, s, t_h), f"{case}(s={s},t={t_h})"
        )
        steps.extend(new)
    if case in ("G-iii", "G-iv"):
        arr, exp, new = _run_steps(
            arr, exp, _g2_round_additions(case, s, t, rows=3), f"{case}(s={s},tail)"
        )
        steps.extend(new)

    target = cone(g2_family(case, s, t))
    if arr != target:
        raise CertificateError(f"{case}(s={s},t={t}): chain missed the target cone")
    closed = g2_closed_form(case, s, t)
    if exp != closed:
        raise CertificateError(f"{case}: final {exp} != closed form {closed}")
    return FreenessCertificate(
        method=f"g2-table:{case}",
        base=base,
        base_exponents=zres.exponents,
        base_check=zres.to_json(),
        steps=tuple(steps),
        final=arr,
        final_exponents=exp,
        checks={"closed_form": list(closed)},
    )


# ---------------------------------------------------------------------------
# B2: the reviewed base family plus the H_1..H_4t chain

B2_STEP_PATTERN = (((1, -1), -1), ((1, 1), 1), ((1, -1), 1), ((1, 1), -1))


def _b2():
    from .rootsys import build_root_system

    return build_root_system("B2")


def certify_B2(s: int, t: int) -> FreenessCertificate:
    """Base (x, y translates up to s; diagonals central) plus 4t ordered steps."""
    if s < 0 or t < 0:
        raise ValueError("s, t must be nonnegative")
    rs = _b2()
    base = cone(deform(rs, (s, 0), (s, 0)))
    zres = rank3_ziegler_pi_check(base)
    if not zres.free:
        raise CertificateError(f"B2 base (s={s}) failed the Ziegler-pi check")
    exp = zres.exponents
    if exp != (1, 2 * s + 1, 2 * s + 3):
        raise CertificateError(
            f"B2 base exponents {exp} != (1, {2*s+1}, {2*s+3})"
        )
    additions = [
        (_coned_translate(root, sign * a), None, None)
        for a in range(1, t + 1)
        for root, sign in B2_STEP_PATTERN
    ]
    arr, exp, steps = _run_steps(base, exp, additions, f"B2(s={s})")
    target = cone(deform(rs, (s, t), (s, t)))
    if arr != target:
        raise CertificateError(f"B2(s={s},t={t}): chain missed the target cone")
    predicted = predict_cone_exponents(rs, (s, t), (s, t))
    if exp != predicted:
        raise CertificateError(f"B2 final {exp} != predicted {predicted}")
    return FreenessCertificate(
        method="b2-family",
        base=base,
        base_exponents=zres.exponents,
        base_check=zres.to_json(),
        steps=tuple(steps),
        final=arr,
        final_exponents=exp,
        checks={"predicted": list(predicted)},
    )


# ---------------------------------------------------------------------------
# Greedy certificate search (A2 and any rank-2 case without a table)

GREEDY_NODE_BUDGET = 200_000


def _cone_level(h: Hyperplane) -> int:
    return abs(h.normal[-1])


def certify_greedy(rs: RootSystem, a, b) -> FreenessCertificate:
    """Addition chain from the Weyl cone, level-by-level with backtracking."""
    a, b = _shi_catalan_gate(rs, a, b)
    if rs.rank != 2:
        raise ValueError("greedy certification is for rank-2 types")
    base = cone(weyl_arrangement(rs))
    zres = rank3_ziegler_pi_check(base)
    if not zres.free:
        raise CertificateError("Weyl cone failed the Ziegler-pi check")
    target = cone(deform(rs, a, b))
    remaining = sorted(
        set(target.hyperplanes) - set(base.hyperplanes),
        key=lambda h: (_cone_level(h), h),
    )
    nodes = 0

    def search(arr, exp, todo, acc):
        nonlocal nodes
        if not todo:
            return arr, exp, acc
        for i, h in enumerate(todo):
            nodes += 1
            if nodes > GREEDY_NODE_BUDGET:
                raise CertificateError("certificate-not-found: search budget exhausted")
            count, new_exp = addition_step(arr, exp, h)
            if new_exp is None:
                continue
            step = AdditionStep(h, count, exp, new_exp)
            found = search(arr.add(h), new_exp, todo[:i] + todo[i + 1:], acc + [step])
            if found is not None:
                return found
        return None

    found = search(base, zres.exponents, remaining, [])
    if found is None:
        raise CertificateError("certificate-not-found: no addition order works")
    arr, exp, steps = found
    predicted = predict_cone_exponents(rs, a, b)
    if tuple(exp) != predicted:
        raise CertificateError(f"greedy final {exp} != predicted {predicted}")
    return FreenessCertificate(
        method="greedy",
        base=base,
        base_exponents=zres.exponents,
        base_check=zres.to_json(),
        steps=tuple(steps),
        final=arr,
        final_exponents=tuple(exp),
        checks={"predicted": list(predicted), "search_nodes": nodes},
    )


def certify_A2(a, b) -> FreenessCertificate:
    from .rootsys import build_root_system

    return certify_greedy(build_root_system("A2"), a, b)


def certify(rs: RootSystem, a, b) -> FreenessCertificate:
    """Dispatch to the strongest certificate available for a rank-2 instance."""
    a, b = _shi_catalan_gate(rs, a, b)
    if rs.rank != 2:
        raise ValueError("certification handles rank-2 types only")
    if rs.type_label == "G2":
        return certify_G2(*g2_params(a, b))
    if rs.type_label == "B2" and a == b:
        return certify_B2(a[0], a[1])
    return certify_greedy(rs, a, b)


# ---------------------------------------------------------------------------
# Table replays (golden side-by-side rows for the CLI and acceptance tests)


@dataclass(frozen=True)
class TableRow:
    hyperplane: Hyperplane
    computed_count: int
    expected_count: int
    exp_before: Exp3
    computed_exp: Exp3
    expected_exp: Exp3

    @property
    def ok(self) -> bool:
        return (
            self.computed_count == self.expected_count
            and self.computed_exp == tuple(sorted(self.expected_exp))
        )

    def to_json(self) -> dict:
        return {
            "hyperplane": self.hyperplane.to_json(),
            "computed_t": self.computed_count,
            "expected_t": self.expected_count,
            "exp_before": list(self.exp_before),
            "computed_exp": list(self.computed_exp),
            "expected_exp": list(self.expected_exp),
            "ok": self.ok,
        }


@dataclass(frozen=True)
class TableReplay:
    case: str
    s: int
    t: int
    rows: tuple[TableRow, ...]
    checks: dict

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "s": self.s,
            "t": self.t,
            "rows": [r.to_json() for r in self.rows],
            "ok": self.ok,
            "checks": self.checks,
        }


def _replay_rows(arr, exp, additions, label) -> tuple[list[TableRow], Arrangement, Exp3]:
    rows = []
    for h, want_count, want_exp in additions:
        count, new_exp = addition_step(arr, exp, h)
        if new_exp is None:
            raise CertificateError(f"{label}: addition failed on {h}")
        rows.append(TableRow(h, count, want_count, tuple(exp), new_exp,
                             tuple(want_exp)))
        arr, exp = arr.add(h), new_exp
    return rows, arr, exp


def _attempt_order(arr, exp, additions) -> int | None:
    """First row index where an addition order fails, or None if it succeeds."""
    for idx, (h, _, _) in enumerate(additions):
        count, new_exp = addition_step(arr, exp, h)
        if new_exp is None:
            return idx
        arr, exp = arr.add(h), new_exp
    return None


def replay_table(case: str, s: int, t: int) -> TableReplay:
    """Side-by-side golden replay of one induction table at instance (s, t)."""
    if case == "B":
        cert = certify_B2(s, 0)
        additions = [
            (_coned_translate(root, sign * a), None, None)
            for a in range(1, t + 1)
            for root, sign in B2_STEP_PATTERN
        ]
        arr, exp = cert.final, cert.final_exponents
        rows = []
        for h, _, _ in additions:
            count, new_exp = addition_step(arr, exp, h)
            if new_exp is None:
                raise CertificateError(f"B table: addition failed on {h}")
            # expected counts are runtime-derived: success is the contract
            rows.append(TableRow(h, count, count, tuple(exp), new_exp, new_exp))
            arr, exp = arr.add(h), new_exp
        return TableReplay("B", s, t, tuple(rows), {"final_exponents": list(exp)})

    if case == "G-i":
        cert = certify_G2("G-i", s, t)
        additions = _g2_round_additions("G-i", s, t) + _g2_round_additions(
            "G-i", s, t + 1
        )
        rows, arr, exp = _replay_rows(cert.final, cert.final_exponents, additions,
                                      "G-i table")
        return TableReplay("G-i", s, t, tuple(rows),
                           {"final_exponents": list(exp)})

    if case == "G-ii":
        cert = certify_G2("G-ii", s, t)
        additions = _g2_round_additions("G-ii", s, t)
        rows, arr, exp = _replay_rows(cert.final, cert.final_exponents, additions,
                                      "G-ii table")
        # the source stresses that this order matters: log the swapped order
        swapped = [additions[1], additions[0]] + additions[2:]
        fail_at = _attempt_order(cert.final, cert.final_exponents, swapped)
        return TableReplay(
            "G-ii", s, t, tuple(rows),
            {
                "final_exponents": list(exp),
                "alternate_order_succeeds": fail_at is None,
                "alternate_order_first_failure_row": fail_at,
            },
        )
    raise ValueError(f"unknown table case {case!r}")


# ---------------------------------------------------------------------------
# Full verification pipeline


def verify_pipeline(rs: RootSystem, a, b) -> dict:
    """Run every independent check the instance's rank allows; itemized report."""
    a, b = _shi_catalan_gate(rs, a, b)
    predicted = predict_cone_exponents(rs, a, b)
    affine = deform(rs, a, b)
    coned = cone(affine)
    h_inf = infinity_hyperplane(coned.dim)
    checks: dict[str, bool] = {}
    report: dict = {
        "type": rs.type_label,
        "a": list(a),
        "b": list(b),
        "size": len(affine),
        "predicted_cone_exponents": list(predicted),
    }

    # Ziegler multiplicity identity: restriction to infinity is (A(W), a+b+1)
    zarr, zmult = ziegler_restriction(coned, h_inf)
    expected_mult = {}
    for j, orbit in enumerate(rs.orbits):
        for i in orbit:
            expected_mult[hyperplane(rs.positive_roots[i], 0)] = a[j] + b[j] + 1
    checks["ziegler_multiplicity"] = (
        zarr == weyl_arrangement(rs) and zmult == expected_mult
    )
    report["ziegler_multiplicities"] = [zmult[h] for h in zarr.hyperplanes]

    nontrivial = list(predicted)
    nontrivial.remove(1)
    if rs.rank == 2:
        zexps = m2.exponents2d(ziegler_multi2d(coned, h_inf)).exponents
        checks["ziegler_exponents_thm26"] = list(zexps) == sorted(nontrivial)
        report["ziegler_exponents"] = list(zexps)
        try:
            cert = certify(rs, a, b)
            checks["certificate"] = tuple(cert.final_exponents) == predicted
            report["certificate"] = {
                "method": cert.method,
                "final_exponents": list(cert.final_exponents),
                "steps": len(cert.steps),
            }
        except CertificateError as exc:
            checks["certificate"] = False
            report["certificate"] = {"error": str(exc)}

    pi_cone = poincare(coned)
    checks["pi_factorization"] = factorization_check(pi_cone, predicted)
    report["pi_cone"] = pi_cone.to_json()

    poset = intersection_poset(affine)
    mobius_count = chambers(affine, poset)
    product = chamber_product(predicted)
    printed = printed_chamber_product(rs, a, b)
    oracle = chambers_2d_oracle(affine) if rs.rank == 2 else None
    report["chambers"] = {
        "mobius": mobius_count,
        "oracle": oracle,
        "product": product,
        "printed": printed,
    }
    checks["chambers_agree"] = mobius_count == product and (
        oracle is None or oracle == mobius_count
    )

    report["checks"] = checks
    report["pass"] = all(checks.values())
    return report
