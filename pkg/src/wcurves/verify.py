"""Range verification: every internal invariant on one place.

The CLI verify command and the acceptance suite both run these checks.
Each discriminant yields a DiscriminantReport with a pass count and the
failure descriptions, so a regression names what broke and where.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import boundary, euler, reference, siegelveech
from .exact import is_discriminant, is_square
from .prototypes import (
    canonical,
    enumerate_prototypes,
    from_splitting_prototype,
    lambda_of,
    multiplicity,
    next_prototype,
    orbifold_order,
    orbits,
    prev_prototype,
    spin,
    t_involution,
    to_splitting_prototype,
    y_image,
)

__all__ = ["DiscriminantReport", "verify_discriminant", "verify_range"]


@dataclass(frozen=True)
class DiscriminantReport:
    D: int
    passed: int
    failures: tuple[str, ...]
    tallies: tuple[tuple[str, int], ...]

    @property
    def ok(self) -> bool:
        return not self.failures


class _Rec:
    def __init__(self):
        self.passed = 0
        self.failures = []
        self.tally = {}

    def check(self, name: str, ok: bool, detail: str = "") -> None:
        if ok:
            self.passed += 1
            self.tally[name] = self.tally.get(name, 0) + 1
        else:
            self.failures.append(f"{name}: {detail}" if detail else name)


def _spin_applies(D: int) -> bool:
    return D % 8 == 1 and D != 9 and D >= 5


def _check_enumeration(D: int, rec: _Rec) -> None:
    for kind in ("Y", "W", "P"):
        ours = [(p.a, p.b, p.c, p.q) for p in enumerate_prototypes(D, kind)]
        theirs = reference.reference_tuples(D, kind)
        rec.check(
            f"enumeration_{kind}",
            ours == theirs,
            f"enumerator {ours} vs reference {theirs}",
        )
    for kind in ("Y", "W", "P"):
        protos = enumerate_prototypes(D, kind)
        rec.check(f"canonical_{kind}", all(p == canonical(p) for p in protos))


def _check_dynamics(D: int, rec: _Rec) -> None:
    ys = enumerate_prototypes(D, "Y")
    square = is_square(D)
    for p in ys:
        if not p.is_terminal:
            rec.check("prev_of_next", prev_prototype(next_prototype(p)) == p, str(p))
        if not p.is_degenerate:
            rec.check("next_of_prev", next_prototype(prev_prototype(p)) == p, str(p))
            rec.check("t_involutive", t_involution(t_involution(p)) == p, str(p))
            rec.check("multiplicity_positive", multiplicity(p) >= 1, str(p))
            if not p.is_terminal:
                rec.check(
                    "t_next_is_prev_t",
                    t_involution(next_prototype(p)) == prev_prototype(t_involution(p)),
                    str(p),
                )
        if p.is_terminal or p.is_initial:
            rec.check("boundary_multiplicity", p.is_degenerate or multiplicity(p) == 1, str(p))
        rec.check("orbifold_order_positive", orbifold_order(p) >= 1, str(p))
        if not square:
            lam = lambda_of(p)
            nxt = lambda_of(next_prototype(p))
            want = lam - 1 if (lam - 2).sign1() >= 0 else (lam - 1).inverse()
            rec.check("lambda_next", nxt == want, str(p))
            prv = lambda_of(prev_prototype(p))
            want = lam + 1 if (lam + 1).norm() <= 0 else (lam + 1) / lam
            rec.check("lambda_prev", prv == want, str(p))
            rec.check("lambda_norm", lam.norm() == Fraction(p.c, p.a), str(p))
    if not square:
        rec.check("next_permutes", {next_prototype(p) for p in ys} == set(ys))
    chains = orbits(D)
    rec.check("orbits_cover", sum(len(ch) for ch in chains) == len(ys))


def _check_fibers(D: int, rec: _Rec) -> None:
    ys = enumerate_prototypes(D, "Y")
    ws = enumerate_prototypes(D, "W")
    ps = enumerate_prototypes(D, "P")
    wf = {p: 0 for p in ys}
    for w in ws:
        wf[y_image(w)] += 1
    pf = {p: 0 for p in ys}
    for pp in ps:
        pf[y_image(pp)] += 1
    for p in ys:
        if p.is_degenerate:
            rec.check("degenerate_fiber", wf[p] == 0 and pf[p] == 0, str(p))
        elif p.is_terminal:
            rec.check("terminal_fiber", wf[p] == 0 and pf[p] == 1, str(p))
        else:
            rec.check("w_fiber_size", wf[p] == multiplicity(p), str(p))
            rec.check("p_fiber_size", pf[p] == multiplicity(p), str(p))
    for w in ws:
        back = from_splitting_prototype(*to_splitting_prototype(w))
        rec.check("splitting_round_trip", back == w, str(w))
    if _spin_applies(D):
        for w in ws:
            base = spin(w)
            m = w.modulus
            stable = all(
                ((w.b - euler.decompose_discriminant(w.D)[1]) // 2
                 + (w.a + 1) * (q + w.c + q * w.c)) % 2 == base
                for q in (w.q + m, w.q + 2 * m)
            )
            rec.check("spin_lift_stable", stable, str(w))


def _check_euler(D: int, rec: _Rec) -> None:
    for c in euler.consistency_chain(D):
        rec.check(f"euler_{c.name}", c.ok, f"{c.lhs} != {c.rhs}")
    split = _spin_applies(D)
    rec.check(
        "components_vs_split",
        (euler.num_components(D) == 2) == split,
    )


def _check_sv(D: int, rec: _Rec) -> None:
    if D < 5 or is_square(D):
        return
    ws = enumerate_prototypes(D, "W")
    for w in ws:
        rec.check("v_positive", siegelveech.v_of_prototype(w).sign1() > 0, str(w))
    c = siegelveech.sv_constant(D)
    rec.check("sv_positive", c.sign1() > 0 and c.sign2() > 0)
    if D % 8 == 1:
        c0, c1 = siegelveech.sv_constant_components(D)
        rec.check("sv_conjugacy", c1 == c0.galois_conjugate(), f"{c0} vs {c1}")
        rec.check("sv_mean", (c0 + c1) / 2 == c)
        rec.check("sv_billiards_pick", siegelveech.billiards_constant(D) in (c0, c1))
    else:
        rec.check("sv_rational", c.rad == 0, str(c))


def _check_boundary(D: int, rec: _Rec) -> None:
    if D < 5:
        return
    cx = boundary.build_complex(D)
    ws = enumerate_prototypes(D, "W")
    ps = enumerate_prototypes(D, "P")
    rec.check(
        "complex_w_total",
        sum(len(e.w_fiber) for e in cx.junctions) == len(ws),
    )
    rec.check(
        "complex_p_total",
        sum(len(e.p_fiber) for e in cx.junctions) == len(ps),
    )
    node_ids = {n.id for n in cx.curves}
    rec.check(
        "complex_edges_closed",
        all(e.src in node_ids and e.dst in node_ids for e in cx.junctions),
    )
    for n in cx.curves:
        if n.prototype is not None:
            rec.check("tau_closed", cx.tau(n.id) in node_ids, n.id)
    if _spin_applies(D):
        square = is_square(D)
        for e in cx.junctions:
            p = e.prototype
            if p.is_degenerate:
                continue
            lhs = sum(1 for w in e.w_fiber if spin(w) == 1)
            if square and p.is_terminal:
                lhs += 1
            tp = t_involution(p)
            rhs = sum(1 for w in cx.junction(tp).w_fiber if spin(w) == 0)
            rec.check("spin_balance", lhs == rhs, f"{p}: {lhs} != {rhs}")


def _check_ledger(D: int, rec: _Rec) -> None:
    if D < 5:
        return
    square = is_square(D)
    if square and math.isqrt(D) < 4:
        return
    fc = lambda name: boundary.fundamental_class(D, name)
    pair = boundary.intersect
    split = _spin_applies(D)
    rec.check("ledger_w_squared", pair(fc("W"), fc("W")) == euler.chi_W(D) / 3)
    rec.check("ledger_p_squared", pair(fc("P"), fc("P")) == euler.chi_P(D))
    if not square:
        rec.check("ledger_w_dot_p", pair(fc("W"), fc("P")) == 0)
        if split:
            rec.check("ledger_w0_dot_p", pair(fc("W0"), fc("P")) == 0)
            rec.check("ledger_w1_dot_p", pair(fc("W1"), fc("P")) == 0)
            rec.check(
                "ledger_w0_squared_open",
                pair(fc("W0"), fc("W0")) is boundary.UNDETERMINED,
            )
    else:
        d = math.isqrt(D)
        one = euler.one_cylinder_cusps(d)
        rec.check("ledger_s1_dot_w", pair(fc("S1"), fc("W")) == one[0])
        rec.check("ledger_w_dot_s2", pair(fc("W"), fc("S2")) == 0)
        rec.check("ledger_s_squared", pair(fc("S1"), fc("S1")) == euler.chi_S(D))
        rec.check(
            "ledger_s1_dot_s2",
            pair(fc("S1"), fc("S2")) == Fraction(euler.euler_phi(d), 2),
        )
        if split:
            rec.check("ledger_s1_dot_w0", pair(fc("S1"), fc("W0")) == one[1])
            rec.check("ledger_s1_dot_w1", pair(fc("S1"), fc("W1")) == one[2])
            rec.check("ledger_w0_dot_s2", pair(fc("W0"), fc("S2")) == 0)
            rec.check("ledger_w0_dot_p", pair(fc("W0"), fc("P")) == 0)
            rec.check(
                "ledger_w0_squared_open",
                pair(fc("W0"), fc("W0")) is boundary.UNDETERMINED,
            )


def verify_discriminant(D: int) -> DiscriminantReport:
    rec = _Rec()
    _check_enumeration(D, rec)
    _check_dynamics(D, rec)
    _check_fibers(D, rec)
    _check_euler(D, rec)
    _check_sv(D, rec)
    _check_boundary(D, rec)
    _check_ledger(D, rec)
    return DiscriminantReport(
        D, rec.passed, tuple(rec.failures), tuple(sorted(rec.tally.items()))
    )


def verify_range(dmin: int, dmax: int, shard: tuple[int, int] = (0, 1)) -> list[DiscriminantReport]:
    """Reports for every discriminant in [dmin, dmax], ascending.

    shard = (i, n) keeps only every n-th discriminant starting at offset i.
    """
    index, count = shard
    if count < 1 or not 0 <= index < count:
        raise ValueError(f"bad shard {shard}")
    out = []
    pos = 0
    for D in range(max(dmin, 1), dmax + 1):
        if not is_discriminant(D):
            continue
        if pos % count == index:
            out.append(verify_discriminant(D))
        pos += 1
    return out
