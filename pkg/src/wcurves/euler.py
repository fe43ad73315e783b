"""Euler characteristics, cusp counts and component data.

All values are exact Fractions.  X denotes the ambient modular surface of
discriminant D, W the union of Weierstrass-tangent boundary curves, P its
companion locus, Q the orbit closure upstairs, S1 and S2 the two extra
fibered curves that appear when D = d^2 is square.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import (
    _factor,
    check_discriminant,
    decompose_discriminant,
    divisors,
    euler_phi,
    is_square,
    kronecker,
    mobius,
    mobius_weighted_sum,
    sigma,
)
from .prototypes import enumerate_prototypes

__all__ = [
    "ConsistencyCheck",
    "EulerReport",
    "chi_P",
    "chi_Q",
    "chi_Q_via_rm_prototypes",
    "chi_S",
    "chi_W",
    "chi_W_components",
    "chi_X",
    "consistency_chain",
    "euler_report",
    "h2",
    "h_table",
    "lyapunov_lambda2",
    "num_components",
    "one_cylinder_cusps",
    "psi",
    "rm_prototypes",
    "zeta_minus_one",
]


@lru_cache(maxsize=None)
def h2(D: int) -> Fraction:
    """Weight 2 class number series coefficient H(2, D).

    Defined for D >= 0 with D = 0 or 1 (mod 4); H(2, 0) = -1/120.
    """
    if D == 0:
        return Fraction(-1, 120)
    check_discriminant(D)
    total = Fraction(0)
    e = D % 2
    while e * e <= D:
        term = sigma(1, (D - e * e) // 4)
        total += term if e == 0 else 2 * term
        e += 2
    out = -total / 5
    if is_square(D):
        out -= Fraction(D, 10)
    return out


def zeta_minus_one(d0: int) -> Fraction:
    """zeta_K(-1) for the real quadratic field of fundamental discriminant d0."""
    check_discriminant(d0, minimum=5)
    if decompose_discriminant(d0) != (d0, 1) or is_square(d0):
        raise ValueError(f"{d0} is not a fundamental discriminant of a real field")
    return -h2(d0) / 12


def chi_X(D: int) -> Fraction:
    """Euler characteristic of the modular surface of discriminant D."""
    check_discriminant(D)
    if D == 1:
        return Fraction(1, 36)
    if D == 4:
        return Fraction(1, 6)
    d0, f = decompose_discriminant(D)
    if d0 == 1:
        return Fraction(f**3, 72) * mobius_weighted_sum(1, f)
    return 2 * f**3 * zeta_minus_one(d0) * mobius_weighted_sum(d0, f)


def chi_W(D: int) -> Fraction:
    """Euler characteristic of the Weierstrass boundary curve family."""
    check_discriminant(D)
    if D < 5:
        return Fraction(0)
    d0, d = decompose_discriminant(D)
    if d0 == 1:
        return -Fraction(d * d * (d - 2), 16) * mobius_weighted_sum(1, d)
    return -Fraction(9, 2) * chi_X(D)


def chi_W_components(D: int) -> tuple[Fraction, Fraction]:
    """(chi of spin 0 part, chi of spin 1 part); needs D = 1 (mod 8), D != 9."""
    check_discriminant(D, minimum=5)
    if D % 8 != 1 or D == 9:
        raise ValueError(f"W is connected for D={D}: no spin components")
    d0, d = decompose_discriminant(D)
    if d0 == 1:
        s = mobius_weighted_sum(1, d)
        return (
            -Fraction(d * d * (d - 1), 32) * s,
            -Fraction(d * d * (d - 3), 32) * s,
        )
    half = chi_W(D) / 2
    return (half, half)


def chi_P(D: int) -> Fraction:
    check_discriminant(D, minimum=4)
    if D == 4:
        return Fraction(-1, 6)
    d0, d = decompose_discriminant(D)
    if d0 == 1:
        return -Fraction(d * d * (5 * d - 6), 144) * mobius_weighted_sum(1, d)
    return -Fraction(5, 2) * chi_X(D)


def chi_Q(D: int) -> Fraction:
    check_discriminant(D, minimum=4)
    d0, d = decompose_discriminant(D)
    if d0 == 1:
        return -Fraction(d * d * (5 * d - 6), 72) * mobius_weighted_sum(1, d)
    return -5 * chi_X(D)


def chi_S(D: int) -> Fraction:
    """Euler characteristic of each of S1, S2; square D = d^2, d >= 2."""
    check_discriminant(D, minimum=4)
    d = math.isqrt(D)
    if d * d != D:
        raise ValueError(f"S1 and S2 exist only for square D, got {D}")
    if d == 2:
        return Fraction(-1, 2)
    return -Fraction(d * d, 12) * mobius_weighted_sum(1, d)


def psi(m: int) -> Fraction:
    """-(m/6) times the product of (1 + 1/p) over primes p | m."""
    if m < 1:
        raise ValueError(f"psi needs m >= 1, got {m}")
    out = Fraction(-m, 6)
    for p, _ in _factor(m):
        out *= Fraction(p + 1, p)
    return out


def rm_prototypes(D: int) -> list[tuple[int, int, int]]:
    """Triples (e, l, m) with D = e^2 + 4 l^2 m, l, m >= 1, gcd(e, l) = 1."""
    check_discriminant(D, minimum=4)
    out = []
    l = 1
    while 4 * l * l <= D:
        for m in range(1, D // (4 * l * l) + 1):
            ee = D - 4 * l * l * m
            r = math.isqrt(ee)
            if r * r != ee:
                continue
            for e in sorted({r, -r}):
                if math.gcd(e, l) == 1:
                    out.append((e, l, m))
        l += 1
    return sorted(out)


def chi_Q_via_rm_prototypes(D: int) -> Fraction:
    """chi(Q) as a sum of psi(m) over the real multiplication prototypes."""
    return sum((psi(m) for _, _, m in rm_prototypes(D)), Fraction(0))


def num_components(D: int) -> int:
    """Number of connected components of the W locus."""
    check_discriminant(D)
    if D < 5:
        return 0
    return 2 if D % 8 == 1 and D != 9 else 1


def one_cylinder_cusps(d: int) -> tuple[int, int | None, int | None]:
    """(total, spin 0, spin 1) one-cylinder cusp counts for square D = d^2.

    Needs d > 3.  Even d has no spin splitting and returns (total, None, None).
    """
    if d <= 3:
        raise ValueError(f"one-cylinder counts need side length d > 3, got {d}")
    s = mobius_weighted_sum(1, d)
    total = Fraction(d * d, 6) * s - Fraction(euler_phi(d), 2)
    assert total.denominator == 1 and total >= 0
    if d % 2 == 0:
        return (int(total), None, None)
    s0 = Fraction(d * d, 24) * s
    s1 = Fraction(d * d, 8) * s - Fraction(euler_phi(d), 2)
    assert s0.denominator == 1 and s1.denominator == 1
    assert 0 <= s0 and 0 <= s1 and s0 + s1 == total
    return (int(total), int(s0), int(s1))


def lyapunov_lambda2(stratum: str) -> Fraction:
    """Second Lyapunov exponent by stratum of the genus two moduli of forms."""
    if stratum == "double_zero":
        return Fraction(1, 3)
    if stratum == "two_simple_zeros":
        return Fraction(1, 2)
    raise ValueError(
        f"unknown stratum {stratum!r}: expected 'double_zero' or 'two_simple_zeros'"
    )


@dataclass(frozen=True)
class ConsistencyCheck:
    name: str
    lhs: Fraction
    rhs: Fraction

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def consistency_chain(D: int) -> list[ConsistencyCheck]:
    """Cross-checks tying the invariants of discriminant D together."""
    check_discriminant(D)
    checks = []
    d0, f = decompose_discriminant(D)
    square = d0 == 1
    if D >= 5 and not square:
        checks.append(ConsistencyCheck("euler_ratio", chi_W(D), -Fraction(9, 2) * chi_X(D)))
        checks.append(
            ConsistencyCheck("chi_additivity", chi_W(D), chi_P(D) - 2 * chi_X(D))
        )
        checks.append(
            ConsistencyCheck(
                "h_sum_chi_x",
                sum((chi_X(r * r * d0) for r in divisors(f)), Fraction(0)),
                -h2(D) / 6,
            )
        )
        checks.append(
            ConsistencyCheck(
                "h_sum_chi_w",
                sum((chi_W(r * r * d0) for r in divisors(f)), Fraction(0)),
                Fraction(3, 4) * h2(D),
            )
        )
        checks.append(
            ConsistencyCheck(
                "h2_sigma3",
                h2(D),
                -12
                * zeta_minus_one(d0)
                * sum(
                    (
                        Fraction(mobius(r) * kronecker(d0, r) * r) * sigma(3, f // r)
                        for r in divisors(f)
                    ),
                    Fraction(0),
                ),
            )
        )
    if square and f > 2:
        checks.append(
            ConsistencyCheck(
                "chi_additivity", chi_W(D), chi_P(D) - chi_S(D) - 2 * chi_X(D)
            )
        )
    if D >= 5 and D % 8 == 1 and D != 9:
        c0, c1 = chi_W_components(D)
        checks.append(ConsistencyCheck("component_sum", c0 + c1, chi_W(D)))
    if D >= 4:
        checks.append(
            ConsistencyCheck("rm_route", chi_Q(D), chi_Q_via_rm_prototypes(D))
        )
    if D >= 5:
        checks.append(ConsistencyCheck("q_doubles_p", chi_Q(D), 2 * chi_P(D)))
    n_w = len(enumerate_prototypes(D, "W"))
    n_p = len(enumerate_prototypes(D, "P"))
    if square:
        n_term = sum(1 for p in enumerate_prototypes(D, "Y") if p.is_terminal)
        checks.append(ConsistencyCheck("cusp_counts", Fraction(n_p), Fraction(n_w + n_term)))
    else:
        checks.append(ConsistencyCheck("cusp_counts", Fraction(n_p), Fraction(n_w)))
    return checks


@dataclass(frozen=True)
class EulerReport:
    """All Euler data of one discriminant, with None for undefined entries."""

    D: int
    d0: int
    f: int
    h: Fraction
    chi_x: Fraction
    chi_w: Fraction
    chi_w_components: tuple[Fraction, Fraction] | None
    chi_p: Fraction | None
    chi_q: Fraction | None
    chi_s: Fraction | None
    components: int
    cusps_two_cylinder: int
    cusps_one_cylinder: int | None
    cusps_one_cylinder_spin: tuple[int, int] | None

    def to_json(self) -> dict:
        def frac(x):
            return None if x is None else str(x)

        w0, w1 = self.chi_w_components or (None, None)
        s0, s1 = self.cusps_one_cylinder_spin or (None, None)
        return {
            "D": self.D,
            "D0": self.d0,
            "f": self.f,
            "h2": frac(self.h),
            "chi_X": frac(self.chi_x),
            "chi_W": frac(self.chi_w),
            "chi_W0": frac(w0),
            "chi_W1": frac(w1),
            "chi_P": frac(self.chi_p),
            "chi_Q": frac(self.chi_q),
            "chi_S1": frac(self.chi_s),
            "chi_S2": frac(self.chi_s),
            "components": self.components,
            "cusps_two_cyl": self.cusps_two_cylinder,
            "cusps_one_cyl": self.cusps_one_cylinder,
            "cusps_one_cyl_spin0": s0,
            "cusps_one_cyl_spin1": s1,
        }


def euler_report(D: int) -> EulerReport:
    check_discriminant(D)
    d0, f = decompose_discriminant(D)
    square = d0 == 1
    d = f if square else 0
    if D >= 5 and D % 8 == 1 and D != 9:
        components = chi_W_components(D)
    else:
        components = None
    if not square or d <= 2:
        one_cyl: int | None = 0
        one_spin = None
    elif d == 3:
        one_cyl, one_spin = None, None
    else:
        total, s0, s1 = one_cylinder_cusps(d)
        one_cyl = total
        one_spin = None if s0 is None else (s0, s1)
    return EulerReport(
        D=D,
        d0=d0,
        f=f,
        h=h2(D),
        chi_x=chi_X(D),
        chi_w=chi_W(D),
        chi_w_components=components,
        chi_p=chi_P(D) if D >= 4 else None,
        chi_q=chi_Q(D) if D >= 4 else None,
        chi_s=chi_S(D) if square and d >= 2 else None,
        components=num_components(D),
        cusps_two_cylinder=len(enumerate_prototypes(D, "W")),
        cusps_one_cylinder=one_cyl,
        cusps_one_cylinder_spin=one_spin,
    )


def h_table(dmin: int, dmax: int) -> list[tuple[int, Fraction]]:
    """Rows (D, H(2, D)) for discriminants in [dmin, dmax], 0 allowed."""
    rows = []
    for D in range(max(dmin, 0), dmax + 1):
        if D % 4 in (0, 1):
            rows.append((D, h2(D)))
    return rows
