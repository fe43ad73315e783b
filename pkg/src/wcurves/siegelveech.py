"""Siegel-Veech cylinder-counting constants and billiard coefficients.

Everything downstream of the prototype data stays exact; the only decimal
output is the final coefficient string, evaluated with mpmath at a caller
chosen number of significant digits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .euler import chi_W, chi_W_components
from .exact import QuadNum, check_discriminant, decompose_discriminant, is_square
from .prototypes import Prototype, enumerate_prototypes, lambda_of, spin

__all__ = [
    "SvReport",
    "billiards_coefficient",
    "billiards_constant",
    "sv_constant",
    "sv_constant_components",
    "sv_report",
    "unfolding_area",
    "unfolding_prototype",
    "v_of_prototype",
]


def _check_sv_discriminant(D: int) -> None:
    check_discriminant(D, minimum=5)
    if is_square(D):
        raise ValueError(
            f"D={D} is a square: cylinder-counting constants are computed "
            "only in the nonsquare regime"
        )


def v_of_prototype(p: Prototype) -> QuadNum:
    """Cusp contribution (-c/gcd(a,c)) (1 - (a/c) lambda^2) (1 + 1/lambda^2)."""
    if p.kind != "W":
        raise ValueError(f"expected a kind W prototype, got kind {p.kind}")
    _check_sv_discriminant(p.D)
    lam = lambda_of(p)
    lam2 = lam * lam
    lead = Fraction(-p.c, math.gcd(p.a, p.c))
    out = lead * (1 - Fraction(p.a, p.c) * lam2) * (1 + lam2.inverse())
    assert out.sign1() > 0
    return out


def sv_constant(D: int) -> QuadNum:
    """Siegel-Veech constant of the full W locus of discriminant D."""
    _check_sv_discriminant(D)
    total = QuadNum(D)
    for p in enumerate_prototypes(D, "W"):
        total = total + v_of_prototype(p)
    return total / (-2 * chi_W(D))


def sv_constant_components(D: int) -> tuple[QuadNum, QuadNum]:
    """(c for spin 0, c for spin 1); needs nonsquare D = 1 (mod 8), D != 9."""
    _check_sv_discriminant(D)
    if D % 8 != 1:
        raise ValueError(f"W is connected for D={D}: no per-component constants")
    chi0, chi1 = chi_W_components(D)
    sums = {0: QuadNum(D), 1: QuadNum(D)}
    for p in enumerate_prototypes(D, "W"):
        sums[spin(p)] = sums[spin(p)] + v_of_prototype(p)
    return (sums[0] / (-2 * chi0), sums[1] / (-2 * chi1))


def billiards_constant(D: int) -> QuadNum:
    """The constant attached to the right triangle unfolding of discriminant D.

    For split D = 1 (mod 8) the component of the unfolded surface selects
    the spin ((1 + f) / 2) mod 2 constant.
    """
    _check_sv_discriminant(D)
    if D % 8 != 1:
        return sv_constant(D)
    _, f = decompose_discriminant(D)
    eps = ((1 + f) // 2) % 2
    return sv_constant_components(D)[eps]


def unfolding_prototype(D: int) -> Prototype:
    """The cusp prototype of the unfolded right triangle billiard."""
    _check_sv_discriminant(D)
    if D % 2:
        return Prototype("W", D, 1, -1, (1 - D) // 4, 0)
    return Prototype("W", D, 1, 0, -D // 4, 0)


def unfolding_area(D: int) -> QuadNum:
    """Area factor 1 - (a/c) lambda^2 of the unfolding prototype."""
    p = unfolding_prototype(D)
    lam = lambda_of(p)
    return 1 - Fraction(p.a, p.c) * lam * lam


def _real1(x: QuadNum) -> mpmath.mpf:
    out = mpmath.mpf(x.rat.numerator) / x.rat.denominator
    if x.rad:
        out += mpmath.mpf(x.rad.numerator) / x.rad.denominator * mpmath.sqrt(x.disc)
    return out


def billiards_coefficient(D: int, digits: int = 50) -> str:
    """Decimal value of billiards_constant(D) * pi / unfolding_area(D)."""
    c = billiards_constant(D)
    area = unfolding_area(D)
    with mpmath.workdps(digits + 15):
        val = _real1(c) * mpmath.pi / _real1(area)
        return mpmath.nstr(val, digits, strip_zeros=False)


@dataclass(frozen=True)
class SvReport:
    """Exact cylinder-counting data of one nonsquare discriminant."""

    D: int
    constant: QuadNum
    components: tuple[QuadNum, QuadNum] | None
    billiards: QuadNum
    area: QuadNum
    coefficient: str

    def to_json(self) -> dict:
        return {
            "D": self.D,
            "c": str(self.constant),
            "c0": str(self.components[0]) if self.components else None,
            "c1": str(self.components[1]) if self.components else None,
            "billiards": str(self.billiards),
            "area": str(self.area),
            "coefficient": self.coefficient,
        }


def sv_report(D: int, digits: int = 50) -> SvReport:
    _check_sv_discriminant(D)
    split = D % 8 == 1
    return SvReport(
        D=D,
        constant=sv_constant(D),
        components=sv_constant_components(D) if split else None,
        billiards=billiards_constant(D),
        area=unfolding_area(D),
        coefficient=billiards_coefficient(D, digits),
    )
