"""Slow reference enumeration of prototypes, kept independent on purpose.

The main enumerator scans b and factors (D - b^2)/4; this one scans the
(a, c) grid and tests b^2 = D + 4ac for squareness, then applies the
definitions directly.  The verify command and the test suite compare the
two on exact output.
"""

from __future__ import annotations

import math
from math import gcd, isqrt

__all__ = ["reference_tuples"]


def _valid(kind: str, a: int, b: int, c: int) -> bool:
    if a <= 0:
        return False
    s = a + b + c
    if kind == "Y":
        return c <= 0 and s <= 0 and not (s == 0 and c == 0)
    if kind == "P":
        return c < 0 and s <= 0
    if kind == "W":
        return c < 0 and s < 0
    raise ValueError(f"unknown kind {kind!r}")


def _partner(kind: str, t: tuple[int, int, int]) -> tuple[int, int, int]:
    a, b, c = t
    if a + b + c == 0:
        return (-c, -b, -a)
    if kind == "Y" and c == 0:
        return (-b - a, b, 0)
    return t


def reference_tuples(D: int, kind: str) -> list[tuple[int, int, int, int]]:
    """Sorted canonical (a, b, c, q) tuples of the given kind."""
    if D < 1 or D % 4 not in (0, 1):
        raise ValueError(f"bad discriminant {D}")
    kind = kind.upper()
    raw = set()
    amax = max(D // 4, isqrt(D)) + 1
    for a in range(1, amax + 1):
        for negc in range(0, D // (4 * a) + 1):
            c = -negc
            bb = D + 4 * a * c
            if bb < 0:
                continue
            r = isqrt(bb)
            if r * r != bb:
                continue
            for b in sorted({r, -r}):
                if not _valid(kind, a, b, c):
                    continue
                modulus = gcd(a, gcd(b, c)) if kind == "Y" else gcd(a, c)
                for q in range(modulus):
                    if gcd(gcd(a, gcd(b, c)), q) == 1:
                        raw.add((a, b, c, q))
    out = set()
    for a, b, c, q in raw:
        best = min((a, b, c), _partner(kind, (a, b, c)))
        out.add(best + (q,))
    return sorted(out)
