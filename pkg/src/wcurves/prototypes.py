"""Cusp prototypes of discriminant D and their dynamics.

A prototype is a quadruple (a, b, c, q) of integers with b^2 - 4ac = D,
a > 0, c <= 0 and gcd(a, b, c, q) = 1.  The residue q lives in Z/modulus
where the modulus depends on the kind:

  kind Y: c <= 0, a + b + c <= 0, not both a + b + c = 0 and c = 0,
          modulus gcd(a, b, c).  Indexes boundary curves and junctions.
  kind P: c < 0,  a + b + c <= 0, modulus gcd(a, c).
  kind W: c < 0,  a + b + c < 0,  modulus gcd(a, c).

A prototype with a + b + c = 0 is terminal, one with a - b + c = 0 is
initial, one with c = 0 is degenerate; the last two kinds occur only for
square D.  Terminal prototypes of kind Y and P are identified in pairs
(a, b, c, q) ~ (-c, -b, -a, q), degenerate ones of kind Y in pairs
(a, b, 0, q) ~ (-b - a, b, 0, q); the canonical representative is the
lexicographically smaller triple, and enumeration emits canonicals only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import QuadNum, check_discriminant, decompose_discriminant, is_square

__all__ = [
    "Prototype",
    "canonical",
    "enumerate_prototypes",
    "from_splitting_prototype",
    "lambda_of",
    "multiplicity",
    "next_prototype",
    "orbifold_order",
    "orbits",
    "prev_prototype",
    "prototype_from_json",
    "prototype_to_json",
    "spin",
    "t_involution",
    "to_splitting_prototype",
    "y_image",
]

KINDS = ("Y", "W", "P")


def _gcd3(a: int, b: int, c: int) -> int:
    return math.gcd(a, math.gcd(b, c))


def _kind_modulus(kind: str, a: int, b: int, c: int) -> int:
    return _gcd3(a, b, c) if kind == "Y" else math.gcd(a, c)


@dataclass(frozen=True)
class Prototype:
    """One cusp prototype (a, b, c, q) of kind Y, W or P."""

    kind: str
    D: int
    a: int
    b: int
    c: int
    q: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown prototype kind {self.kind!r}")
        check_discriminant(self.D)
        a, b, c, q = self.a, self.b, self.c, self.q
        if b * b - 4 * a * c != self.D:
            raise ValueError(
                f"({a},{b},{c}) has discriminant {b * b - 4 * a * c}, not {self.D}"
            )
        if a <= 0:
            raise ValueError(f"prototype needs a > 0, got a={a}")
        s = a + b + c
        if self.kind == "Y":
            if c > 0:
                raise ValueError(f"kind Y needs c <= 0, got c={c}")
            if s > 0:
                raise ValueError(f"kind Y needs a+b+c <= 0, got {s}")
            if s == 0 and c == 0:
                raise ValueError("kind Y excludes simultaneously terminal and degenerate")
        elif self.kind == "P":
            if c >= 0:
                raise ValueError(f"kind P needs c < 0, got c={c}")
            if s > 0:
                raise ValueError(f"kind P needs a+b+c <= 0, got {s}")
        else:
            if c >= 0:
                raise ValueError(f"kind W needs c < 0, got c={c}")
            if s >= 0:
                raise ValueError(f"kind W needs a+b+c < 0, got {s}")
        m = self.modulus
        if not 0 <= q < m:
            raise ValueError(f"residue q={q} outside Z/{m}")
        if math.gcd(_gcd3(a, b, c), q) != 1:
            raise ValueError(f"({a},{b},{c},{q}) violates gcd(a,b,c,q) = 1")

    @property
    def modulus(self) -> int:
        return _kind_modulus(self.kind, self.a, self.b, self.c)

    @property
    def is_terminal(self) -> bool:
        return self.a + self.b + self.c == 0

    @property
    def is_initial(self) -> bool:
        return self.a - self.b + self.c == 0

    @property
    def is_degenerate(self) -> bool:
        return self.c == 0

    @property
    def abcq(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.q)

    def __str__(self) -> str:
        return f"{self.kind}({self.a},{self.b},{self.c},{self.q})"


def _identified_partner(kind: str, a: int, b: int, c: int) -> tuple[int, int, int] | None:
    if a + b + c == 0:
        return (-c, -b, -a)
    if kind == "Y" and c == 0:
        return (-b - a, b, 0)
    return None


def _canonical_triple(kind: str, a: int, b: int, c: int) -> tuple[int, int, int]:
    other = _identified_partner(kind, a, b, c)
    if other is not None and other < (a, b, c):
        return other
    return (a, b, c)


def canonical(p: Prototype) -> Prototype:
    """Canonical representative of p under the identification pairing."""
    a, b, c = _canonical_triple(p.kind, p.a, p.b, p.c)
    return Prototype(p.kind, p.D, a, b, c, p.q)


@lru_cache(maxsize=None)
def _enumerate(D: int, kind: str) -> tuple[Prototype, ...]:
    d = math.isqrt(D)
    seen = set()
    for b in range(-d, d + 1):
        if (D - b * b) % 4:
            continue
        t = (D - b * b) // 4  # t = -a*c >= 0
        if t == 0:
            # degenerate: c = 0, b = -d, kind Y only
            if kind != "Y" or b >= 0 or d == 0:
                continue
            for a in range(1, d):
                triple = _canonical_triple(kind, a, b, 0)
                m = _kind_modulus(kind, *triple)
                for q in range(m):
                    if math.gcd(_gcd3(*triple), q) == 1:
                        seen.add(triple + (q,))
            continue
        a = 1
        while a * a <= t:
            if t % a == 0:
                for aa in {a, t // a}:
                    c = -(t // aa)
                    s = aa + b + c
                    if s > 0 or (s == 0 and kind == "W"):
                        continue
                    triple = _canonical_triple(kind, aa, b, c)
                    m = _kind_modulus(kind, *triple)
                    for q in range(m):
                        if math.gcd(_gcd3(*triple), q) == 1:
                            seen.add(triple + (q,))
            a += 1
    return tuple(
        Prototype(kind, D, *entry) for entry in sorted(seen)
    )


def enumerate_prototypes(D: int, kind: str = "W") -> list[Prototype]:
    """All canonical prototypes of the given kind, sorted by (a, b, c, q)."""
    check_discriminant(D)
    kind = kind.upper()
    if kind not in KINDS:
        raise ValueError(f"unknown prototype kind {kind!r}")
    return list(_enumerate(D, kind))


def lambda_of(p: Prototype) -> QuadNum:
    """The module generator lambda = (-b + sqrt(D)) / (2a)."""
    return QuadNum(p.D, Fraction(-p.b, 2 * p.a), Fraction(1, 2 * p.a))


def _require_kind_y(p: Prototype, op: str) -> None:
    if p.kind != "Y":
        raise ValueError(f"{op} is defined for kind Y prototypes, got kind {p.kind}")


def next_prototype(p: Prototype) -> Prototype:
    """Successor junction prototype.  Undefined on terminal prototypes."""
    _require_kind_y(p, "next_prototype")
    if p.is_terminal:
        raise ValueError(f"{p} is terminal and has no successor")
    a, b, c, q = p.abcq
    if 4 * a + 2 * b + c <= 0:
        triple = (a, 2 * a + b, a + b + c)
    else:
        triple = (-a - b - c, -2 * a - b, -a)
    return Prototype("Y", p.D, *_canonical_triple("Y", *triple), q)


def prev_prototype(p: Prototype) -> Prototype:
    """Predecessor junction prototype.  Undefined on degenerate prototypes."""
    _require_kind_y(p, "prev_prototype")
    if p.is_degenerate:
        raise ValueError(f"{p} is degenerate and has no predecessor")
    a, b, c, q = p.abcq
    if a - b + c <= 0:
        triple = (a, -2 * a + b, a - b + c)
    else:
        triple = (-c, -b + 2 * c, -a + b - c)
    return Prototype("Y", p.D, *_canonical_triple("Y", *triple), q)


def t_involution(p: Prototype) -> Prototype:
    """Orientation-reversing involution.  Undefined on degenerate prototypes."""
    _require_kind_y(p, "t_involution")
    if p.is_degenerate:
        raise ValueError(f"t_involution is undefined on the degenerate {p}")
    a, b, c, q = p.abcq
    if a - b + c <= 0:
        triple = (a, -b, c)
    else:
        triple = (-c, b, -a)
    return Prototype("Y", p.D, *_canonical_triple("Y", *triple), q)


def multiplicity(p: Prototype) -> int:
    """Fiber size gcd(a, c) / gcd(a, b, c) over a nondegenerate junction."""
    _require_kind_y(p, "multiplicity")
    if p.is_degenerate:
        raise ValueError(f"multiplicity is undefined on the degenerate {p}")
    return math.gcd(p.a, p.c) // _gcd3(p.a, p.b, p.c)


def orbifold_order(p: Prototype) -> int:
    """Orbifold order of the junction point indexed by p."""
    _require_kind_y(p, "orbifold_order")
    g = _gcd3(p.a, p.b, p.c)
    a, b, c = p.a // g, p.b // g, p.c // g
    u = math.gcd(a, c) * math.gcd(a, b + c)
    assert a % u == 0
    return a // u


def spin(p: Prototype) -> int:
    """Spin invariant of a kind W prototype, for D = 1 (mod 8), D != 9."""
    if p.kind != "W":
        raise ValueError(f"spin is defined for kind W prototypes, got kind {p.kind}")
    if p.D % 8 != 1 or p.D == 9:
        raise ValueError(
            f"spin needs D = 1 (mod 8) and D != 9, got D={p.D}"
        )
    _, f = decompose_discriminant(p.D)
    a, b, c, q = p.abcq
    return ((b - f) // 2 + (a + 1) * (q + c + q * c)) % 2


def y_image(p: Prototype) -> Prototype:
    """Junction below a kind W or P prototype: same triple, q mod gcd(a,b,c)."""
    if p.kind == "Y":
        return p
    g = _gcd3(p.a, p.b, p.c)
    triple = _canonical_triple("Y", p.a, p.b, p.c)
    return Prototype("Y", p.D, *triple, p.q % g)


def from_splitting_prototype(a: int, b: int, c: int, e: int) -> Prototype:
    """Kind W prototype (c, e, -b, a mod gcd(c, b)) of a splitting quadruple."""
    D = e * e + 4 * b * c
    check_discriminant(D)
    g = math.gcd(c, b)
    if g == 0:
        raise ValueError(f"splitting quadruple ({a},{b},{c},{e}) has b = c = 0")
    return Prototype("W", D, c, e, -b, a % g)


def to_splitting_prototype(p: Prototype) -> tuple[int, int, int, int]:
    """Canonical splitting quadruple (q, -c, a, b) of a kind W prototype."""
    if p.kind != "W":
        raise ValueError(f"expected a kind W prototype, got kind {p.kind}")
    return (p.q, -p.c, p.a, p.b)


def orbits(D: int) -> list[list[Prototype]]:
    """Orbits of the kind Y prototypes under the successor map.

    Nonsquare D gives disjoint cycles, each listed from its smallest
    member.  Square D gives chains from each degenerate prototype to a
    terminal one.  Ordered by smallest member.
    """
    protos = enumerate_prototypes(D, "Y")
    if is_square(D):
        chains = []
        covered = set()
        for head in protos:
            if not head.is_degenerate:
                continue
            chain = [head]
            while not chain[-1].is_terminal:
                chain.append(next_prototype(chain[-1]))
            chains.append(chain)
            covered.update(chain)
        assert covered == set(protos)
        return sorted(chains, key=lambda ch: min(p.abcq for p in ch))
    cycles = []
    done = set()
    for start in protos:
        if start in done:
            continue
        cycle = [start]
        done.add(start)
        cur = next_prototype(start)
        while cur != start:
            cycle.append(cur)
            done.add(cur)
            cur = next_prototype(cur)
        cycles.append(cycle)
    return sorted(cycles, key=lambda cyc: min(p.abcq for p in cyc))


def prototype_to_json(p: Prototype) -> dict:
    return {
        "kind": p.kind,
        "D": p.D,
        "a": p.a,
        "b": p.b,
        "c": p.c,
        "q": p.q,
        "modulus": p.modulus,
        "terminal": p.is_terminal,
        "initial": p.is_initial,
        "degenerate": p.is_degenerate,
        "lambda": lambda_of(p).to_json(),
    }


def prototype_from_json(obj: dict) -> Prototype:
    """Rebuild and re-validate a prototype record."""
    p = Prototype(
        obj["kind"], int(obj["D"]), int(obj["a"]), int(obj["b"]), int(obj["c"]),
        int(obj["q"]),
    )
    rebuilt = prototype_to_json(p)
    for key, value in obj.items():
        if rebuilt.get(key) != value:
            raise ValueError(f"inconsistent prototype record: field {key!r}")
    return p
