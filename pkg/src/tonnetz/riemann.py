"""Schritt-Wechsel group and the point-reflection group with its quotients.

The Schritt-Wechsel group R is a semidirect product of the rank-2 Schritt
lattice (generated by the Quintschritt Q and the Terzschritt Z) with the
order-2 group generated by the Seitenwechsel W; a Wechsel conjugates every
Schritt to its inverse, so the product of two Wechsel (t'w)(tw) is the
Schritt t' - t.  Every Wechsel is an involution, so R has no element of
order 3; this distinguishes R from the triangle group.

The point-reflection group P is generated by the three half-turns pi1,
pi2, pi3 about the edge midpoints of the base triangle.  Its normal form
is (pi3 pi1)^a (pi1 pi2)^b pi1^flip.  Mapping pi3 pi2 -> Q, pi3 pi1 -> Z,
pi1 -> W reverses products: P and R are anti-isomorphic.  The comma
subgroup K is generated by (pi3 pi1)^3 and (pi1 pi2)^4; the quotient P/K
has 24 elements and is dihedral of order 24.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import Isometry, Triangle, triangle_from_vertices


@dataclass(frozen=True)
class RElement:
    """A Schritt (wechsel False) or Wechsel, with Q and Z exponents."""

    wechsel: bool
    quint: int
    terz: int


@dataclass(frozen=True)
class PElement:
    """Normal form (pi3 pi1)^a (pi1 pi2)^b pi1^flip."""

    a: int
    b: int
    flip: bool


@dataclass(frozen=True)
class D12Coset:
    """An element of the quotient P/K: (a mod 3, b mod 4, flip)."""

    a: int
    b: int
    flip: bool

    def __post_init__(self) -> None:
        if not (0 <= self.a < 3 and 0 <= self.b < 4):
            raise ValueError(f"coset exponents out of range: {(self.a, self.b)}")


R_IDENTITY = RElement(False, 0, 0)
QUINTSCHRITT = RElement(False, 1, 0)
TERZSCHRITT = RElement(False, 0, 1)
SEITENWECHSEL = RElement(True, 0, 0)

P_IDENTITY = PElement(0, 0, False)


def r_compose(x: RElement, y: RElement) -> RElement:
    """Product xy; a leading Wechsel inverts the following Schritt part."""
    sign = -1 if x.wechsel else 1
    return RElement(x.wechsel ^ y.wechsel, x.quint + sign * y.quint, x.terz + sign * y.terz)


def r_inverse(x: RElement) -> RElement:
    if x.wechsel:
        return x
    return RElement(False, -x.quint, -x.terz)


def r_order(x: RElement) -> int | None:
    if x == R_IDENTITY:
        return 1
    if x.wechsel:
        return 2
    return None


def p_generator(i: int) -> PElement:
    """The half-turn about the midpoint of edge i of the base triangle."""
    if i == 1:
        return PElement(0, 0, True)
    if i == 2:
        return PElement(0, -1, True)
    if i == 3:
        return PElement(1, 0, True)
    raise ValueError(f"point reflection index must be 1, 2 or 3, got {i!r}")


def p_compose(x: PElement, y: PElement) -> PElement:
    """Product xy in normal form; a flip inverts the translation part."""
    sign = -1 if x.flip else 1
    return PElement(x.a + sign * y.a, x.b + sign * y.b, x.flip ^ y.flip)


def p_inverse(x: PElement) -> PElement:
    if x.flip:
        return x
    return PElement(-x.a, -x.b, False)


def p_order(x: PElement) -> int | None:
    if x == P_IDENTITY:
        return 1
    if x.flip:
        return 2
    return None


def p_power(x: PElement, n: int) -> PElement:
    g = P_IDENTITY
    step = x if n >= 0 else p_inverse(x)
    for _ in range(abs(n)):
        g = p_compose(g, step)
    return g


def p_isometry(x: PElement) -> Isometry:
    """The lattice isometry of x: a translation, or a point reflection."""
    if x.flip:
        return Isometry((-1, 0, 0, -1), (1 + x.b, x.a - x.b))
    return Isometry((1, 0, 0, 1), (x.b, x.a - x.b))


def p_left_action(x: PElement, t: Triangle) -> Triangle:
    """Apply x to a triangle; point reflections exchange orientations."""
    iso = p_isometry(x)
    return triangle_from_vertices({iso.apply(v) for v in t.vertices()})


def p_to_r(x: PElement) -> RElement:
    """The anti-isomorphism P -> R: pi3 pi2 -> Q, pi3 pi1 -> Z, pi1 -> W.

    Reverses products: p_to_r(xy) = p_to_r(y) p_to_r(x).
    """
    if x.flip:
        return RElement(True, -x.b, x.b - x.a)
    return RElement(False, x.b, x.a - x.b)


def in_comma_subgroup(x: PElement) -> bool:
    """Membership in K, the group generated by (pi3 pi1)^3 and (pi1 pi2)^4."""
    return not x.flip and x.a % 3 == 0 and x.b % 4 == 0


def project_d12(x: PElement) -> D12Coset:
    """Image of x in the 24-element quotient P/K."""
    return D12Coset(x.a % 3, x.b % 4, x.flip)


def d12_compose(x: D12Coset, y: D12Coset) -> D12Coset:
    sign = -1 if x.flip else 1
    return D12Coset((x.a + sign * y.a) % 3, (x.b + sign * y.b) % 4, x.flip ^ y.flip)


def d12_inverse(x: D12Coset) -> D12Coset:
    if x.flip:
        return x
    return D12Coset(-x.a % 3, -x.b % 4, False)


def d12_order(x: D12Coset) -> int:
    g = x
    for k in range(1, 25):
        if g == D12Coset(0, 0, False):
            return k
        g = d12_compose(g, x)
    raise RuntimeError("quotient has 24 elements; unreachable")


# the rotation of order 12 and the reflection generating the dihedral quotient
D12_ROTATION = p_compose(p_inverse(PElement(0, 1, False)), PElement(1, 0, False))
D12_REFLECTION = p_generator(1)

NAMED_COMMAS = {
    # three major thirds against the octave
    "lesser-diesis": PElement(3, 0, False),
    # four minor thirds against the octave
    "greater-diesis": PElement(0, 4, False),
    # four fifths against a major third and two octaves
    "syntonic": PElement(3, 4, False),
    # twelve fifths against seven octaves
    "pythagorean": PElement(12, 12, False),
}


def format_r(x: RElement) -> str:
    s = f"Q^{x.quint} Z^{x.terz}"
    if x.wechsel:
        s += " W"
    return s


def parse_r(text: str) -> RElement:
    """Parse "Q^u Z^v" with an optional trailing "W"."""
    tokens = text.replace("−", "-").split()
    if not tokens:
        raise ValueError("empty Schritt-Wechsel element")
    wechsel = False
    if tokens[-1] == "W":
        wechsel = True
        tokens = tokens[:-1]
    quint = terz = 0
    seen = set()
    for tok in tokens:
        if len(tok) < 3 or tok[0] not in "QZ" or tok[1] != "^":
            raise ValueError(f"bad Schritt token {tok!r} in {text!r}")
        try:
            value = int(tok[2:])
        except ValueError:
            raise ValueError(f"bad exponent in token {tok!r}") from None
        if tok[0] in seen:
            raise ValueError(f"duplicate {tok[0]} token in {text!r}")
        seen.add(tok[0])
        if tok[0] == "Q":
            quint = value
        else:
            terz = value
    return RElement(wechsel, quint, terz)


def format_p(x: PElement) -> str:
    return "(%d,%d,%d)" % (x.a, x.b, 1 if x.flip else 0)


def parse_p(text: str) -> PElement:
    """Parse "(a,b,flip)" with flip given as 0 or 1."""
    s = text.strip().replace("−", "-")
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"point-reflection element must look like (a,b,flip), got {text!r}")
    parts = [p.strip() for p in s[1:-1].split(",")]
    if len(parts) != 3:
        raise ValueError(f"need (a,b,flip), got {text!r}")
    try:
        a, b = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"exponents must be integers in {text!r}") from None
    if parts[2] not in ("0", "1"):
        raise ValueError(f"flip must be 0 or 1 in {text!r}")
    return PElement(a, b, parts[2] == "1")
