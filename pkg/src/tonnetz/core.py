"""Affine permutations of the triangular tiling, in window notation.

The group studied here consists of the bijections f of the integers that
satisfy f(n + 3) = f(n) + 3 and f(-1) + f(0) + f(1) = 0.  Such a map is
determined by its window [f(-1), f(0), f(1)], a triple of integers that
sums to zero and meets every residue class mod 3 exactly once.  The three
generators s1, s2, s3 are involutions, and the group acts simply
transitively on the triangles of the infinite Tonnetz; the lattice side of
that correspondence lives in :mod:`tonnetz.lattice`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple

WINDOW_POSITIONS = (-1, 0, 1)

GENERATOR_INDICES = (1, 2, 3)


class ElementType(Enum):
    IDENTITY = "identity"
    REFLECTION = "reflection"
    ROTATION = "rotation"
    TRANSLATION = "translation"
    GLIDE_REFLECTION = "glide-reflection"


class TriangleCoords(NamedTuple):
    """Center coordinates of a triangle along the three generator axes.

    Axis 1 points left, axis 2 to the upper right, axis 3 to the lower
    right; the three coordinates always sum to zero.
    """

    c1: int
    c2: int
    c3: int


@dataclass(frozen=True, order=True)
class AffinePermutation:
    """An element of the affine triangle group, stored by its window.

    >>> AffinePermutation(-3, 1, 2).window
    (-3, 1, 2)
    """

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if self.a + self.b + self.c != 0:
            raise ValueError(f"window {self.window} does not sum to zero")
        if {self.a % 3, self.b % 3, self.c % 3} != {0, 1, 2}:
            raise ValueError(
                f"window {self.window} must meet each residue class mod 3 once"
            )

    @property
    def window(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __call__(self, n: int) -> int:
        """Evaluate the underlying map at any integer.

        >>> AffinePermutation(-3, 1, 2)(2)
        0
        >>> AffinePermutation(0, -1, 1)(-4)
        -3
        """
        r = ((n + 1) % 3) - 1
        shift = n - r
        return self.window[r + 1] + shift

    def __mul__(self, other: AffinePermutation) -> AffinePermutation:
        """Composition f * g, with g applied first."""
        if not isinstance(other, AffinePermutation):
            return NotImplemented
        return AffinePermutation(*(self(other(p)) for p in WINDOW_POSITIONS))

    def inverse(self) -> AffinePermutation:
        """The inverse bijection.

        >>> AffinePermutation(-3, 1, 2).inverse().window
        (-2, 2, 0)
        """
        out = [0, 0, 0]
        for p, v in zip(WINDOW_POSITIONS, self.window):
            r = v % 3
            target = r if r != 2 else -1
            out[target + 1] = p + (target - v)
        return AffinePermutation(*out)

    def right_descents(self) -> set[int]:
        """Generator indices i with length(self * s_i) < length(self)."""
        found = set()
        if self.a > self.b:
            found.add(1)
        if self.b > self.c:
            found.add(2)
        if self.c > self.a + 3:
            found.add(3)
        return found

    def reduced_word(self) -> tuple[int, ...]:
        """The canonical reduced word, stripping the smallest descent first.

        >>> AffinePermutation(-3, 2, 1).reduced_word()
        (2, 3, 2)
        >>> AffinePermutation(1, -1, 0).reduced_word()
        (2, 1)
        """
        letters = []
        g = self
        while g != IDENTITY:
            i = min(g.right_descents())
            letters.append(i)
            g = right_mult_generator(g, i)
        letters.reverse()
        return tuple(letters)

    def length(self) -> int:
        """Coxeter length; equals the flip distance from the base triangle."""
        return len(self.reduced_word())

    def is_even(self) -> bool:
        """Whether the element is a product of an even number of generators.

        Computed from the permutation the window residues induce on the
        residues (2, 0, 1) of the identity window; each generator swaps two
        of the three slots, so this parity equals length mod 2.
        """
        slot_of = {2: 0, 0: 1, 1: 2}
        seq = [slot_of[v % 3] for v in self.window]
        inversions = sum(
            1 for i in range(3) for j in range(i + 1, 3) if seq[i] > seq[j]
        )
        return inversions % 2 == 0

    def order(self) -> int | None:
        """Order of the element, or None when no power returns to identity.

        Finite orders here are only 1, 2 and 3, so six iterations decide.
        """
        g = self
        for k in range(1, 7):
            if g == IDENTITY:
                return k
            g = g * self
        return None

    def classify(self) -> ElementType:
        """Sort the element into the four isometry types (plus identity)."""
        if self == IDENTITY:
            return ElementType.IDENTITY
        order = self.order()
        if order == 2:
            return ElementType.REFLECTION
        if order == 3:
            return ElementType.ROTATION
        if self.is_even():
            return ElementType.TRANSLATION
        return ElementType.GLIDE_REFLECTION

    def center_coords(self) -> TriangleCoords:
        """Axis coordinates of the center of this element's triangle.

        The window entry congruent to i mod 3 contributes the i-th
        coordinate: +1 if it sits in the first slot, unchanged in the
        middle slot, -1 in the last slot.

        >>> AffinePermutation(-3, 2, 1).center_coords()
        TriangleCoords(c1=0, c2=2, c3=-2)
        """
        out = []
        for i in GENERATOR_INDICES:
            r = i % 3
            if self.a % 3 == r:
                out.append(self.a + 1)
            elif self.b % 3 == r:
                out.append(self.b)
            else:
                out.append(self.c - 1)
        return TriangleCoords(*out)

    def center_distance(self) -> int:
        """Half the coordinate l1-norm, i.e. the sum of positive coordinates.

        This is the hexagonal distance of the triangle center from the
        origin in axis units.  It is NOT always the flip distance: the two
        agree on many short elements but differ already at length 3 (for
        example the window [-3, 2, 1]).  Use length() or the BFS oracle in
        :mod:`tonnetz.lattice` for the true gallery distance; the verify
        suite tabulates the comparison.
        """
        return sum(c for c in self.center_coords() if c > 0)


IDENTITY = AffinePermutation(-1, 0, 1)

_GENERATORS = {
    1: AffinePermutation(0, -1, 1),
    2: AffinePermutation(-1, 1, 0),
    3: AffinePermutation(-2, 0, 2),
}


def identity() -> AffinePermutation:
    return IDENTITY


def generator(i: int) -> AffinePermutation:
    """The i-th generating reflection, i in {1, 2, 3}.

    >>> generator(3).window
    (-2, 0, 2)
    """
    try:
        return _GENERATORS[i]
    except KeyError:
        raise ValueError(f"generator index must be 1, 2 or 3, got {i!r}") from None


def right_mult_generator(f: AffinePermutation, i: int) -> AffinePermutation:
    """f * s_i by the window rewriting rule, without composing maps.

    >>> right_mult_generator(AffinePermutation(-1, 1, 0), 3).window
    (-3, 1, 2)
    """
    a, b, c = f.window
    if i == 1:
        return AffinePermutation(b, a, c)
    if i == 2:
        return AffinePermutation(a, c, b)
    if i == 3:
        return AffinePermutation(c - 3, b, a + 3)
    raise ValueError(f"generator index must be 1, 2 or 3, got {i!r}")


def from_word(word: Iterable[int]) -> AffinePermutation:
    """Product of generators, applied left to right from the identity.

    >>> from_word([2, 3, 2]).window
    (-3, 2, 1)
    >>> from_word([]) == identity()
    True
    """
    g = IDENTITY
    for i in word:
        g = right_mult_generator(g, i)
    return g


def triangle_to_perm(coords: TriangleCoords | tuple[int, int, int]) -> AffinePermutation:
    """Invert center_coords: recover the window from axis coordinates.

    Each coordinate c_i is adjusted by an offset in {-1, 0, +1} to hit the
    residue class i mod 3; the offsets must form a permutation of
    {-1, 0, +1}, which fixes the slot of each entry.

    >>> triangle_to_perm((0, -1, 1)).window
    (0, -1, 1)
    """
    c1, c2, c3 = coords
    slots: dict[int, int] = {}
    for i, ci in zip(GENERATOR_INDICES, (c1, c2, c3)):
        for entry in (ci - 1, ci, ci + 1):
            if entry % 3 == i % 3:
                offset = entry - ci
                if offset in slots:
                    raise ValueError(f"{(c1, c2, c3)} is not a triangle center")
                slots[offset] = entry
                break
    return AffinePermutation(slots[-1], slots[0], slots[1])


def ball(radius: int) -> list[AffinePermutation]:
    """All elements of length <= radius, in breadth-first order."""
    if radius < 0:
        raise ValueError("radius must be non-negative")
    seen = {IDENTITY}
    frontier = [IDENTITY]
    out = [IDENTITY]
    for _ in range(radius):
        nxt = []
        for f in frontier:
            for i in GENERATOR_INDICES:
                g = right_mult_generator(f, i)
                if g not in seen:
                    seen.add(g)
                    nxt.append(g)
                    out.append(g)
        frontier = nxt
    return out


def length_layers(radius: int) -> list[int]:
    """Number of elements of each length 0..radius."""
    counts = [1]
    seen = {IDENTITY}
    frontier = [IDENTITY]
    for _ in range(radius):
        nxt = []
        for f in frontier:
            for i in GENERATOR_INDICES:
                g = right_mult_generator(f, i)
                if g not in seen:
                    seen.add(g)
                    nxt.append(g)
        counts.append(len(nxt))
        frontier = nxt
    return counts


# --- text formats ---------------------------------------------------------


def parse_window(text: str) -> AffinePermutation:
    """Parse "[a,b,c]" (spaces allowed, unicode minus accepted)."""
    s = text.strip().replace("−", "-")
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"window must look like [a,b,c], got {text!r}")
    parts = s[1:-1].split(",")
    if len(parts) != 3:
        raise ValueError(f"window needs exactly three entries, got {text!r}")
    try:
        vals = [int(p.strip()) for p in parts]
    except ValueError:
        raise ValueError(f"window entries must be integers, got {text!r}") from None
    return AffinePermutation(*vals)


def format_window(f: AffinePermutation) -> str:
    return "[%d,%d,%d]" % f.window


def parse_word(text: str) -> tuple[int, ...]:
    """Parse a generator word like "s2 s3 s2" or "s2.s3.s2".

    The empty string and "e" both denote the identity.
    """
    s = text.strip()
    if s in ("", "e"):
        return ()
    tokens = [t for t in s.replace(".", " ").replace("·", " ").split() if t]
    word = []
    for t in tokens:
        if len(t) == 2 and t[0] == "s" and t[1] in "123":
            word.append(int(t[1]))
        else:
            raise ValueError(f"bad generator token {t!r} in word {text!r}")
    return tuple(word)


def format_word(word: Iterable[int]) -> str:
    letters = list(word)
    if not letters:
        return "e"
    return " ".join(f"s{i}" for i in letters)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
