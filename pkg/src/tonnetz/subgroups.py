"""Translation subgroup, finite quotient, and the hexagon coset tiling.

The translations form a free abelian normal subgroup of rank 2, generated
by t1 = s2 s3 s2 s1 (up), t2 = s3 s1 s3 s2 (lower right) and
t3 = s1 s2 s1 s3 (lower left); t1 t2 t3 is the identity.  Every element
factors uniquely as a translation times one of the six elements of the
finite subgroup generated by s2 and s3, and the left cosets of that
finite subgroup tile the Tonnetz by hexagons.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .core import AffinePermutation, from_word, generator, identity
from .lattice import Isometry, perm_to_iso


class NotATranslationError(ValueError):
    pass


class TranslationVector(NamedTuple):
    """Exponents (e1, e2) of a translation t1^e1 * t2^e2."""

    e1: int
    e2: int


@dataclass(frozen=True)
class HexagonId:
    """A hexagon of the coset tiling, keyed by its base translation."""

    base: TranslationVector


class FiniteS3Element(Enum):
    """The six elements of the finite subgroup generated by s2 and s3."""

    E = ()
    S2 = (2,)
    S3 = (3,)
    S2S3 = (2, 3)
    S3S2 = (3, 2)
    S2S3S2 = (2, 3, 2)

    @property
    def word(self) -> tuple[int, ...]:
        return self.value

    @property
    def perm(self) -> AffinePermutation:
        return from_word(self.value)

    def inverse(self) -> "FiniteS3Element":
        if self is FiniteS3Element.S2S3:
            return FiniteS3Element.S3S2
        if self is FiniteS3Element.S3S2:
            return FiniteS3Element.S2S3
        return self

    def __mul__(self, other: "FiniteS3Element") -> "FiniteS3Element":
        return _S3_TABLE[self, other]


def _build_s3_table() -> dict[tuple[FiniteS3Element, FiniteS3Element], FiniteS3Element]:
    by_perm = {el.perm: el for el in FiniteS3Element}
    table = {}
    for x in FiniteS3Element:
        for y in FiniteS3Element:
            table[x, y] = by_perm[x.perm * y.perm]
    return table


_S3_TABLE = _build_s3_table()

S3_ELEMENTS = tuple(FiniteS3Element)

_TRANSLATION_WORDS = {
    1: (2, 3, 2, 1),
    2: (3, 1, 3, 2),
    3: (1, 2, 1, 3),
}

# lattice displacement vectors of t1 and t2
T1_VECTOR = (-1, 2)
T2_VECTOR = (2, -1)


def translation_generator(i: int) -> AffinePermutation:
    """t1, t2 or t3 as a window.

    >>> translation_generator(1).window
    (2, -3, 1)
    """
    try:
        return from_word(_TRANSLATION_WORDS[i])
    except KeyError:
        raise ValueError(f"translation index must be 1, 2 or 3, got {i!r}") from None


def is_translation(f: AffinePermutation) -> bool:
    """True iff f's isometry has the identity matrix part."""
    return perm_to_iso(f).m == (1, 0, 0, 1)


def _coords_from_iso(iso: Isometry) -> TranslationVector:
    vx, vy = iso.v
    e1, r1 = divmod(vx + 2 * vy, 3)
    e2, r2 = divmod(2 * vx + vy, 3)
    if r1 or r2:
        raise NotATranslationError(f"vector {iso.v} is not in the translation lattice")
    return TranslationVector(e1, e2)


def translation_coords(f: AffinePermutation) -> TranslationVector:
    """Exponents (e1, e2) with f = t1^e1 * t2^e2.

    >>> translation_coords(translation_generator(3).inverse())
    TranslationVector(e1=1, e2=1)
    """
    iso = perm_to_iso(f)
    if iso.m != (1, 0, 0, 1):
        raise NotATranslationError(f"{f.window} is not a translation")
    return _coords_from_iso(iso)


def translation_perm(vec: TranslationVector | tuple[int, int]) -> AffinePermutation:
    """The translation t1^e1 * t2^e2 as a window."""
    e1, e2 = vec
    g = identity()
    t1 = translation_generator(1)
    t2 = translation_generator(2)
    step1 = t1 if e1 >= 0 else t1.inverse()
    for _ in range(abs(e1)):
        g = g * step1
    step2 = t2 if e2 >= 0 else t2.inverse()
    for _ in range(abs(e2)):
        g = g * step2
    return g


def decompose(f: AffinePermutation) -> tuple[TranslationVector, FiniteS3Element]:
    """Unique factorization f = t * sigma with t a translation.

    >>> decompose(from_word([2, 3, 2, 1]))[0]
    TranslationVector(e1=1, e2=0)
    """
    for sigma in S3_ELEMENTS:
        t = f * sigma.inverse().perm
        iso = perm_to_iso(t)
        if iso.m == (1, 0, 0, 1):
            return _coords_from_iso(iso), sigma
    raise RuntimeError("every element factors over the finite subgroup")


def coset_mod_T(f: AffinePermutation) -> FiniteS3Element:
    """Image of f in the quotient by the translation subgroup."""
    return decompose(f)[1]


def hexagon_of(f: AffinePermutation) -> HexagonId:
    """The coset hexagon containing f's triangle."""
    return HexagonId(decompose(f)[0])


def format_translation_vector(vec: TranslationVector | tuple[int, int]) -> str:
    return "t1^%d t2^%d" % tuple(vec)


def parse_translation_vector(text: str) -> TranslationVector:
    """Parse "t1^{e1} t2^{e2}"."""
    tokens = text.replace("−", "-").split()
    if len(tokens) != 2 or not tokens[0].startswith("t1^") or not tokens[1].startswith("t2^"):
        raise ValueError(f"expected 't1^e1 t2^e2', got {text!r}")
    try:
        return TranslationVector(int(tokens[0][3:]), int(tokens[1][3:]))
    except ValueError:
        raise ValueError(f"bad exponent in {text!r}") from None


def conjugate_translation(i: int, vec: TranslationVector | tuple[int, int]) -> TranslationVector:
    """Coordinates of s_i * t * s_i for the translation t with the given coordinates.

    >>> conjugate_translation(1, (1, 0))
    TranslationVector(e1=-1, e2=0)
    >>> conjugate_translation(2, (1, 0))
    TranslationVector(e1=1, e2=1)
    """
    s = generator(i)
    g = s * translation_perm(vec) * s
    return translation_coords(g)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
