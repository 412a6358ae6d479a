"""Chord progressions on the Tonnetz surface.

Ties the group machinery to chord symbols: parsimonious PLR moves and
shortest PLR words, the hexagon cycles around each kind of vertex, the
orbit cycles of rotations and translations, the three stripe systems,
and a progression analyzer that places a chord sequence on the lattice.

A PLR move flips a triangle across one of its edges, keeping two common
tones: P across the fifth edge, L across the minor-third edge, R across
the major-third edge.  Flip words act on triangles, not on the lattice;
unlike group elements they drift, so applying a fixed word to nearby
chords can tear them apart.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import AffinePermutation, from_word, right_mult_generator
from .lattice import (
    Edge,
    Triangle,
    Vertex,
    class_vertex,
    flip,
    perm_of,
    perm_to_iso,
    triangle_of,
    vertex_class,
)
from .pitch import ChordName, NoteName, chord_triangle, name_triangle, parse_chord, spell_vertex
from .subgroups import T1_VECTOR, T2_VECTOR

PLR_EDGES = {
    "P": Edge.FIFTH,
    "L": Edge.MINOR_THIRD,
    "R": Edge.MAJOR_THIRD,
}


def apply_move(t: Triangle, letter: str) -> Triangle:
    """One parsimonious move: P, L or R."""
    try:
        edge = PLR_EDGES[letter]
    except KeyError:
        raise ValueError(f"PLR move must be P, L or R, got {letter!r}") from None
    return flip(t, edge)


def apply_plr(t: Triangle, word: str) -> Triangle:
    """Apply a PLR word, rightmost letter first.

    >>> from .lattice import BASE_TRIANGLE, format_triangle
    >>> format_triangle(apply_plr(BASE_TRIANGLE, "RL"))
    'U(1,0)'
    """
    for letter in reversed(word):
        t = apply_move(t, letter)
    return t


def plr_path(start: Triangle, goal: Triangle) -> str:
    """A shortest PLR word taking start to goal, rightmost letter first.

    Breadth-first search trying P, L, R in that order, so the result is
    deterministic.  Its length equals the gallery distance.
    """
    if start == goal:
        return ""
    parent: dict[Triangle, tuple[Triangle, str]] = {start: (start, "")}
    frontier = [start]
    while frontier:
        nxt = []
        for t in frontier:
            for letter in "PLR":
                nb = apply_move(t, letter)
                if nb in parent:
                    continue
                parent[nb] = (t, letter)
                if nb == goal:
                    letters = []
                    cur = nb
                    while cur != start:
                        cur, letter = parent[cur]
                        letters.append(letter)
                    return "".join(letters)
                nxt.append(nb)
        frontier = nxt
    raise RuntimeError("flip graph is connected; unreachable")


def triangle_distance(t1: Triangle, t2: Triangle) -> int:
    """Gallery distance via Coxeter length of the relating element."""
    return (perm_of(t1).inverse() * perm_of(t2)).length()


# --- hexagon cycles ----------------------------------------------------------

# Walking a triangle's coset of the parabolic subgroup fixing its class-c
# vertex circles that vertex; the pair gives the alternating generators.
PAIR_OF_CLASS = {
    0: (2, 1),
    1: (1, 3),
    2: (3, 2),
}


@dataclass(frozen=True)
class HexagonCycle:
    """Six triangles around one vertex, all sharing that tone."""

    center: Vertex
    common_tone: NoteName
    triangles: tuple[Triangle, ...]
    chords: tuple[ChordName, ...]


def cycle_by_pair(f: AffinePermutation, i: int, j: int) -> list[AffinePermutation]:
    """The six elements f, f*s_i, f*s_i*s_j, ... of the coset of <s_i, s_j>."""
    elems = [f]
    for k in range(5):
        elems.append(right_mult_generator(elems[-1], i if k % 2 == 0 else j))
    return elems


def vertex_cycle(t: Triangle, v: Vertex) -> HexagonCycle:
    """The six triangles around a vertex of t, starting at t.

    >>> from .lattice import BASE_TRIANGLE
    >>> from .pitch import format_chord
    >>> cyc = vertex_cycle(BASE_TRIANGLE, (0, 1))
    >>> [format_chord(c) for c in cyc.chords]
    ['C', 'Em', 'E', 'C#m', 'A', 'Am']
    """
    if v not in t.vertices():
        raise ValueError(f"{v} is not a vertex of {t}")
    i, j = PAIR_OF_CLASS[vertex_class(v)]
    elems = cycle_by_pair(perm_of(t), i, j)
    triangles = tuple(triangle_of(g) for g in elems)
    return HexagonCycle(
        center=v,
        common_tone=spell_vertex(v),
        triangles=triangles,
        chords=tuple(name_triangle(u) for u in triangles),
    )


def hexagon_cycle(t: Triangle) -> HexagonCycle:
    """The cycle around t's class-2 vertex, the center of its tiling hexagon."""
    return vertex_cycle(t, class_vertex(t, 2))


# --- rotation and translation orbits -----------------------------------------


def rotation_cycle(t: Triangle, sense: int = 1) -> list[Triangle]:
    """Orbit of t under the order-3 rotation about the base hexagon center.

    The rotation is s3*s2 (sense >= 0) or s2*s3 (sense < 0), acting on the
    whole lattice by left multiplication.
    """
    word = (3, 2) if sense >= 0 else (2, 3)
    iso = perm_to_iso(from_word(word))
    second = iso.apply_triangle(t)
    return [t, second, iso.apply_triangle(second)]


def translation_cycle(t: Triangle) -> list[Triangle]:
    """Images of t under t1, then t2*t1, then t3*t2*t1 = identity.

    The three translation generators multiply to the identity, so the
    third chord is the seed again.
    """
    (a1, b1), (a2, b2) = T1_VECTOR, T2_VECTOR
    first = _shift(t, a1, b1)
    second = _shift(first, a2, b2)
    third = _shift(second, -a1 - a2, -b1 - b2)
    return [first, second, third]


def _shift(t: Triangle, dp: int, dq: int) -> Triangle:
    return Triangle((t.root[0] + dp, t.root[1] + dq), t.up)


# --- stripes ------------------------------------------------------------------


class StripeKind(Enum):
    """The three parsimonious stripe systems."""

    FIFTHS = "fifths"
    HEXATONIC = "hexatonic"
    OCTATONIC = "octatonic"


def _stripe_member(seed: Triangle, kind: StripeKind, k: int) -> Triangle:
    p, q = seed.root
    if kind is StripeKind.FIFTHS:
        if seed.up:
            if k % 2 == 0:
                return Triangle((p + k // 2, q), up=True)
            return Triangle((p + (k - 1) // 2, q + 1), up=False)
        if k % 2 == 0:
            return Triangle((p + k // 2, q), up=False)
        return Triangle((p + (k + 1) // 2, q - 1), up=True)
    if kind is StripeKind.HEXATONIC:
        if seed.up:
            if k % 2 == 0:
                return Triangle((p, q + k // 2), up=True)
            return Triangle((p, q + (k + 1) // 2), up=False)
        if k % 2 == 0:
            return Triangle((p, q + k // 2), up=False)
        return Triangle((p, q + (k - 1) // 2), up=True)
    if seed.up:
        if k % 2 == 0:
            return Triangle((p + k // 2, q - k // 2), up=True)
        return Triangle((p + (k - 1) // 2, q - (k - 1) // 2), up=False)
    if k % 2 == 0:
        return Triangle((p + k // 2, q - k // 2), up=False)
    return Triangle((p + (k + 1) // 2, q - (k + 1) // 2), up=True)


def stripe(seed: Triangle, kind: StripeKind, count: int = 3) -> list[Triangle]:
    """2*count + 1 consecutive triangles of the stripe through seed.

    Positions run from -count to count with the seed in the middle.
    Consecutive stripe members are flip neighbors: fifths stripes
    alternate R and L moves, hexatonic ones P and L, octatonic ones P
    and R.

    >>> from .lattice import BASE_TRIANGLE
    >>> from .pitch import format_chord, name_triangle
    >>> [format_chord(name_triangle(t)) for t in stripe(BASE_TRIANGLE, StripeKind.FIFTHS, 2)]
    ['F', 'Am', 'C', 'Em', 'G']
    """
    if count < 0:
        raise ValueError("count must be non-negative")
    return [_stripe_member(seed, kind, k) for k in range(-count, count + 1)]


# --- progression analysis ------------------------------------------------------


@dataclass(frozen=True)
class ProgressionStep:
    """One chord of an analyzed progression."""

    symbol: str
    chord: ChordName
    triangle: Triangle
    distance: int
    common_tones: tuple[NoteName, ...]
    shares_hexagon: bool


@dataclass(frozen=True)
class ProgressionReport:
    steps: tuple[ProgressionStep, ...]
    total_distance: int


def _resolve(symbol: str, prev: Triangle, default_comma: int | None) -> tuple[ChordName, Triangle]:
    """Pick the instance of the chord nearest to the previous triangle.

    Explicit [q=n] annotations are honored; otherwise comma levels within
    four of the previous root's level compete, ranked by gallery distance,
    then by |q|, then by q.
    """
    chord, t = parse_chord(symbol, default_comma)
    if "[q=" in symbol:
        return chord, t
    prev_comma = spell_vertex(prev.root).comma
    best = None
    for q in range(prev_comma - 4, prev_comma + 5):
        cand = ChordName(NoteName(chord.root.fifth_index, q), chord.minor)
        cand_t = chord_triangle(cand)
        key = (triangle_distance(prev, cand_t), abs(q), q)
        if best is None or key < best[0]:
            best = (key, cand, cand_t)
    assert best is not None
    return best[1], best[2]


def analyze(symbols: list[str], default_comma: int | None = None) -> ProgressionReport:
    """Place a chord sequence on the lattice, one instance per symbol.

    The first chord parses at its default position; each later chord
    takes the nearest instance in the contextual comma band.  Every step
    reports the flip distance from the previous chord, their common
    tones, and whether the two chords sit in the same tiling hexagon
    (share a class-2 vertex).
    """
    if not symbols:
        raise ValueError("progression needs at least one chord")
    steps = []
    prev_triangle = None
    for symbol in symbols:
        if prev_triangle is None:
            chord, t = parse_chord(symbol, default_comma)
            distance = 0
            common: tuple[NoteName, ...] = ()
            shares = False
        else:
            chord, t = _resolve(symbol, prev_triangle, default_comma)
            distance = triangle_distance(prev_triangle, t)
            shared = set(prev_triangle.vertices()) & set(t.vertices())
            common = tuple(sorted(spell_vertex(v) for v in shared))
            shares = any(vertex_class(v) == 2 for v in shared)
        steps.append(
            ProgressionStep(
                symbol=symbol.strip(),
                chord=chord,
                triangle=t,
                distance=distance,
                common_tones=common,
                shares_hexagon=shares,
            )
        )
        prev_triangle = t
    return ProgressionReport(tuple(steps), sum(s.distance for s in steps))


if __name__ == "__main__":
    import doctest

    doctest.testmod()
