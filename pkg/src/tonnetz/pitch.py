"""Spelled note names and chord symbols for lattice points and triangles.

Spelling is exact: a vertex (p, q) has fifth index p + 4q on the line of
fifths and comma level q.  Names never collapse enharmonically (E# and F
are different vertices), and the comma level distinguishes same-named
vertices in different third-rows, written as a [q=n] suffix when needed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .lattice import Triangle, Vertex

LETTERS = "FCGDAEB"

_ACCIDENTAL_VALUE = {"#": 1, "x": 2, "b": -1}


@dataclass(frozen=True, order=True)
class NoteName:
    """A spelled pitch: position on the line of fifths plus comma level."""

    fifth_index: int
    comma: int

    @property
    def letter(self) -> str:
        return LETTERS[(self.fifth_index + 1) % 7]

    @property
    def accidentals(self) -> int:
        """Number of sharps (negative for flats)."""
        return (self.fifth_index + 1) // 7


@dataclass(frozen=True, order=True)
class ChordName:
    root: NoteName
    minor: bool


class ChordParseError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} in {text!r} at position {position}")
        self.text = text
        self.position = position


def spell_vertex(v: Vertex) -> NoteName:
    p, q = v
    return NoteName(p + 4 * q, q)


def vertex_of(note: NoteName) -> Vertex:
    return (note.fifth_index - 4 * note.comma, note.comma)


def pitch_class(note: NoteName) -> int:
    """Equal-tempered pitch class, C = 0."""
    return (7 * note.fifth_index) % 12


def accidental_string(count: int) -> str:
    if count >= 0:
        return "x" * (count // 2) + "#" * (count % 2)
    return "b" * (-count)


def format_note(note: NoteName, with_comma: bool = False) -> str:
    s = note.letter + accidental_string(note.accidentals)
    if with_comma:
        s += f"[q={note.comma}]"
    return s


def format_chord(chord: ChordName, with_comma: bool = False) -> str:
    s = chord.root.letter + accidental_string(chord.root.accidentals)
    if chord.minor:
        s += "m"
    if with_comma:
        s += f"[q={chord.root.comma}]"
    return s


def name_triangle(t: Triangle) -> ChordName:
    """Upward triangles are major triads, downward ones minor, root at the root vertex."""
    return ChordName(spell_vertex(t.root), minor=not t.up)


def chord_triangle(chord: ChordName) -> Triangle:
    return Triangle(vertex_of(chord.root), up=not chord.minor)


def chord_tones(t: Triangle) -> tuple[NoteName, NoteName, NoteName]:
    """The three spelled tones, root first, then by interval above the root."""
    root, fifth, third = t.vertices()
    return (spell_vertex(root), spell_vertex(third), spell_vertex(fifth))


def default_comma_level(fifth_index: int) -> int:
    """Comma level used when a chord symbol carries no [q=n] annotation.

    Chooses q so the vertex lands as close to the central column of the
    lattice as possible (|fifth_index - 4q| minimal, ties to the smaller
    q).  This reproduces the home positions of the familiar names: C, G,
    D at q=0, A, E, B at q=1, Eb, Ab at q=-1, C#, G# at q=2.
    """
    q, r = divmod(fifth_index, 4)
    return q if r <= 2 else q + 1


_CHORD_RE = re.compile(
    r"""
    (?P<letter>[A-G])
    (?P<accidentals>[#bx]*)
    (?P<mode>min|m)?
    (?:\[q=(?P<comma>-?\d+)\])?
    """,
    re.VERBOSE,
)


def parse_chord(
    text: str, default_comma: int | None = None
) -> tuple[ChordName, Triangle]:
    """Parse a chord symbol like "C", "F#m", "Ebm[q=-1]" or "Amin".

    Returns the chord name and its triangle.  Unannotated symbols get the
    comma level from default_comma if given, else from default_comma_level.
    """
    s = text.strip()
    if not s:
        raise ChordParseError("empty chord symbol", text, 0)
    if not ("A" <= s[0] <= "G"):
        raise ChordParseError(f"unknown note letter {s[0]!r}", text, 0)
    m = _CHORD_RE.match(s)
    assert m is not None  # first character already checked
    if m.end() != len(s):
        raise ChordParseError(f"unexpected {s[m.end():]!r}", text, m.end())
    fifth_index = LETTERS.index(m.group("letter")) - 1
    for ch in m.group("accidentals"):
        fifth_index += 7 * _ACCIDENTAL_VALUE[ch]
    if m.group("comma") is not None:
        comma = int(m.group("comma"))
    elif default_comma is not None:
        comma = default_comma
    else:
        comma = default_comma_level(fifth_index)
    chord = ChordName(NoteName(fifth_index, comma), minor=m.group("mode") is not None)
    return chord, chord_triangle(chord)


def hexagon_common_tone(e1: int, e2: int) -> NoteName:
    """The note shared by all six chords of the coset hexagon t1^e1 t2^e2.

    The base hexagon's common tone is the major third above the origin;
    translating by (e1, e2) moves it by e1*(-1, 2) + e2*(2, -1).
    """
    return spell_vertex((-e1 + 2 * e2, 1 + 2 * e1 - e2))
