"""Parsimonious moves, hexagon and rotation cycles, stripes, analysis."""

import pytest

from tonnetz.lattice import BASE_TRIANGLE, Triangle, gallery_distance_bfs
from tonnetz.pitch import format_chord, format_note, name_triangle, parse_chord
from tonnetz.progressions import (
    StripeKind,
    analyze,
    apply_move,
    apply_plr,
    hexagon_cycle,
    plr_path,
    rotation_cycle,
    stripe,
    translation_cycle,
    triangle_distance,
    vertex_cycle,
)


def chords(triangles) -> list[str]:
    return [format_chord(name_triangle(t)) for t in triangles]


def step_letter(a: Triangle, b: Triangle) -> str:
    for letter in "PLR":
        if apply_move(a, letter) == b:
            return letter
    raise AssertionError(f"{a} and {b} are not flip neighbors")


def test_single_moves_from_c():
    assert chords([apply_move(BASE_TRIANGLE, x) for x in "PLR"]) == ["Cm", "Em", "Am"]


def test_moves_are_involutions():
    for letter in "PLR":
        for t in (BASE_TRIANGLE, Triangle((2, -1), up=False)):
            assert apply_move(apply_move(t, letter), letter) == t


def test_apply_plr_rightmost_first():
    # RL means: apply L, then R
    assert apply_plr(BASE_TRIANGLE, "RL") == Triangle((1, 0), up=True)
    assert chords([apply_plr(BASE_TRIANGLE, "RL")]) == ["G"]
    assert apply_plr(BASE_TRIANGLE, "") == BASE_TRIANGLE


def test_plr_path_fixtures():
    g = Triangle((1, 0), up=True)
    assert plr_path(BASE_TRIANGLE, g) == "RL"
    assert plr_path(BASE_TRIANGLE, Triangle((0, 0), up=False)) == "P"
    assert plr_path(BASE_TRIANGLE, BASE_TRIANGLE) == ""


def test_plr_path_lands_and_is_shortest():
    targets = [
        Triangle((p, q), up)
        for p in range(-2, 3)
        for q in range(-2, 3)
        for up in (True, False)
    ]
    for goal in targets:
        word = plr_path(BASE_TRIANGLE, goal)
        assert apply_plr(BASE_TRIANGLE, word) == goal
        assert len(word) == triangle_distance(BASE_TRIANGLE, goal)


def test_triangle_distance_matches_bfs():
    for p in range(-2, 3):
        for up in (True, False):
            t = Triangle((p, 1 - p), up)
            assert triangle_distance(BASE_TRIANGLE, t) == gallery_distance_bfs(
                BASE_TRIANGLE, t
            )


def test_voice_leading_drift():
    # RL of C and RLP of C differ by one letter but land far apart
    g = apply_plr(BASE_TRIANGLE, "RL")
    fm = apply_plr(BASE_TRIANGLE, "RLP")
    assert chords([g, fm]) == ["G", "Fm"]
    assert g == Triangle((1, 0), up=True)
    assert fm == Triangle((-1, 0), up=False)
    assert triangle_distance(g, fm) == 5
    assert len(plr_path(g, fm)) == 5


def test_hexagon_cycle_around_e():
    cyc = hexagon_cycle(BASE_TRIANGLE)
    assert cyc.center == (0, 1)
    assert format_note(cyc.common_tone) == "E"
    assert [format_chord(c) for c in cyc.chords] == ["C", "Em", "E", "C#m", "A", "Am"]
    assert len(set(cyc.triangles)) == 6


def test_vertex_cycle_around_g():
    cyc = vertex_cycle(BASE_TRIANGLE, (1, 0))
    assert format_note(cyc.common_tone) == "G"
    assert [format_chord(c) for c in cyc.chords] == ["C", "Cm", "Eb", "Gm", "G", "Em"]


def test_vertex_cycle_around_c():
    cyc = vertex_cycle(BASE_TRIANGLE, (0, 0))
    assert format_note(cyc.common_tone) == "C"
    assert [format_chord(c) for c in cyc.chords] == ["C", "Am", "F", "Fm", "Ab", "Cm"]


def test_vertex_cycle_members_share_the_tone():
    for v in BASE_TRIANGLE.vertices():
        cyc = vertex_cycle(BASE_TRIANGLE, v)
        for t in cyc.triangles:
            assert v in t.vertices()
        # consecutive members are flip neighbors, and the cycle closes
        ring = list(cyc.triangles) + [cyc.triangles[0]]
        for a, b in zip(ring, ring[1:]):
            assert step_letter(a, b) in "PLR"


def test_vertex_cycle_rejects_far_vertex():
    with pytest.raises(ValueError):
        vertex_cycle(BASE_TRIANGLE, (5, 5))


def test_rotation_cycles():
    assert chords(rotation_cycle(BASE_TRIANGLE)) == ["C", "E", "A"]
    assert chords(rotation_cycle(Triangle((1, 0), up=True))) == ["G", "C#", "F"]
    assert chords(rotation_cycle(Triangle((0, 0), up=False))) == ["Cm", "G#m", "F#m"]
    assert chords(rotation_cycle(Triangle((-1, 2), up=False))) == ["C#m", "Am", "Em"]


def test_rotation_cycle_senses_are_inverse():
    fwd = rotation_cycle(BASE_TRIANGLE)
    back = rotation_cycle(BASE_TRIANGLE, sense=-1)
    assert back == [fwd[0], fwd[2], fwd[1]]


def test_rotation_cycle_closes():
    for t in (BASE_TRIANGLE, Triangle((2, -1), up=False)):
        cyc = rotation_cycle(t)
        assert len(set(cyc)) == 3


def test_translation_cycles():
    assert chords(translation_cycle(BASE_TRIANGLE)) == ["C#", "B", "C"]
    am = Triangle((-1, 1), up=False)
    assert chords(translation_cycle(am)) == ["A#m", "G#m", "Am"]
    assert translation_cycle(BASE_TRIANGLE)[2] == BASE_TRIANGLE


def test_translation_cycle_preserves_orientation():
    for t in translation_cycle(Triangle((0, 0), up=False)):
        assert not t.up


def test_stripe_fifths():
    assert chords(stripe(BASE_TRIANGLE, StripeKind.FIFTHS, 2)) == [
        "F", "Am", "C", "Em", "G",
    ]
    am = Triangle((-1, 1), up=False)
    assert chords(stripe(am, StripeKind.FIFTHS, 2)) == ["Dm", "F", "Am", "C", "Em"]


def test_stripe_hexatonic():
    members = stripe(BASE_TRIANGLE, StripeKind.HEXATONIC, 2)
    assert chords(members) == ["Ab", "Cm", "C", "Em", "E"]


def test_stripe_octatonic():
    members = stripe(BASE_TRIANGLE, StripeKind.OCTATONIC, 2)
    assert chords(members) == ["A", "Am", "C", "Cm", "Eb"]


def test_stripe_move_alternation():
    expected = {
        StripeKind.FIFTHS: {"L", "R"},
        StripeKind.HEXATONIC: {"P", "L"},
        StripeKind.OCTATONIC: {"P", "R"},
    }
    for seed in (BASE_TRIANGLE, Triangle((2, -1), up=False)):
        for kind, letters in expected.items():
            members = stripe(seed, kind, 4)
            steps = [step_letter(a, b) for a, b in zip(members, members[1:])]
            assert set(steps) == letters
            for a, b in zip(steps, steps[1:]):
                assert a != b


def test_stripe_midpoint_and_length():
    members = stripe(BASE_TRIANGLE, StripeKind.FIFTHS, 5)
    assert len(members) == 11
    assert members[5] == BASE_TRIANGLE
    assert stripe(BASE_TRIANGLE, StripeKind.FIFTHS, 0) == [BASE_TRIANGLE]
    with pytest.raises(ValueError):
        stripe(BASE_TRIANGLE, StripeKind.FIFTHS, -1)


def test_analyze_moonlight_opening():
    report = analyze(["C#m", "A", "D"])
    triangles = [s.triangle for s in report.steps]
    assert triangles == [
        Triangle((-1, 2), up=False),
        Triangle((-1, 1), up=True),
        Triangle((-2, 1), up=True),
    ]
    assert [s.distance for s in report.steps] == [0, 1, 2]
    assert [tuple(format_note(n) for n in s.common_tones) for s in report.steps] == [
        (),
        ("E", "C#"),
        ("A",),
    ]
    assert [s.shares_hexagon for s in report.steps] == [False, True, False]
    assert report.total_distance == 3


def test_analyze_explicit_comma_wins():
    report = analyze(["C", "E[q=0]"])
    assert report.steps[1].triangle == Triangle((4, 0), up=True)
    # without the annotation the nearby instance is chosen instead
    free = analyze(["C", "E"])
    assert free.steps[1].triangle == Triangle((0, 1), up=True)
    assert free.steps[1].distance == 2


def test_analyze_prefers_near_instances():
    # G after C lands one flip pair away, not at some remote comma level
    report = analyze(["C", "G"])
    assert report.steps[1].triangle == Triangle((1, 0), up=True)
    assert report.steps[1].distance == 2


def test_analyze_parsimonious_step():
    report = analyze(["C", "Am"])
    assert report.steps[1].distance == 1
    assert [tuple(format_note(n) for n in s.common_tones) for s in report.steps][1] == (
        "C", "E",
    )
    assert report.steps[1].shares_hexagon


def test_analyze_empty_rejected():
    with pytest.raises(ValueError):
        analyze([])


def test_analyze_first_chord_honors_default_comma():
    report = analyze(["E"], default_comma=0)
    assert report.steps[0].triangle == Triangle((4, 0), up=True)
