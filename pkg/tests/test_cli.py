"""End-to-end CLI checks: runs main() in process and reads stdout."""

import json

import pytest

from tonnetz.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0
    return json.loads(out)


def test_reduce(capsys):
    code, out, _ = run(capsys, "reduce", "[-3,2,1]")
    assert code == 0
    assert "word: s2 s3 s2" in out
    assert "window: [-3,2,1]" in out
    assert "length: 3" in out


def test_reduce_json(capsys):
    payload = run_json(capsys, "reduce", "[-3,2,1]")
    assert payload == {"length": 3, "window": [-3, 2, 1], "word": [2, 3, 2]}


def test_reduce_accepts_words_and_identity(capsys):
    code, out, _ = run(capsys, "reduce", "s2 s3 s2")
    assert code == 0
    assert "window: [-3,2,1]" in out
    code, out, _ = run(capsys, "reduce", "e")
    assert code == 0
    assert "word: e" in out
    assert "length: 0" in out


def test_mult(capsys):
    payload = run_json(capsys, "mult", "s3", "s1")
    assert payload == {"length": 2, "window": [0, -2, 2], "word": [3, 1]}


def test_mult_inverse_pair(capsys):
    payload = run_json(capsys, "mult", "[-3,1,2]", "[-2,2,0]")
    assert payload["window"] == [-1, 0, 1]
    assert payload["length"] == 0


def test_classify_reflection(capsys):
    code, out, _ = run(capsys, "classify", "s2 s3 s2")
    assert code == 0
    assert "type: reflection" in out
    assert "order: 2" in out
    assert "center: (0,2,-2)" in out
    assert "center-distance: 2" in out
    assert "flip-distance: 3" in out


def test_classify_translation(capsys):
    code, out, _ = run(capsys, "classify", "s2 s3 s2 s1")
    assert code == 0
    assert "type: translation" in out
    assert "order: infinite" in out


def test_chord_of_window(capsys):
    code, out, _ = run(capsys, "chord", "[2,-3,1]")
    assert code == 0
    assert "chord: C#" in out
    assert "triangle: U(-1,2)" in out


def test_locate(capsys):
    code, out, _ = run(capsys, "locate", "C#m")
    assert code == 0
    assert "window: [-3,2,1]" in out
    assert "triangle: D(-1,2)" in out


def test_locate_chord_and_back(capsys):
    payload = run_json(capsys, "locate", "Ebm[q=-1]")
    code, out, _ = run(capsys, "chord", "[%d,%d,%d]" % tuple(payload["window"]))
    assert code == 0
    assert "chord: Ebm" in out


def test_path(capsys):
    code, out, _ = run(capsys, "path", "C", "G")
    assert code == 0
    assert "plr: RL" in out
    assert "word: s3 s1" in out
    assert "length: 2" in out


def test_path_trivial(capsys):
    code, out, _ = run(capsys, "path", "C", "C")
    assert code == 0
    assert "plr: (empty)" in out
    assert "length: 0" in out


def test_hexagon(capsys):
    code, out, _ = run(capsys, "hexagon", "C")
    assert code == 0
    assert "tone: E" in out
    assert "cycle: C Em E C#m A Am" in out
    assert "coset: t1^0 t2^0" in out


def test_stripe_kinds(capsys):
    code, out, _ = run(capsys, "stripe", "C", "--count", "2")
    assert code == 0
    assert "stripe: F Am C Em G" in out
    code, out, _ = run(capsys, "stripe", "C", "--kind", "hexatonic", "--count", "2")
    assert "stripe: Ab Cm C Em E" in out
    code, out, _ = run(capsys, "stripe", "C", "--kind", "octatonic", "--count", "2")
    assert "stripe: A Am C Cm Eb" in out


def test_analyze_human(capsys):
    code, out, _ = run(capsys, "analyze", "C#m", "A", "D")
    assert code == 0
    assert "C#m[q=2]" in out
    assert "distance=1 common=E,C# hexagon" in out
    assert "distance=2 common=A" in out
    assert "total distance: 3" in out


def test_analyze_json(capsys):
    payload = run_json(capsys, "analyze", "C#m", "A", "D")
    assert payload["total_distance"] == 3
    steps = payload["steps"]
    assert [s["triangle"] for s in steps] == ["D(-1,2)", "U(-1,1)", "U(-2,1)"]
    assert steps[1]["common_tones"] == ["E", "C#"]
    assert steps[1]["shares_hexagon"] is True
    assert steps[2]["shares_hexagon"] is False


def test_riemann_mult(capsys):
    code, out, _ = run(capsys, "riemann", "mult", "Q^1 Z^0", "Q^0 Z^1 W")
    assert code == 0
    assert "element: Q^1 Z^1 W" in out
    assert "order: 2" in out


def test_riemann_quotient(capsys):
    code, out, _ = run(capsys, "riemann", "quotient", "(1,-1,0)")
    assert code == 0
    assert "coset: (1,3,0)" in out
    assert "order: 12" in out


def test_riemann_comma(capsys):
    code, out, _ = run(capsys, "riemann", "comma", "(3,4,0)")
    assert code == 0
    assert "in-comma-subgroup: yes" in out
    code, out, _ = run(capsys, "riemann", "comma", "(1,0,0)")
    assert "in-comma-subgroup: no" in out


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "relations")
    assert code == 0
    assert "checks passed" in out
    assert "FAIL" not in out


def test_verify_json(capsys):
    payload = run_json(capsys, "verify", "--suite", "relations", "--radius", "2")
    assert payload["failed"] == 0
    assert all(c["ok"] for c in payload["checks"])


def test_verify_rejects_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nonsense")
    assert code == 2
    assert "invalid choice" in err


def test_render_deterministic(tmp_path, capsys):
    out1 = tmp_path / "a.svg"
    out2 = tmp_path / "b.svg"
    code, out, _ = run(capsys, "render", "--center", "C", "--out", str(out1))
    assert code == 0
    assert "wrote" in out
    code, _, _ = run(capsys, "render", "--center", "C", "--out", str(out2))
    assert code == 0
    assert out1.read_bytes() == out2.read_bytes()
    assert b"<svg" in out1.read_bytes()


def test_render_with_path_and_labels(tmp_path, capsys):
    out = tmp_path / "c.svg"
    code, _, _ = run(
        capsys,
        "render", "--center", "C", "--radius", "2",
        "--path", "RL", "--labels", "windows", "--out", str(out),
    )
    assert code == 0
    body = out.read_text()
    assert ">-3,1,2<" in body
    assert "marker" in body


def test_render_bad_directory_fails_cleanly(tmp_path, capsys):
    target = tmp_path / "missing" / "x.svg"
    code, _, err = run(capsys, "render", "--center", "C", "--out", str(target))
    assert code == 1
    assert "error:" in err


def test_stdout_reruns_identical(capsys):
    _, first, _ = run(capsys, "analyze", "C", "Am", "F", "G")
    _, second, _ = run(capsys, "analyze", "C", "Am", "F", "G")
    assert first == second


def test_domain_error_exit_code(capsys):
    code, _, err = run(capsys, "locate", "H")
    assert code == 1
    assert "error:" in err


def test_usage_error_exit_code(capsys):
    code, _, _ = run(capsys, "bogus")
    assert code == 2
    code, _, _ = run(capsys, "path", "C")
    assert code == 2


def test_help_exits_zero(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
    assert "tonnetz" in out


def test_default_comma_env(monkeypatch, capsys):
    monkeypatch.setenv("TONNETZ_DEFAULT_COMMA", "0")
    code, out, _ = run(capsys, "locate", "C#m")
    assert code == 0
    assert "window: [5,-14,9]" in out
    assert "triangle: D(7,0)" in out


def test_default_comma_env_invalid(monkeypatch, capsys):
    monkeypatch.setenv("TONNETZ_DEFAULT_COMMA", "sharp")
    code, _, err = run(capsys, "locate", "C")
    assert code == 1
    assert "TONNETZ_DEFAULT_COMMA" in err
