"""Command-line interface.

Every subcommand accepts --json for a single machine-readable object on
stdout; human output is stable "key: value" lines.  Exit codes: 0 on
success, 1 on a domain error (bad element, unknown chord, failed
verification), 2 on a usage error.

Element arguments are disambiguated by their first character: '[' opens
a window, 's' or 'e' starts a generator word, anything else parses as a
chord symbol.  The TONNETZ_DEFAULT_COMMA environment variable, when
set, overrides the default comma band of unannotated chord symbols.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .core import (
    AffinePermutation,
    format_window,
    format_word,
    from_word,
    parse_window,
    parse_word,
)
from .lattice import (
    BASE_TRIANGLE,
    format_triangle,
    gallery_distance_bfs,
    perm_of,
    triangle_of,
)
from .pitch import (
    ChordParseError,
    format_chord,
    format_note,
    name_triangle,
    parse_chord,
)
from .progressions import (
    StripeKind,
    analyze,
    hexagon_cycle,
    plr_path,
    stripe,
)
from .render import LabelMode, RenderSpec, render_svg
from .riemann import (
    format_p,
    format_r,
    in_comma_subgroup,
    parse_p,
    parse_r,
    project_d12,
    d12_order,
    r_compose,
    r_order,
)
from .subgroups import format_translation_vector, hexagon_of
from .verify import SUITES, run_all, run_suite


def _default_comma() -> int | None:
    raw = os.environ.get("TONNETZ_DEFAULT_COMMA")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"TONNETZ_DEFAULT_COMMA must be an integer, got {raw!r}") from None


def parse_element(text: str) -> AffinePermutation:
    """Window, generator word, or chord symbol, by leading character."""
    s = text.strip()
    if not s:
        raise ValueError("empty element")
    if s[0] == "[":
        return parse_window(s)
    if s[0] in "se":
        return from_word(parse_word(s))
    return perm_of(parse_chord(s, _default_comma())[1])


def _emit(args: argparse.Namespace, payload: dict, human: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in human:
            print(line)


def _window_payload(f: AffinePermutation) -> dict:
    return {
        "window": list(f.window),
        "word": list(f.reduced_word()),
        "length": f.length(),
    }


def cmd_reduce(args: argparse.Namespace) -> int:
    f = parse_element(args.element)
    _emit(
        args,
        _window_payload(f),
        [
            f"word: {format_word(f.reduced_word())}",
            f"window: {format_window(f)}",
            f"length: {f.length()}",
        ],
    )
    return 0


def cmd_mult(args: argparse.Namespace) -> int:
    f = parse_element(args.left) * parse_element(args.right)
    _emit(
        args,
        _window_payload(f),
        [f"window: {format_window(f)}", f"word: {format_word(f.reduced_word())}"],
    )
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    f = parse_element(args.element)
    order = f.order()
    coords = f.center_coords()
    oracle = gallery_distance_bfs(BASE_TRIANGLE, triangle_of(f))
    payload = {
        "type": f.classify().value,
        "order": order,
        "center": list(coords),
        "center_distance": f.center_distance(),
        "flip_distance": oracle,
        "window": list(f.window),
    }
    _emit(
        args,
        payload,
        [
            f"type: {f.classify().value}",
            f"order: {order if order is not None else 'infinite'}",
            f"center: ({coords[0]},{coords[1]},{coords[2]})",
            f"center-distance: {f.center_distance()}",
            f"flip-distance: {oracle}",
        ],
    )
    return 0


def cmd_chord(args: argparse.Namespace) -> int:
    f = parse_element(args.element)
    t = triangle_of(f)
    chord = name_triangle(t)
    payload = {
        "chord": format_chord(chord),
        "comma": chord.root.comma,
        "triangle": format_triangle(t),
    }
    _emit(args, payload, [f"chord: {format_chord(chord)}", f"triangle: {format_triangle(t)}"])
    return 0


def cmd_locate(args: argparse.Namespace) -> int:
    _, t = parse_chord(args.chord, _default_comma())
    f = perm_of(t)
    payload = {
        "window": list(f.window),
        "word": list(f.reduced_word()),
        "triangle": format_triangle(t),
    }
    _emit(
        args,
        payload,
        [f"window: {format_window(f)}", f"triangle: {format_triangle(t)}"],
    )
    return 0


def cmd_path(args: argparse.Namespace) -> int:
    comma = _default_comma()
    _, start = parse_chord(args.start, comma)
    _, goal = parse_chord(args.goal, comma)
    word = plr_path(start, goal)
    g = perm_of(start).inverse() * perm_of(goal)
    payload = {
        "plr": word,
        "word": list(g.reduced_word()),
        "length": len(word),
    }
    _emit(
        args,
        payload,
        [
            f"plr: {word if word else '(empty)'}",
            f"word: {format_word(g.reduced_word())}",
            f"length: {len(word)}",
        ],
    )
    return 0


def cmd_hexagon(args: argparse.Namespace) -> int:
    _, t = parse_chord(args.chord, _default_comma())
    cyc = hexagon_cycle(t)
    coset = hexagon_of(perm_of(t))
    chords = [format_chord(c) for c in cyc.chords]
    payload = {
        "tone": format_note(cyc.common_tone),
        "chords": chords,
        "coset": format_translation_vector(coset.base),
    }
    _emit(
        args,
        payload,
        [
            f"tone: {format_note(cyc.common_tone)}",
            f"cycle: {' '.join(chords)}",
            f"coset: {format_translation_vector(coset.base)}",
        ],
    )
    return 0


def cmd_stripe(args: argparse.Namespace) -> int:
    _, t = parse_chord(args.chord, _default_comma())
    kind = StripeKind(args.kind)
    chain = stripe(t, kind, args.count)
    chords = [format_chord(name_triangle(u)) for u in chain]
    payload = {
        "kind": kind.value,
        "positions": list(range(-args.count, args.count + 1)),
        "chords": chords,
        "triangles": [format_triangle(u) for u in chain],
    }
    _emit(args, payload, [f"stripe: {' '.join(chords)}"])
    return 0


def cmd_riemann(args: argparse.Namespace) -> int:
    if args.riemann_cmd == "mult":
        x = r_compose(parse_r(args.left), parse_r(args.right))
        order = r_order(x)
        payload = {
            "element": format_r(x),
            "wechsel": x.wechsel,
            "quint": x.quint,
            "terz": x.terz,
            "order": order,
        }
        _emit(
            args,
            payload,
            [
                f"element: {format_r(x)}",
                f"order: {order if order is not None else 'infinite'}",
            ],
        )
        return 0
    if args.riemann_cmd == "quotient":
        x = parse_p(args.element)
        coset = project_d12(x)
        payload = {
            "coset": format_p(coset),
            "order": d12_order(coset),
        }
        _emit(
            args,
            payload,
            [f"coset: {format_p(coset)}", f"order: {d12_order(coset)}"],
        )
        return 0
    x = parse_p(args.element)
    member = in_comma_subgroup(x)
    payload = {"element": format_p(x), "in_comma_subgroup": member}
    _emit(args, payload, [f"in-comma-subgroup: {'yes' if member else 'no'}"])
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.suite == "all":
        rows = run_all(args.radius)
    else:
        rows = [(args.suite, r) for r in run_suite(args.suite, args.radius)]
    failed = sum(1 for _, r in rows if not r.ok)
    if args.json:
        payload = {
            "radius": args.radius,
            "checks": [
                {"suite": name, "check": r.name, "ok": r.ok, "detail": r.detail}
                for name, r in rows
            ],
            "failed": failed,
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        width = max(len(name) for name, _ in rows)
        for name, r in rows:
            mark = "ok " if r.ok else "FAIL"
            detail = f"  ({r.detail})" if r.detail else ""
            print(f"{mark} {name:<{width}}  {r.name}{detail}")
        print(f"{len(rows) - failed}/{len(rows)} checks passed")
    return 1 if failed else 0


def cmd_render(args: argparse.Namespace) -> int:
    comma = _default_comma()
    _, center = parse_chord(args.center, comma)
    highlights = [(center, "center")]
    spec = RenderSpec(
        center=center,
        radius=args.radius,
        highlights=tuple(highlights),
        path=args.path,
        label_mode=LabelMode(args.labels),
    )
    doc = render_svg(spec)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(doc)
    payload = {"out": args.out, "bytes": len(doc.encode("utf-8"))}
    _emit(args, payload, [f"wrote {args.out} ({payload['bytes']} bytes)"])
    return 0


def cmd_analyze(args: argparse.Namespace) -> int:
    report = analyze(args.chords, _default_comma())
    if args.json:
        payload = {
            "total_distance": report.total_distance,
            "steps": [
                {
                    "symbol": s.symbol,
                    "chord": format_chord(s.chord, with_comma=True),
                    "triangle": format_triangle(s.triangle),
                    "distance": s.distance,
                    "common_tones": [format_note(n) for n in s.common_tones],
                    "shares_hexagon": s.shares_hexagon,
                }
                for s in report.steps
            ],
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        for k, s in enumerate(report.steps):
            line = (
                f"{format_chord(s.chord, with_comma=True):<12} "
                f"{format_triangle(s.triangle):<9}"
            )
            if k > 0:
                tones = ",".join(format_note(n) for n in s.common_tones) or "-"
                hexagon = " hexagon" if s.shares_hexagon else ""
                line += f" distance={s.distance} common={tones}{hexagon}"
            print(line)
        print(f"total distance: {report.total_distance}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tonnetz",
        description="Exact arithmetic on the infinite triadic Tonnetz.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit one JSON object")
        p.set_defaults(func=fn)
        return p

    p = add("reduce", cmd_reduce, "canonical reduced word, window and length")
    p.add_argument("element")

    p = add("mult", cmd_mult, "product of two elements")
    p.add_argument("left")
    p.add_argument("right")

    p = add("classify", cmd_classify, "element type, order and distances")
    p.add_argument("element")

    p = add("chord", cmd_chord, "chord name of an element's triangle")
    p.add_argument("element")

    p = add("locate", cmd_locate, "window and triangle of a chord")
    p.add_argument("chord")

    p = add("path", cmd_path, "shortest PLR word between two chords")
    p.add_argument("start")
    p.add_argument("goal")

    p = add("hexagon", cmd_hexagon, "six-chord cycle around the common tone")
    p.add_argument("chord")

    p = add("stripe", cmd_stripe, "stripe of chords through a seed")
    p.add_argument("chord")
    p.add_argument("--kind", choices=[k.value for k in StripeKind], default="fifths")
    p.add_argument("--count", type=int, default=3)

    p = add("analyze", cmd_analyze, "place a chord progression on the lattice")
    p.add_argument("chords", nargs="+")

    riemann_p = sub.add_parser("riemann", help="Schritt-Wechsel and point-reflection groups")
    riemann_sub = riemann_p.add_subparsers(dest="riemann_cmd", required=True)
    p = riemann_sub.add_parser("mult", help="product of two Schritt-Wechsel elements")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_riemann)
    p = riemann_sub.add_parser("quotient", help="image in the 24-element quotient")
    p.add_argument("element")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_riemann)
    p = riemann_sub.add_parser("comma", help="membership in the comma subgroup")
    p.add_argument("element")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_riemann)

    p = add("verify", cmd_verify, "run invariant suites")
    p.add_argument("--suite", default="all", choices=["all"] + sorted(SUITES))
    p.add_argument("--radius", type=int, default=4)

    p = add("render", cmd_render, "write a deterministic SVG diagram")
    p.add_argument("--center", required=True)
    p.add_argument("--radius", type=int, default=2)
    p.add_argument("--out", required=True)
    p.add_argument("--path", default="")
    p.add_argument("--labels", choices=[m.value for m in LabelMode], default="notes")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code in (0, None):
            return 0
        return 2
    try:
        return args.func(args)
    except ChordParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
