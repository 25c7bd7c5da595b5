"""Command-line front end: ``seq``, ``solve``, ``explore``, ``verify``, ``play``."""

from __future__ import annotations

import argparse
import json
import os
import sys

from .beatty import BeattyPair
from .game_rules import Blocking, BlockingL, Modulo, Shifted, ShiftedChoice, ShiftedRect, describe
from .render import ppm, svg, text_grid
from .solver import extract_sequences, solve
from .verification import explore, run_suite

DEFAULT_MAX_BOUND = 2000
GAMES = ("blocking", "blocking-l", "modulo", "shifted", "shifted-choice", "shifted-rect")
BOARD_SUITES = ("main-theorem", "figures", "all")


class UsageError(Exception):
    pass


def max_bound() -> int:
    raw = os.environ.get("WYTHOFF_MAX_BOUND")
    if raw is None:
        return DEFAULT_MAX_BOUND
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"WYTHOFF_MAX_BOUND must be an integer, got {raw!r}")


def check_bound(bound: int) -> None:
    cap = max_bound()
    if bound < 0:
        raise UsageError("--bound must be non-negative")
    if bound > cap:
        raise UsageError(f"--bound {bound} exceeds the safety cap {cap} (set WYTHOFF_MAX_BOUND)")


def build_variant(args):
    game = args.game
    need = {
        "blocking": ("m", "p"),
        "blocking-l": ("m", "p", "l"),
        "modulo": ("m", "l", "p"),
        "shifted": ("m", "p", "l"),
        "shifted-choice": ("m", "p"),
        "shifted-rect": ("m", "p", "u", "v"),
    }[game]
    missing = [k for k in need if getattr(args, k) is None]
    if missing:
        raise UsageError(f"--game {game} needs " + ", ".join(f"--{k}" for k in missing))
    vals = [getattr(args, k) for k in need]
    cls = {
        "blocking": Blocking,
        "blocking-l": BlockingL,
        "modulo": Modulo,
        "shifted": Shifted,
        "shifted-choice": ShiftedChoice,
        "shifted-rect": ShiftedRect,
    }[game]
    try:
        return cls(*vals)
    except (TypeError, ValueError) as e:
        raise UsageError(str(e))


def _emit(args, data) -> None:
    path = getattr(args, "output", None)
    if isinstance(data, bytes):
        if path:
            with open(path, "wb") as fh:
                fh.write(data)
        else:
            sys.stdout.buffer.write(data)
            sys.stdout.flush()
        return
    if path:
        with open(path, "w", newline="\n", encoding="utf-8") as fh:
            fh.write(data)
    else:
        sys.stdout.write(data)
        sys.stdout.flush()


def _rows_text(header, rows, fmt) -> str:
    if fmt == "tsv":
        lines = ["\t".join(header)] + ["\t".join(map(str, r)) for r in rows]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return json.dumps([dict(zip(header, r)) for r in rows]) + "\n"
    if fmt == "txt":
        cells = [list(header)] + [[str(v) for v in r] for r in rows]
        widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
        return "\n".join(" ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells) + "\n"
    raise UsageError(f"format {fmt!r} is not available for tables")


def cmd_seq(args) -> int:
    if args.m < 1 or args.p < 1 or args.count < 0:
        raise UsageError("--m and --p must be positive and --count non-negative")
    pair = BeattyPair(args.m, args.p)
    a = pair.a_seq(args.count + 1)
    rows = [(n, x, x + args.m * n, args.m * n) for n, x in enumerate(a)]
    _emit(args, _rows_text(("n", "a", "b", "diff"), rows, args.format or "tsv"))
    return 0


def cmd_solve(args) -> int:
    variant = build_variant(args)
    check_bound(args.bound)
    table = solve(variant, args.bound)
    if args.out == "pairs":
        sol = extract_sequences(table)
        rows = [(n, c, d, d - c) for n, (c, d) in enumerate(sol.pairs)]
        text = _rows_text(("n", "c", "d", "diff"), rows, args.format or "tsv")
        if not sol.strictly_increasing:
            sys.stderr.write(f"note: {sol.note}\n")
        _emit(args, text)
        return 0
    fmt = args.format or "txt"
    if fmt == "txt":
        _emit(args, text_grid(table))
    elif fmt == "ppm":
        _emit(args, ppm(table))
    elif fmt == "svg":
        _emit(args, svg(table))
    elif fmt == "json":
        grid = text_grid(table).splitlines()
        _emit(args, json.dumps({"game": describe(variant), "bound": args.bound, "rows": grid}) + "\n")
    else:
        raise UsageError(f"format {fmt!r} is not available for grids")
    return 0


def cmd_explore(args) -> int:
    variant = build_variant(args)
    check_bound(args.bound)
    ex = explore(variant, args.bound)
    fmt = args.format or "txt"
    if fmt == "json":
        _emit(args, json.dumps(ex.to_dict(), sort_keys=True) + "\n")
        return 0
    rows = [(n, c, d, d - c) for n, (c, d) in enumerate(ex.pairs)]
    text = _rows_text(("n", "c", "d", "diff"), rows, "tsv" if fmt == "tsv" else "txt")
    viol = "none" if ex.first_violation is None else str(ex.first_violation)
    text += f"game={describe(variant).replace(' ', '_')} bound={args.bound}\n"
    text += f"arithmetic_progression={'yes' if ex.arithmetic else 'no'} first_violation={viol}\n"
    cv = ",".join(map(str, ex.census_violations[:10])) or "none"
    text += f"p_complementary={'yes' if ex.census_ok else 'no'} census_violations={cv}\n"
    if ex.note:
        text += f"note={ex.note.replace(' ', '_')}\n"
    _emit(args, text)
    return 0


def cmd_verify(args) -> int:
    if args.m < 1 or args.p < 1 or args.bound < 1:
        raise UsageError("--m, --p and --bound must be positive")
    if args.suite in BOARD_SUITES:
        check_bound(args.bound)
    try:
        reports = run_suite(args.suite, args.m, args.p, args.bound)
    except ValueError as e:
        raise UsageError(str(e))
    fmt = args.format or "txt"
    if fmt == "json":
        text = json.dumps([r.to_dict(args.timing) for r in reports], sort_keys=True) + "\n"
    elif fmt == "txt":
        text = "".join(r.to_lines(args.timing) for r in reports)
    else:
        raise UsageError(f"format {fmt!r} is not available for reports")
    _emit(args, text)
    return 0 if all(r.passed for r in reports) else 1


def cmd_play(args) -> int:
    from .play import PlaySession, run

    variant = build_variant(args)
    x, y = args.start
    if x < 0 or y < 0:
        raise UsageError("--start coordinates must be non-negative")
    check_bound(max(x, y))
    if not isinstance(variant, ShiftedChoice) and not _on_board(variant, (x, y)):
        raise UsageError(f"({x},{y}) is not on the board")
    return run(PlaySession(variant, (x, y), engine_first=args.engine_first))


def _on_board(variant, pos):
    from .game_rules import on_board

    return on_board(variant, pos)


def _game_args(sp, bound_default=None):
    sp.add_argument("--game", choices=GAMES, required=True)
    sp.add_argument("--m", type=int)
    sp.add_argument("--p", type=int)
    sp.add_argument("--l", type=int)
    sp.add_argument("--u", type=int)
    sp.add_argument("--v", type=int)
    if bound_default is not False:
        sp.add_argument("--bound", type=int, required=bound_default is None, default=bound_default)


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pwythoff", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("seq", help="table of n, a_n, b_n, b_n - a_n")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--count", type=int, default=16)
    sp.add_argument("--format", choices=("tsv", "json", "txt"))
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_seq)

    sp = sub.add_parser("solve", help="solve a game on [0, bound]^2")
    _game_args(sp)
    sp.add_argument("--out", choices=("pairs", "grid"), default="pairs")
    sp.add_argument("--format", choices=("tsv", "json", "txt", "ppm", "svg"))
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("explore", help="P-pairs with difference and census diagnostics")
    _game_args(sp)
    sp.add_argument("--format", choices=("tsv", "json", "txt"))
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_explore)

    sp = sub.add_parser("verify", help="run verification suites")
    sp.add_argument("--suite", default="all",
                    choices=("main-theorem", "lemmas", "mex", "figures", "appendix", "tables", "all"))
    sp.add_argument("--m", type=int, default=2)
    sp.add_argument("--p", type=int, default=3)
    sp.add_argument("--bound", type=int, default=60,
                    help="board bound, or the index range for lemmas/mex/appendix")
    sp.add_argument("--format", choices=("txt", "json"))
    sp.add_argument("--timing", action="store_true", help="add run times (output no longer reproducible)")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("play", help="play against the engine")
    _game_args(sp, bound_default=False)
    sp.add_argument("--start", type=int, nargs=2, metavar=("X", "Y"), required=True)
    sp.add_argument("--engine-first", action="store_true")
    sp.set_defaults(func=cmd_play)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except UsageError as e:
        parser.prog = f"pwythoff {args.command}"
        sys.stderr.write(f"{parser.prog}: error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
