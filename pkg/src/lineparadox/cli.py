"""Command-line surface.

Subcommands: classify, verify, plot-fn, plot-cayley, connect, enumerate,
line-strip.  Windows are written ``lo..hi`` and are inclusive of both interval
indices, except that plot-fn draws the pieces for n in [lo, hi).  Outputs go
to stdout, or atomically (write-temp-then-rename) to --out.  Identical flags
produce byte-identical output.  Exit status: 0 success (and verification
passed), 1 verification failed, 2 usage or input error, 3 word budget
exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
import tempfile

from .freegroup import (
    OMEGA,
    RankError,
    Word,
    WordSyntaxError,
    enumerate_words,
    format_word,
    parse_word,
)
from .labeling import UnsupportedRankError, VertexLabeling, label_from_position
from .paradox import BudgetExceededError, ParadoxInstance, verification_summary
from .permutation import CycleError, TreePermutation, parse_cycles
from .render import cayley_ball_dot, function_graph_svg, line_strip_svg
from .rigid import PiecewiseRigidMap

_WINDOW_RE = re.compile(r"^(-?\d+)\.\.(-?\d+)$")


def _rank(text: str):
    if text == "omega":
        return OMEGA
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"rank must be an integer >= 2 or 'omega', got {text!r}")
    if k < 2:
        raise argparse.ArgumentTypeError(f"rank must be >= 2, got {k}")
    return k


def _window(text: str) -> tuple[int, int]:
    m = _WINDOW_RE.match(text)
    if not m:
        raise argparse.ArgumentTypeError(f"window must look like lo..hi, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise argparse.ArgumentTypeError(f"window needs lo <= hi, got {text!r}")
    return lo, hi


def _add_common(p: argparse.ArgumentParser, window: bool = False) -> None:
    p.add_argument("--k", type=_rank, default=2, metavar="K",
                   help="rank: an integer >= 2, or 'omega' (default 2)")
    p.add_argument("--J", type=int, default=10, metavar="J",
                   help="pair limit for rank omega sweeps (default 10)")
    if window:
        p.add_argument("--window", type=_window, required=True, metavar="LO..HI")
    p.add_argument("--out", metavar="PATH", help="write output atomically to PATH instead of stdout")
    p.add_argument("--seed", type=int, default=0,
                   help="seed reserved for sampled audits (default 0)")


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(out)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".lineparadox-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, out)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _cmd_classify(args) -> int:
    inst = ParadoxInstance(args.k)
    lo, hi = args.window
    rows = []
    for n in range(lo, hi + 1):
        word = inst.labeling.word_of_label(n)
        rows.append([n, format_word(word), inst.classify_interval(n).label(args.k)])
    if args.format == "json":
        text = _json_text([{"n": r[0], "word": r[1], "class": r[2]} for r in rows])
    else:
        text = _csv_text(["n", "word", "class"], rows)
    _emit(text, args.out)
    return 0


def _cmd_verify(args) -> int:
    inst = ParadoxInstance(args.k)
    lo, hi = args.window
    summary = verification_summary(
        inst, lo, hi,
        pair_limit=args.J if args.k == OMEGA else None,
        free_check=args.free_check,
        word_budget=args.budget,
    )
    if args.format == "csv":
        text = _csv_text(["class", "count"], [[name, c] for name, c in summary["counts"].items()])
    else:
        text = _json_text(summary)
    _emit(text, args.out)
    return 0 if summary["pass"] else 1


def _cmd_plot_fn(args) -> int:
    lo, hi = args.window
    if args.perm is not None:
        perm = parse_cycles(args.perm)
    else:
        labeling = VertexLabeling(args.k)
        perm = TreePermutation(parse_word(args.word, args.k), labeling)
    pieces = PiecewiseRigidMap(perm).pieces_in_window(lo, hi)
    _emit(function_graph_svg(pieces, lo, hi), args.out)
    return 0


def _cmd_plot_cayley(args) -> int:
    ball = VertexLabeling(args.k).ball(args.radius)
    _emit(cayley_ball_dot(ball), args.out)
    return 0


def _cmd_connect(args) -> int:
    labeling = VertexLabeling(args.k)
    u = labeling.connecting_word(args.m, args.n)
    lines = [format_word(u)]
    status = 0
    if args.check:
        image = TreePermutation(u, labeling).apply(args.m)
        if image == args.n:
            lines.append(f"check: {args.m} -> {image} ok")
        else:
            lines.append(f"check: {args.m} -> {image} MISMATCH (expected {args.n})")
            status = 1
    _emit("\n".join(lines) + "\n", args.out)
    return status


def _cmd_enumerate(args) -> int:
    if args.count < 1:
        raise ValueError(f"--count must be >= 1, got {args.count}")
    words = enumerate_words(args.k, args.count)
    rows = [
        [label_from_position(pos), pos, format_word(w), len(w)]
        for pos, w in enumerate(words)
    ]
    _emit(_csv_text(["label", "position", "word", "length"], rows), args.out)
    return 0


def _cmd_line_strip(args) -> int:
    inst = ParadoxInstance(args.k)
    lo, hi = args.window
    limit = args.J if args.k == OMEGA else None
    cells = []
    for n in range(lo, hi + 1):
        cls = inst.classify_interval(n)
        if limit is not None and cls.pair > limit:
            cells.append((n, None))
        else:
            cells.append((n, cls))
    _emit(line_strip_svg(cells, args.k), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lineparadox",
        description="Partition the line into free-group classes and verify its rigid reassembly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="class of each unit interval in the window")
    _add_common(p, window=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("verify", help="partition + reassembly verification report")
    _add_common(p, window=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--free-check", type=int, metavar="L", dest="free_check",
                   help="also certify fixed-point freeness for words of length <= L")
    p.add_argument("--budget", type=int, default=1_000_000,
                   help="word budget for --free-check (default 1000000)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("plot-fn", help="SVG graph of a piecewise rigid map on [lo, hi)")
    _add_common(p, window=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--perm", metavar="CYCLES", help="cycle notation, e.g. \"(012534)\"")
    group.add_argument("--word", metavar="WORD", help="reduced word, e.g. \"x1 X2\"")
    p.add_argument("--format", choices=["svg"], default="svg")
    p.set_defaults(func=_cmd_plot_fn)

    p = sub.add_parser("plot-cayley", help="DOT graph of the Cayley ball of a given radius")
    _add_common(p)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--format", choices=["dot"], default="dot")
    p.set_defaults(func=_cmd_plot_cayley)

    p = sub.add_parser("connect", help="the unique word moving label M to label N")
    _add_common(p)
    p.add_argument("m", type=int, metavar="M")
    p.add_argument("n", type=int, metavar="N")
    p.add_argument("--check", action="store_true", help="re-apply the word and confirm")
    p.set_defaults(func=_cmd_connect)

    p = sub.add_parser("enumerate", help="first COUNT words of the canonical enumeration")
    _add_common(p)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--format", choices=["csv"], default="csv")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("line-strip", help="SVG strip coloring each interval by class")
    _add_common(p, window=True)
    p.add_argument("--format", choices=["svg"], default="svg")
    p.set_defaults(func=_cmd_line_strip)

    return parser


def _absorb_window_values(argv: list[str]) -> list[str]:
    # argparse reads a space-separated "-2..8" as an option, not a value;
    # folding it into --window=-2..8 keeps the documented syntax working.
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--window":
            val = next(it, None)
            out.append(tok if val is None else f"--window={val}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(_absorb_window_values(list(argv)))
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (WordSyntaxError, CycleError, UnsupportedRankError, RankError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())
