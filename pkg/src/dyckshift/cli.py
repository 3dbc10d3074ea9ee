"""Command-line interface.

Exit codes: 0 on success, 1 when ``verify`` finds failing checks, 2 on
usage, parse, or domain errors.  Reports that involve randomness print the
seed they used (default seed: 7).  With ``--json``, output is a single JSON
document with sorted keys — byte-identical across runs for identical
arguments and seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import __version__
from .coding import SAMPLERS
from .measures import (
    balanced_cylinder_value,
    entropy_report,
    minimal_extension_mass,
    tilde_cylinder_value,
)
from .verification import DEFAULT_SEED, SUITES, run_suite, tap_report
from .words import (
    AlphabetParams,
    DyckError,
    Word,
    count_balanced,
    count_language,
    is_balanced,
    minimal_balanced_extensions,
    reduce_word,
)


def _window(text: str) -> tuple[int, int]:
    lo_text, sep, hi_text = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError(f"window must look like LO:HI, got {text!r}")
    try:
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"window bounds must be integers, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"window {text!r} is empty")
    return lo, hi


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def _add_alphabet_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--m", type=int, default=2, help="number of bracket types (default 2)")
    sub.add_argument(
        "--allow-m1",
        action="store_true",
        help="permit the degenerate single-type alphabet",
    )


def _alphabet(args: argparse.Namespace) -> int:
    return AlphabetParams(args.m, allow_single_type=args.allow_m1).m


def _cmd_reduce(args: argparse.Namespace) -> int:
    m = _alphabet(args)
    w = Word.parse(args.word, m)
    nf = reduce_word(w)
    if args.json:
        _emit_json(
            {
                "command": "reduce",
                "m": m,
                "word": w.text(),
                "normal_form": nf.text(),
                "is_zero": nf.is_zero,
                "is_balanced": nf.is_identity,
            }
        )
    else:
        print(nf.text())
    return 0


def _cmd_member(args: argparse.Namespace) -> int:
    m = _alphabet(args)
    w = Word.parse(args.word, m)
    member = not reduce_word(w).is_zero
    if args.json:
        _emit_json({"command": "member", "m": m, "word": w.text(), "member": member})
    else:
        print("true" if member else "false")
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    m = _alphabet(args)
    if args.length is not None:
        value = count_language(args.length, m)
        what = {"length": args.length}
    else:
        value = count_balanced(args.balanced, m)
        what = {"balanced_pairs": args.balanced}
    if args.json:
        _emit_json({"command": "count", "m": m, "count": value, **what})
    else:
        print(value)
    return 0


def _cmd_measure(args: argparse.Namespace) -> int:
    if args.measure != "tilde":
        print(
            f"error: measure {args.measure!r} has no exact cylinder formula here; "
            f"estimate it empirically via: dyckshift sample --measure {args.measure}",
            file=sys.stderr,
        )
        return 2
    m = _alphabet(args)
    w = Word.parse(args.word, m)
    value = tilde_cylinder_value(w, args.position)
    balanced = is_balanced(w) and len(w) > 0
    if args.json:
        payload = {
            "command": "measure",
            "m": m,
            "measure": "tilde",
            "word": w.text(),
            "position": args.position,
            "value": value.text(),
            "decimal": float(value),
            "balanced": balanced,
        }
        if balanced:
            payload["balanced_form"] = f"(1/(2*sqrt({m})))^{len(w)}"
        _emit_json(payload)
    else:
        print(value.text())
        print(f"# ~ {float(value):.10g}")
        if balanced:
            print(f"# balanced: equals (1/(2*sqrt({m})))^{len(w)}")
    return 0


def _cmd_sample(args: argparse.Namespace) -> int:
    m = _alphabet(args)
    lo, hi = args.window
    sampler = SAMPLERS[args.measure]
    samples = list(
        sampler(m, lo, hi, seed=args.seed, count=args.count, max_extension=args.max_extension)
    )
    truncated = sum(1 for x in samples if x.truncated)
    if args.json:
        _emit_json(
            {
                "command": "sample",
                "measure": args.measure,
                "m": m,
                "window": [lo, hi],
                "seed": args.seed,
                "count": args.count,
                "max_extension": args.max_extension,
                "truncated": truncated,
                "samples": [
                    {"lo": x.lo, "hi": x.hi, "word": x.text(), "truncated": x.truncated}
                    for x in samples
                ],
            }
        )
    else:
        print(
            f"# sampler={args.measure} m={m} window={lo}:{hi} seed={args.seed} "
            f"count={args.count} max-extension={args.max_extension}"
        )
        print(f"# truncated {truncated} of {args.count}")
        for x in samples:
            line = f"{x.lo} {x.hi} {x.text()}"
            print(line + " T" if x.truncated else line)
    return 0


def _cmd_entropy(args: argparse.Namespace) -> int:
    m = _alphabet(args)
    if args.n < 0:
        print("error: --n must be >= 0", file=sys.stderr)
        return 2
    if args.json:
        _emit_json(entropy_report(args.n, m).json_dict())
        return 0
    reports = [entropy_report(n, m) for n in range(args.n + 1)]
    if args.csv:
        import csv

        writer = csv.writer(sys.stdout)
        writer.writerow(["n", "H_log2", "H_logm", "h_log2", "h_logm", "h_nats", "p_nonneg"])
        for r in reports:
            writer.writerow(
                [r.n, r.block.log2_coeff, r.block.logm_coeff, r.step.log2_coeff,
                 r.step.logm_coeff, f"{r.step.nats(m):.6f}", r.p_nonneg]
            )
        return 0
    print(f"# m={m}  H_n and h_n exact as p*log2 + q*log{m}; nats rounded")
    print(f"{'n':>3} {'H_n (nats)':>12} {'h_n (nats)':>12} {'p_nonneg':>12}")
    for r in reports:
        print(
            f"{r.n:>3} {r.block.nats(m):>12.6f} {r.step.nats(m):>12.6f} "
            f"{str(r.p_nonneg):>12}"
        )
    return 0


def _cmd_extensions(args: argparse.Namespace) -> int:
    m = _alphabet(args)
    w = Word.parse(args.word, m)
    max_len = args.max_len if args.max_len is not None else len(w) + 8
    if args.mass:
        rows = minimal_extension_mass(w, max_len, method=args.method)
        target = tilde_cylinder_value(w).value
        if args.json:
            _emit_json(
                {
                    "command": "extensions",
                    "m": m,
                    "word": w.text(),
                    "max_len": max_len,
                    "cylinder_mass": f"{target.numerator}/{target.denominator}",
                    "rows": [
                        {
                            "total_len": r.total_len,
                            "count": r.count,
                            "added": str(r.added),
                            "partial": str(r.partial),
                            "residual": str(r.residual),
                        }
                        for r in rows
                    ],
                }
            )
        else:
            print(f"# word={w.text()!r} m={m} cylinder mass {target} — completion mass by length")
            print(f"{'len':>5} {'count':>10} {'added':>16} {'partial':>20} {'residual':>20}")
            for r in rows:
                print(
                    f"{r.total_len:>5} {r.count:>10} {str(r.added):>16} "
                    f"{str(r.partial):>20} {str(r.residual):>20}"
                )
        return 0
    pairs = []
    truncated_listing = False
    for left, right in minimal_balanced_extensions(w, max_len):
        if len(pairs) >= args.limit:
            truncated_listing = True
            break
        pairs.append((left, right))
    if args.json:
        _emit_json(
            {
                "command": "extensions",
                "m": m,
                "word": w.text(),
                "max_len": max_len,
                "limit": args.limit,
                "listing_truncated": truncated_listing,
                "pairs": [{"left": l.text(), "right": r.text()} for l, r in pairs],
            }
        )
    else:
        print(f"# word={w.text()!r} m={m} minimal balanced completions up to length {max_len}")
        for left, right in pairs:
            l_text = left.text() or "Λ"
            r_text = right.text() or "Λ"
            print(f"{l_text} | {r_text}")
        if truncated_listing:
            print(f"# listing capped at {args.limit}; raise --limit for more")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.m != 2:
        print(
            "error: the verification suite pins m=2 (with m=3 sub-checks where stated)",
            file=sys.stderr,
        )
        return 2
    results = run_suite(args.suite, args.seed)
    failed = sum(1 for r in results if not r.ok)
    if args.json:
        _emit_json(
            {
                "command": "verify",
                "suite": args.suite,
                "m": args.m,
                "seed": args.seed,
                "failed": failed,
                "results": [r.json_dict() for r in results],
            }
        )
    else:
        print(f"# suite={args.suite} m={args.m} seed={args.seed}")
        for line in tap_report(results):
            print(line)
    return 1 if failed else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dyckshift",
        description="Bracket-matching subshifts: exact measures, entropy, and samplers.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("reduce", help="reduce a word to its normal form")
    p.add_argument("word", nargs="?", default="", help="tokens like 'a1 b2' (empty allowed)")
    _add_alphabet_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_reduce)

    p = commands.add_parser("member", help="test language membership")
    p.add_argument("word", nargs="?", default="")
    _add_alphabet_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_member)

    p = commands.add_parser("count", help="count language or balanced words")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--length", type=int, help="count language words of this length")
    group.add_argument("--balanced", type=int, help="count balanced words with this many pairs")
    _add_alphabet_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_count)

    p = commands.add_parser("measure", help="exact cylinder mass of a word")
    p.add_argument("word", nargs="?", default="")
    p.add_argument("--position", type=int, default=0, help="cylinder start coordinate")
    p.add_argument(
        "--measure",
        choices=("tilde", "plus", "minus"),
        default="tilde",
        help="only 'tilde' has an exact formula; others point to `sample`",
    )
    _add_alphabet_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_measure)

    p = commands.add_parser("sample", help="draw seeded windows from a sampler")
    p.add_argument("--measure", choices=tuple(SAMPLERS), default="tilde")
    p.add_argument("--window", type=_window, required=True, metavar="LO:HI")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"default {DEFAULT_SEED}")
    p.add_argument("--max-extension", type=int, default=10_000)
    _add_alphabet_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_sample)

    p = commands.add_parser("entropy", help="exact block/step entropy table")
    p.add_argument("--n", type=int, required=True, help="largest block length")
    p.add_argument("--csv", action="store_true", help="emit the table as CSV")
    _add_alphabet_flags(p)
    p.add_argument("--json", action="store_true", help="emit the single row for --n")
    p.set_defaults(func=_cmd_entropy)

    p = commands.add_parser("extensions", help="minimal balanced completions of a word")
    p.add_argument("word", nargs="?", default="")
    p.add_argument("--max-len", type=int, help="largest completed length (default |word|+8)")
    p.add_argument("--mass", action="store_true", help="show the completion-mass table")
    p.add_argument(
        "--method",
        choices=("count", "enumerate"),
        default="count",
        help="mass accounting route (the two must agree; see the tests)",
    )
    p.add_argument("--limit", type=int, default=50, help="cap on listed pairs")
    _add_alphabet_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_extensions)

    p = commands.add_parser("verify", help="run the verification suite")
    p.add_argument("--suite", choices=tuple(SUITES), default="all")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"default {DEFAULT_SEED}")
    p.add_argument("--m", type=int, default=2, help="must be 2; the suite pins its scopes")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    return parser


def _fuse_window_flag(argv: Sequence[str]) -> list[str]:
    # argparse reads "-3:3" as an option flag; fold the window value into
    # --window=... so negative bounds work the obvious way.
    out: list[str] = []
    fuse_next = False
    for token in argv:
        if fuse_next:
            out[-1] = f"--window={token}"
            fuse_next = False
        elif token == "--window":
            out.append(token)
            fuse_next = True
        else:
            out.append(token)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    raw = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_fuse_window_flag(raw))
    except SystemExit as exc:  # argparse handles --help and usage errors
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (DyckError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
