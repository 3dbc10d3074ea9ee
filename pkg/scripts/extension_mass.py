#!/usr/bin/env python3
"""How fast do minimal balanced completions soak up a cylinder's mass?

For a seed word, list the completion-mass table (thinned when long) and
report the first completed length whose residual drops below a given
fraction of the cylinder value.
"""

import argparse
from fractions import Fraction

from dyckshift.measures import mass_length_for_residual, minimal_extension_mass, tilde_cylinder_value
from dyckshift.words import Word


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--word", default="a1", help="seed word, e.g. 'a1 a2'")
    ap.add_argument("--m", type=int, default=2)
    ap.add_argument("--max-len", type=int, default=64, help="largest completed length tabulated")
    ap.add_argument("--ratio", default="1/20", help="residual/target threshold, e.g. 1/20")
    ap.add_argument("--rows", type=int, default=20, help="table rows to print")
    args = ap.parse_args()

    w = Word.parse(args.word, args.m)
    target = tilde_cylinder_value(w)
    rows = minimal_extension_mass(w, args.max_len)
    print(f"# word={w.text()!r} cylinder mass {target.text()} ({float(target):.6g})")
    print(f"{'len':>6} {'count':>14} {'partial':>12} {'residual':>12}")
    step = max(1, len(rows) // args.rows)
    shown = rows[::step]
    if rows and rows[-1] not in shown:
        shown.append(rows[-1])
    for r in shown:
        print(
            f"{r.total_len:>6} {r.count:>14} {float(r.partial):>12.6g} {float(r.residual):>12.6g}"
        )

    ratio = Fraction(args.ratio)
    horizon = mass_length_for_residual(w, ratio)
    print(f"# residual first drops below {ratio} of the cylinder mass at length {horizon}")


if __name__ == "__main__":
    main()
