"""``doodle`` command line.

Exit status: 0 success, 1 domain failure (axiom violation, invariance
counterexample, unavailable cover), 2 input error.
"""
from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path

from . import __version__
from .data import example_diagrams, example_switches, load_diagram, resolve
from .gauss import GaussCode, GaussCodeError, parse
from .presentation import CapExceeded, col, dcol, dfds, fds, list_colorings
from .switch import (FiniteDoodleSwitch, InvalidSwitchError, SwitchInputError,
                     enumerate_switches, format_switch, load_switch, parse_switch,
                     verify_axioms)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
DEFAULT_SEED = 1


class InputError(Exception):
    pass


def _diagram(arg: str) -> tuple[str, GaussCode]:
    """A file path, then a shipped asset name, then a literal code."""
    path = resolve(arg, ".gauss")
    try:
        if path is not None:
            return path.stem, load_diagram(path)
        return arg, parse(arg)
    except GaussCodeError as exc:
        raise InputError(f"{arg}: {exc}") from None


def _switch(arg: str) -> FiniteDoodleSwitch:
    path = resolve(arg, ".switch")
    if path is None:
        raise InputError(f"no switch file or asset named {arg!r}")
    try:
        return load_switch(path)
    except (SwitchInputError, InvalidSwitchError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _switches(args, default_examples: bool = False) -> list[FiniteDoodleSwitch]:
    if args.switch:
        return [_switch(s) for s in args.switch]
    if default_examples:
        return list(example_switches().values())
    raise InputError("at least one --switch is required")


def _emit_csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


# -- subcommands ---------------------------------------------------------------

def cmd_check_switch(args) -> int:
    try:
        table = parse_switch(Path(resolve(args.file, ".switch") or args.file).read_text())
    except OSError as exc:
        raise InputError(str(exc)) from None
    except SwitchInputError as exc:
        raise InputError(f"{args.file}: {exc}") from None
    report = verify_axioms(table)
    print(report.describe())
    return EXIT_OK if report.valid else EXIT_FAIL


def cmd_enum(args) -> int:
    if args.n < 1:
        raise InputError("order must be positive")
    found = enumerate_switches(args.n, up_to_iso=args.up_to_iso)
    print(f"# {len(found)} switch(es) of order {args.n}"
          + (" up to isomorphism" if args.up_to_iso else ""))
    for T in found:
        print(f"# {T.name}")
        print(format_switch(T).rstrip("\n"))
    return EXIT_OK


def _count_cmd(args, fn, label: str) -> int:
    name, D = _diagram(args.diagram)
    switches = _switches(args)
    counts = [fn(D, T) for T in switches]
    if args.csv:
        sys.stdout.write(_emit_csv([["switch", label]] + [[T.name, c] for T, c in zip(switches, counts)]))
    else:
        for c in counts:
            print(c)
    return EXIT_OK


def cmd_color(args) -> int:
    return _count_cmd(args, col, "col")


def cmd_dcolor(args) -> int:
    return _count_cmd(args, dcol, "dcol")


def cmd_list_colorings(args) -> int:
    _, D = _diagram(args.diagram)
    (T,) = _switches(args)[:1]
    P = dfds(D) if args.doubled else fds(D)
    try:
        cols = list_colorings(P, T, cap=args.cap)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    rows = [list(P.generators)] + [list(c.values(P.generators)) for c in cols]
    sys.stdout.write(_emit_csv(rows))
    return EXIT_OK


def cmd_table(args) -> int:
    diagrams = [_diagram(d) for d in args.diagrams]
    switches = _switches(args, default_examples=True)
    rows = [["invariant"] + [name for name, _ in diagrams]]
    if diagrams:
        for T in switches:
            rows.append([f"col({T.name})"] + [col(D, T) for _, D in diagrams])
        for T in switches:
            rows.append([f"dcol({T.name})"] + [dcol(D, T) for _, D in diagrams])
    sys.stdout.write(_emit_csv(rows))
    return EXIT_OK


def trial_seed(seed: int, trial: int) -> int:
    """Walk seed of one fuzz trial; ``doodle fuzz --seed S`` trial ``i`` replays from it."""
    return seed * 1_000_003 + trial


def cmd_fuzz(args) -> int:
    from .moves import random_walk

    if args.trials < 0 or args.steps < 0:
        raise InputError("--trials and --steps must be non-negative")
    if args.diagrams:
        diagrams = [_diagram(d) for d in args.diagrams]
    else:
        diagrams = list(example_diagrams().items())
    switches = _switches(args, default_examples=True)
    failures = 0
    for i in range(args.trials):
        name, D = diagrams[i % len(diagrams)]
        ws = trial_seed(args.seed, i)
        D2, events = random_walk(D, args.steps, ws, args.size_cap)
        for T in switches:
            for label, fn in (("col", col), ("dcol", dcol)):
                before, after = fn(D, T), fn(D2, T)
                if before != after:
                    failures += 1
                    print(f"FAIL seed={args.seed} trial={i} walk_seed={ws} diagram={name} "
                          f"switch={T.name} {label}: {before} -> {after}")
                    for ev in events:
                        print(f"  {ev.to_line()}")
    print(f"# fuzz seed={args.seed} trials={args.trials} steps={args.steps} "
          f"switches={len(switches)} failures={failures}")
    return EXIT_FAIL if failures else EXIT_OK


def cmd_cover(args) -> int:
    from .cover import cover_available, double_cover, load_selection, variant_from_record

    if not cover_available():
        print("error: diagram-level covers are quarantined (no construction variant passed "
              "the recorded check); use dcolor for doubled colorings", file=sys.stderr)
        return EXIT_FAIL
    variant = variant_from_record(load_selection())
    _, D = _diagram(args.diagram)
    print(f"# double cover, variant {variant.describe()}")
    print(double_cover(D, variant))
    return EXIT_OK


def distinguish(D1: GaussCode, D2: GaussCode, max_order: int):
    """First switch (order ascending, up to isomorphism) separating D1 and D2.

    Returns ``(T, invariant, value1, value2)`` or None.
    """
    for n in range(1, max_order + 1):
        for T in enumerate_switches(n, up_to_iso=True):
            for label, fn in (("col", col), ("dcol", dcol)):
                a, b = fn(D1, T), fn(D2, T)
                if a != b:
                    return T, label, a, b
    return None


def cmd_distinguish(args) -> int:
    if args.max_order < 1:
        raise InputError("--max-order must be positive")
    _, D1 = _diagram(args.code1)
    _, D2 = _diagram(args.code2)
    hit = distinguish(D1, D2, args.max_order)
    if hit is None:
        print(f"none (all switches of order <= {args.max_order})")
        return EXIT_OK
    T, label, a, b = hit
    print(f"# {T.name}: {label} {a} != {b}")
    print(format_switch(T).rstrip("\n"))
    return EXIT_OK


# -- wiring --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="doodle", description="Coloring invariants of virtual doodles.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def switch_opt(sp):
        sp.add_argument("--switch", action="append", metavar="FILE",
                        help="switch table file or asset name (repeatable)")

    sp = sub.add_parser("check-switch", help="verify the doodle switch axioms of a table file")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_check_switch)

    sp = sub.add_parser("enum-switches", help="list all switches of order N")
    sp.add_argument("n", type=int)
    sp.add_argument("--up-to-iso", action="store_true")
    sp.set_defaults(func=cmd_enum)

    for name, func, what in (("color", cmd_color, "coloring"), ("dcolor", cmd_dcolor, "doubled coloring")):
        sp = sub.add_parser(name, help=f"{what} counts of a diagram")
        sp.add_argument("diagram")
        switch_opt(sp)
        sp.add_argument("--csv", action="store_true")
        sp.set_defaults(func=func)

    sp = sub.add_parser("list-colorings", help="list colorings as CSV")
    sp.add_argument("diagram")
    switch_opt(sp)
    sp.add_argument("--doubled", action="store_true", help="use the doubled presentation")
    sp.add_argument("--cap", type=int, default=10**6)
    sp.set_defaults(func=cmd_list_colorings)

    sp = sub.add_parser("table", help="CSV of col and dcol, one column per diagram")
    sp.add_argument("diagrams", nargs="*")
    switch_opt(sp)
    sp.add_argument("--csv", action="store_true", help="accepted for symmetry; output is always CSV")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("fuzz", help="check col/dcol invariance under random R1/R2 walks")
    sp.add_argument("diagrams", nargs="*")
    switch_opt(sp)
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--trials", type=int, default=10)
    sp.add_argument("--steps", type=int, default=50)
    sp.add_argument("--size-cap", type=int, default=12)
    sp.set_defaults(func=cmd_fuzz)

    sp = sub.add_parser("cover", help="print the double covering of a diagram")
    sp.add_argument("diagram")
    sp.set_defaults(func=cmd_cover)

    sp = sub.add_parser("distinguish", help="search for a switch separating two diagrams")
    sp.add_argument("code1")
    sp.add_argument("code2")
    sp.add_argument("--max-order", type=int, default=4)
    sp.set_defaults(func=cmd_distinguish)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "cap", 1) < 1 or getattr(args, "size_cap", 1) < 1:
        print("error: caps must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
