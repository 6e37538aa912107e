"""Command-line front end.

Exit status: 0 on success, 1 when a verification check fails, 2 on usage,
input or capacity errors.
"""
from __future__ import annotations

import argparse
import logging
import sys

from . import catalog as cat
from .braids import BraidWord, SwitchPair, fixed_point_count, parse
from .core import BIQUANDLE, BIRACK, QUANDLE, RACK, FiniteBirack, classify, twist
from .enumeration import (FULL_BOUND, enumerate_full, enumerate_racks_and_quandles,
                          enumerate_related)
from .errors import BiquandleError, CapacityError, ParseError
from .pairs import find_essential, pair_status
from .plat import closure_to_plat, orientation_sensitivity, series
from .verify import SUITES, run_suite

CLASS_ALIASES = {"q": QUANDLE, "quandle": QUANDLE, "r": RACK, "rack": RACK,
                 "bq": BIQUANDLE, "biquandle": BIQUANDLE, "br": BIRACK, "birack": BIRACK}


class UsageError(Exception):
    pass


def _class_arg(text: str) -> str:
    try:
        return CLASS_ALIASES[text.lower()]
    except KeyError:
        raise argparse.ArgumentTypeError(f"unknown class {text!r}") from None


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="biquandles", description="Finite biracks, switch pairs and their invariants.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", help="search for biracks of a given size")
    e.add_argument("--size", type=_positive, required=True)
    e.add_argument("--class", dest="cls", type=_class_arg)
    e.add_argument("--related-to", choices=["quandles"])
    e.add_argument("--out")
    e.add_argument("--format", choices=["json", "text"], default="text")
    e.add_argument("--workers", type=_positive, default=1)
    e.add_argument("--checkpoint")
    e.add_argument("--allow-large", action="store_true")

    c = sub.add_parser("classify", help="classify catalog entries or a builtin")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--in", dest="infile")
    g.add_argument("--builtin")

    pr = sub.add_parser("pairs", help="virtual and essential pairs within a catalog")
    pr.add_argument("--catalog", required=True)
    pr.add_argument("--essential", action="store_true")
    pr.add_argument("--all-biracks", action="store_true", help="also pair entries failing B1")

    i = sub.add_parser("invariant", help="fixed-point count of a braid closure")
    gw = i.add_mutually_exclusive_group(required=True)
    gw.add_argument("--braid")
    gw.add_argument("--builtin")
    i.add_argument("--pair")
    i.add_argument("--switch")
    i.add_argument("--twist", action="store_true")
    i.add_argument("--virtual", help="entry driving virtual letters (instead of --twist)")
    i.add_argument("--strands", type=_positive)
    i.add_argument("--workers", type=_positive, default=1)

    s = sub.add_parser("series", help="writhe coefficient series of a braid closure")
    gs = s.add_mutually_exclusive_group(required=True)
    gs.add_argument("--braid")
    gs.add_argument("--builtin")
    s.add_argument("--switch", required=True)
    s.add_argument("--half-width", type=_positive, required=True)
    s.add_argument("--strands", type=_positive)
    s.add_argument("--csv", action="store_true")
    s.add_argument("--dump-program", action="store_true")
    s.add_argument("--orientation-check", action="store_true")

    v = sub.add_parser("verify", help="recompute reference results")
    v.add_argument("--suite", choices=sorted(SUITES), required=True)
    v.add_argument("--extended", action="store_true", help="include the long n = 6 searches")
    v.add_argument("--workers", type=_positive, default=1)
    return p


# --- helpers -----------------------------------------------------------------------

def _entry(name: str) -> FiniteBirack:
    obj = cat.builtin(name)
    if not isinstance(obj, cat.CatalogEntry):
        raise UsageError(f"{name!r} is not a birack")
    return obj.birack


def _word(args) -> BraidWord:
    if args.builtin:
        w = cat.builtin(args.builtin)
        if not isinstance(w, BraidWord):
            raise UsageError(f"{args.builtin!r} is not a braid word")
        return w
    return parse(args.braid)


def _strands(word: BraidWord, given: int | None) -> int:
    m = given or word.strands
    return max(m, 1)


# --- commands ----------------------------------------------------------------------

def cmd_enumerate(args, out) -> int:
    n = args.size
    if args.related_to:
        build = enumerate_related(n, args.related_to, worker_count=args.workers,
                                  checkpoint_path=args.checkpoint)
    elif n > FULL_BOUND and args.cls in (QUANDLE, RACK):
        build = enumerate_racks_and_quandles(n, worker_count=args.workers, allow_large=args.allow_large)
    else:
        build = enumerate_full(n, worker_count=args.workers, checkpoint_path=args.checkpoint,
                               allow_large=args.allow_large)
    named = cat.build_named_catalog(build)
    if args.cls:
        named = cat.Catalog([e for e in named if e.classification.cls == args.cls])
    counts = build.counts()
    fmt = "json" if args.format == "json" else "paper_text"
    text = cat.dumps(named, fmt)
    if fmt == "paper_text":
        text = (f"# n={n} quandles {counts[QUANDLE]} racks {counts[RACK]} "
                f"biquandles {counts[BIQUANDLE]} biracks {counts[BIRACK]}\n") + text
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        out.write(f"wrote {len(named)} entries to {args.out}\n")
    else:
        out.write(text)
    return 0


def cmd_classify(args, out) -> int:
    if args.builtin:
        e = cat.builtin(args.builtin)
        if not isinstance(e, cat.CatalogEntry):
            raise UsageError(f"{args.builtin!r} is not a birack")
        entries = [e]
    else:
        entries = list(cat.load(cat.resolve_catalog_path(args.infile), check_injective=False))
    for e in entries:
        out.write(f"{e.name}  {cat.paper_line(e.birack, classify(e.birack))}\n")
    return 0


def cmd_pairs(args, out) -> int:
    c = cat.load(cat.resolve_catalog_path(args.catalog), check_injective=False)
    items = [(e.name, e.birack) for e in c]
    if args.essential:
        for s, t in find_essential(items, biquandles_only=not args.all_biracks):
            out.write(f"{s}  {t}  essential\n")
        return 0
    for sn, S in items:
        for tn, T in items:
            st = pair_status(SwitchPair(S, T))
            if st.v:
                out.write(f"{sn}  {tn}  {st.label}\n")
    return 0


def cmd_invariant(args, out) -> int:
    word = _word(args)
    if args.pair:
        obj = cat.builtin(args.pair)
        if not isinstance(obj, cat.NamedPair):
            raise UsageError(f"{args.pair!r} is not a pair")
        pair = obj.pair
    elif args.switch and (args.twist or args.virtual):
        S = _entry(args.switch)
        pair = SwitchPair(S, twist(S.n) if args.twist else _entry(args.virtual))
    else:
        raise UsageError("give --pair NAME or --switch NAME with --twist or --virtual NAME")
    m = _strands(word, args.strands)
    out.write(f"{fixed_point_count(word, pair, m, workers=args.workers)}\n")
    return 0


def cmd_series(args, out) -> int:
    word = _word(args)
    B = _entry(args.switch)
    prog = closure_to_plat(word, _strands(word, args.strands))
    if args.dump_program:
        out.write(prog.dump())
    s = series(prog, B, args.half_width)
    out.write(s.to_csv() if args.csv else s.to_text() + "\n")
    if args.orientation_check:
        a, b = orientation_sensitivity(prog, B)
        out.write(f"orientation seed: default {a}, flipped {b}" + ("" if a == b else "  SENSITIVE") + "\n")
    return 0


def cmd_verify(args, out) -> int:
    checks = run_suite(args.suite, workers=args.workers, extended=args.extended)
    for c in checks:
        out.write(c.line() + "\n")
    failed = sum(1 for c in checks if c.ok is False)
    out.write(f"{args.suite}: {len(checks) - failed} of {len(checks)} checks without failure\n")
    return 1 if failed else 0


COMMANDS = {"enumerate": cmd_enumerate, "classify": cmd_classify, "pairs": cmd_pairs,
            "invariant": cmd_invariant, "series": cmd_series, "verify": cmd_verify}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=err)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as e:
        err.write(f"error: {e}\n")
    except ParseError as e:
        err.write(f"parse error: {e}\n")
    except CapacityError as e:
        err.write(f"capacity exceeded: {e}\n")
    except BiquandleError as e:
        err.write(f"error: {e}\n")
    except OSError as e:
        err.write(f"error: {e}\n")
    return 2


def main() -> None:
    sys.exit(run())
