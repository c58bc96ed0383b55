"""Command-line front end.

Thin adapters over the library: every subcommand parses its inputs,
calls the corresponding module operation, and prints the result either
as plain text or as JSON lines.  Exit codes: 0 for success (including a
true answer), 1 when a checked property came out false or unbraiding got
stuck, 2 for usage and parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import disks, render, reversing, valuation
from .contexts import GarsideContext, build_context
from .elements import equivalent, group_element
from .words import Word, format_word


def _err(msg: str) -> None:
    print(f"garside: {msg}", file=sys.stderr)


class _UsageError(Exception):
    pass


def _context(spec: str) -> GarsideContext:
    try:
        return build_context(spec)
    except (ValueError, OSError) as exc:
        raise _UsageError(str(exc)) from exc


def _parse_arg(ctx: GarsideContext, text: str, numeric: bool) -> Word:
    try:
        return ctx.parse(text, numeric=numeric)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc


def _pair_dict(p: disks.RemovablePair) -> dict:
    return {
        "i": p.i,
        "j": p.j,
        "sigma": format_word(((p.sigma, 1),)),
        "tau": format_word(((p.tau, 1),)),
        "e": p.e,
        "verified": p.verified,
    }


def _cmd_nf(args, ctx: GarsideContext, w: Word) -> int:
    print(group_element(w, ctx))
    return 0


def _cmd_equiv(args, ctx: GarsideContext, w: Word) -> int:
    other = _parse_arg(ctx, args.other, args.numeric)
    same = equivalent(w, other, ctx)
    print("equivalent" if same else "inequivalent")
    return 0 if same else 1


def _cmd_val(args, ctx: GarsideContext, w: Word) -> int:
    x = group_element(w, ctx)
    seq = valuation.valuation_sequence(x)
    print(f"{seq} {valuation.OrderType.of(seq).name}")
    return 0


def _cmd_pairs(args, ctx: GarsideContext, w: Word) -> int:
    found = disks.find_removable_pairs(w, ctx)
    if args.lines:
        for p in found:
            print(disks.pair_json(w, p))
    else:
        print(json.dumps([_pair_dict(p) for p in found]))
    return 0


def _cmd_unbraid(args, ctx: GarsideContext, w: Word) -> int:
    r = disks.unbraid(w, ctx, strategy=args.strategy)
    if args.trace:
        for before, p in r.steps:
            print(disks.pair_json(before, p))
    print(
        json.dumps(
            {
                "success": r.success,
                "steps": r.nsteps,
                "residual": format_word(r.residual),
            }
        )
    )
    return 0 if r.success else 1


def _cmd_dihedral_pair(args, ctx: GarsideContext, w: Word) -> int:
    p = disks.find_pair_dihedral(w, ctx)
    print(disks.pair_json(w, p))
    return 0


def _cmd_simple_pair(args, ctx: GarsideContext, w: Word) -> int:
    v = _parse_arg(ctx, args.v, args.numeric)
    p = disks.find_pair_simple_fraction(w, v, ctx)
    print(disks.pair_json(disks.fraction_word(w, v), p))
    return 0


def _cmd_reverse(args, ctx: GarsideContext, w: Word) -> int:
    v = _parse_arg(ctx, args.v, args.numeric)
    r = reversing.reverse(w, v, ctx)
    print(
        json.dumps(
            {
                "u_prime": format_word(r.u_prime),
                "v_prime": format_word(r.v_prime),
                "lcm": str(r.lcm),
            }
        )
    )
    return 0


def _cmd_seed_word(args, ctx: GarsideContext, w: Word) -> int:
    v = _parse_arg(ctx, args.v, args.numeric)
    print(format_word(reversing.seed_word(w, v, ctx)))
    return 0


def _cmd_random_trivial(args, ctx: GarsideContext, w: Word) -> int:
    out = reversing.random_trivial_word(ctx, args.ops, args.seed)
    print(format_word(out, numeric=args.numeric))
    return 0


def _cmd_render(args, ctx: GarsideContext, w: Word) -> int:
    highlight = tuple(args.highlight) if args.highlight else None
    text = render.render_diagram(w, ctx, fmt=args.format, highlight=highlight)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def _cmd_search(args) -> int:
    report = reversing.search_counterexamples(
        args.strands,
        args.length,
        jobs=args.jobs,
        dedupe_symmetry=args.dedupe,
        force=args.force,
    )
    if args.verbose:
        for c in report.counterexamples:
            print(json.dumps(c.as_dict()))
    print(report.canonical_json())
    return 0


def _cmd_types(args) -> int:
    n = args.arity
    if args.separation:
        graph = valuation.neighbour_graph(n)
        src = valuation.OrderType.parse(args.separation[0], arity=n)
        dst = valuation.OrderType.parse(args.separation[1], arity=n)
        removed = [
            valuation.OrderType.parse(tok, arity=n)
            for tok in (args.removed.split(",") if args.removed else [])
            if tok
        ]
        sep = valuation.separation(graph, src, dst, removed)
        print("separated" if sep else "connected")
        return 0 if sep else 1
    if args.graph:
        print(valuation.neighbour_graph(n).to_dot())
        return 0
    for t in valuation.enumerate_order_types(n):
        print(t.name)
    return 0


def _cmd_bell(args) -> int:
    print(valuation.ordered_bell(args.arity))
    return 0


_WORD_COMMANDS = {
    "nf": (_cmd_nf, "canonical form of a signed word"),
    "equiv": (_cmd_equiv, "whether two words spell the same element"),
    "val": (_cmd_val, "valuation sequence and order-type of a word"),
    "pairs": (_cmd_pairs, "all removable pairs of a word"),
    "unbraid": (_cmd_unbraid, "delete removable pairs until stuck or done"),
    "dihedral-pair": (_cmd_dihedral_pair, "constructive pair in a trivial two-atom word"),
    "simple-pair": (_cmd_simple_pair, "constructive pair in a fraction of simple words"),
    "reverse": (_cmd_reverse, "word reversing: complements and right lcm"),
    "seed-word": (_cmd_seed_word, "trivial word built from a seed pair"),
    "random-trivial": (_cmd_random_trivial, "pseudorandom trivial word"),
    "render": (_cmd_render, "draw a braid diagram"),
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="garside",
        description="Garside normal forms, valuations, and removable-pair tools",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_word_cmd(name: str, needs_word: bool = True):
        fn, help_ = _WORD_COMMANDS[name]
        p = sub.add_parser(name, help=help_)
        p.add_argument(
            "--group",
            required=True,
            metavar="CTX",
            help="braid:N, dihedral:M, or table:FILE",
        )
        p.add_argument("--numeric", action="store_true", help="words as signed integers")
        if needs_word:
            p.add_argument("word", help="input word")
        p.set_defaults(func=fn)
        return p

    add_word_cmd("nf")
    p = add_word_cmd("equiv")
    p.add_argument("other", help="word to compare against")
    add_word_cmd("val")
    p = add_word_cmd("pairs")
    p.add_argument("--lines", action="store_true", help="one JSON line per pair")
    p = add_word_cmd("unbraid")
    p.add_argument("--strategy", choices=("leftmost", "innermost"), default="leftmost")
    p.add_argument("--trace", action="store_true", help="print one JSON line per deletion")
    add_word_cmd("dihedral-pair")
    p = add_word_cmd("simple-pair")
    p.add_argument("v", help="second fraction half (the first is WORD)")
    p = add_word_cmd("reverse")
    p.add_argument("v", help="second positive word")
    p = add_word_cmd("seed-word")
    p.add_argument("v", help="second positive word")
    p = add_word_cmd("random-trivial", needs_word=False)
    p.add_argument("--ops", type=int, required=True, help="number of random moves")
    p.add_argument("--seed", type=int, default=0, help="rng seed")
    p = add_word_cmd("render")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument(
        "--highlight", type=int, nargs=2, metavar=("I", "J"), help="mark a pair's rows"
    )
    p.add_argument("-o", "--output", help="write to a file instead of stdout")

    p = sub.add_parser("search", help="hunt for seeds with pair-free seed words")
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--dedupe", action="store_true", help="quotient by the atom mirror")
    p.add_argument("--force", action="store_true", help="override the size guard")
    p.add_argument("--verbose", action="store_true", help="one JSON line per hit")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("types", help="order-types of a given arity")
    p.add_argument("arity", type=int)
    p.add_argument("--graph", action="store_true", help="emit the neighbour graph as DOT")
    p.add_argument(
        "--separation",
        nargs=2,
        metavar=("SRC", "DST"),
        help="test whether --removed separates SRC from DST",
    )
    p.add_argument("--removed", default="", help="comma-separated type names")
    p.set_defaults(func=_cmd_types)

    p = sub.add_parser("bell", help="count order-types of a given arity")
    p.add_argument("arity", type=int)
    p.set_defaults(func=_cmd_bell)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.func in (_cmd_search, _cmd_types, _cmd_bell):
            try:
                return args.func(args)
            except ValueError as exc:
                raise _UsageError(str(exc)) from exc
        ctx = _context(args.group)
        w = _parse_arg(ctx, getattr(args, "word", ""), args.numeric)
        return args.func(args, ctx, w)
    except _UsageError as exc:
        _err(str(exc))
        return 2
    except (ValueError, IndexError) as exc:
        # a checked precondition on the input data came out false
        _err(str(exc))
        return 1 if args.func in (_cmd_dihedral_pair, _cmd_simple_pair) else 2


if __name__ == "__main__":
    sys.exit(main())
