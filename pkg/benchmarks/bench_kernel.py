#!/usr/bin/env python3
"""Compare the compiled and pure-Python normal-form engines.

Workloads are the three kernel entry points the rest of the package leans
on: word-to-normal-form evaluation, the all-pairs removable-pair scan, and
canonical-form multiplication.  Run from the repository root after building
the extension in place:

    python3 setup.py build_ext --inplace
    python3 benchmarks/bench_kernel.py
"""

import argparse
import pathlib
import random
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from garside import kernel
from garside.contexts import build_context
from garside.words import parse_word, signed_letters

# the length-34 four-strand word with no removable pair; the search and the
# acceptance suite hammer pair_scan with words of exactly this shape
WITNESS = "ABBCABBACBBCBBBAAccbbbabbacbbcabbc"


def _random_letters(natoms, length, rng):
    return [rng.choice([1, -1]) * rng.randrange(1, natoms + 1) for _ in range(length)]


def bench(label, fn, repeat):
    best = min(_timed(fn) for _ in range(repeat))
    print(f"  {label:<24} {best * 1e3:9.3f} ms")
    return best


def _timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5, help="take the best of N runs")
    ap.add_argument("--scan-words", type=int, default=200)
    ap.add_argument("--mul-ops", type=int, default=20000)
    args = ap.parse_args(argv)

    if kernel.CompiledEngine is None:
        print("compiled kernel not built; run: python3 setup.py build_ext --inplace")
        return 1

    ctx = build_context("braid:4")
    rng = random.Random(20240901)
    scan_words = [
        _random_letters(ctx.natoms, 34, rng) for _ in range(args.scan_words)
    ]
    scan_words.append(list(signed_letters(parse_word(WITNESS))))
    nf_words = [_random_letters(ctx.natoms, 200, rng) for _ in range(50)]

    results = {}
    for name, cls in (("python", kernel.PyEngine), ("cython", kernel.CompiledEngine)):
        eng = cls(ctx.tables)
        pairs = [
            (eng.from_letters(_random_letters(ctx.natoms, 30, rng)),
             eng.from_letters(_random_letters(ctx.natoms, 30, rng)))
            for _ in range(200)
        ]

        def run_nf():
            for w in nf_words:
                eng.from_letters(w)

        def run_scan():
            for w in scan_words:
                eng.pair_scan(w)

        def run_mul():
            for i in range(args.mul_ops):
                a, b = pairs[i % len(pairs)]
                eng.mul(a[0], a[1], b[0], b[1])

        print(f"{name} backend")
        results[name, "from_letters"] = bench(
            f"from_letters x{len(nf_words)}", run_nf, args.repeat
        )
        results[name, "pair_scan"] = bench(
            f"pair_scan x{len(scan_words)}", run_scan, args.repeat
        )
        results[name, "mul"] = bench(f"mul x{args.mul_ops}", run_mul, args.repeat)

    print("speedup (python / cython)")
    for op in ("from_letters", "pair_scan", "mul"):
        ratio = results["python", op] / results["cython", op]
        print(f"  {op:<24} {ratio:8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
