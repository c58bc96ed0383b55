#!/usr/bin/env python3
"""Regenerate the bundled table file for the exotic monoid <a, b | aba = bb>.

The file under src/garside/data/ is generated, not hand-maintained.  Run
this script after changing the derivation code and commit the result; with
--check it verifies the bundled file is up to date instead of writing.
"""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from garside.contexts import load_table_context
from garside.tablegen import exotic_table_text

BUNDLED = (
    pathlib.Path(__file__).resolve().parents[1]
    / "src"
    / "garside"
    / "data"
    / "exotic-aba-bb.tables"
)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument(
        "-o",
        "--output",
        default=str(BUNDLED),
        help="output path, or - for stdout (default: the bundled file)",
    )
    ap.add_argument(
        "--check",
        action="store_true",
        help="exit 1 if the output file differs from a fresh generation",
    )
    args = ap.parse_args(argv)

    text = exotic_table_text()

    if args.check:
        current = pathlib.Path(args.output).read_text()
        if current != text:
            print(f"{args.output} is stale; rerun {sys.argv[0]}", file=sys.stderr)
            return 1
        print(f"{args.output} is up to date")
        return 0

    if args.output == "-":
        sys.stdout.write(text)
        return 0

    path = pathlib.Path(args.output)
    path.write_text(text)
    # Loading re-runs every Garside axiom check; fail loudly rather than
    # leaving a broken file in place.
    load_table_context(str(path))
    print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
