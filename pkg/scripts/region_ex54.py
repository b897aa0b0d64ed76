"""Grid scan of 1, 1, sqrt x, sqrt y, (sqrt 1.11, sqrt 1.12, sqrt 1.13)^ with an
ASCII map and a cell-by-cell comparison against the closed-form sign polynomials.

    python scripts/region_ex54.py --n 60 --workers 4 --csv region.csv
"""

import argparse
import time

from semicubic.appendix import appendix_fixture, fixture_boundary, fixture_law
from semicubic.scan import example_template, scan_2d

GLYPH = {"ACCEPT": "#", "REJECT": ".", "INVALID_POINT": " ", "BOUNDARY": "+", "DEGENERATE": "?",
         "PRECONDITION_FAILED": "!"}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=60)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--csv")
    args = ap.parse_args()

    t = time.perf_counter()
    res = scan_2d(example_template("ex54"), args.n, args.n, workers=args.workers)
    elapsed = time.perf_counter() - t
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(res.to_csv())

    rows = [res.cells[k * args.n : (k + 1) * args.n] for k in range(args.n)]
    print("y ^")
    for row in reversed(rows):
        print("  |" + "".join(GLYPH[c.outcome] for c in row))
    print("  +" + "-" * args.n + "> x")

    mismatched = compared = 0
    for c in res.cells:
        if c.x < c.y and c.outcome not in ("BOUNDARY",):
            vals = appendix_fixture(c.x, c.y)
            if not fixture_boundary(vals):
                compared += 1
                mismatched += fixture_law(vals) != (c.outcome == "ACCEPT")
    print(res.counts())
    print(f"closed-form comparison: {compared} cells, {mismatched} mismatches; scan took {elapsed:.1f}s")


if __name__ == "__main__":
    main()
