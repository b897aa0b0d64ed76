"""Feasible interval of a one-parameter family, compared with the closed-form endpoints.

    python scripts/sweep_example.py ex52 --tol 1e-10
"""

import argparse
import time
from decimal import Decimal, getcontext

from semicubic.scan import example_template, sweep_1d

getcontext().prec = 40
S = Decimal.sqrt
EXPECTED = {
    "ex52": ((262709 - S(Decimal(296066681))) / 228660, 4 * (10343 + S(Decimal(10186611))) / 49025),
    "ex53": ((99433 - S(Decimal(86925073))) / 87200, Decimal(118) / 109),
}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("family", choices=sorted(EXPECTED))
    ap.add_argument("--tol", default="1e-10")
    ap.add_argument("--samples", type=int, default=256)
    args = ap.parse_args()

    t = time.perf_counter()
    res = sweep_1d(example_template(args.family), args.tol, samples=args.samples)
    elapsed = time.perf_counter() - t
    for iv in res.intervals:
        print(f"interval: [{float(iv.lo):.12f}, {float(iv.hi):.12f}]")
    if len(res.intervals) == 1:
        iv = res.intervals[0]
        for label, got, want in (("lo", iv.lo, EXPECTED[args.family][0]), ("hi", iv.hi, EXPECTED[args.family][1])):
            err = Decimal(got.numerator) / Decimal(got.denominator) - want
            print(f"{label}: closed form {float(want):.12f}, error {float(err):+.2e}")
    print(f"{len(res.intervals)} interval(s), {elapsed:.1f}s")


if __name__ == "__main__":
    main()
