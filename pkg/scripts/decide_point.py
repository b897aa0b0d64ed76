"""Decide one backward extension and print the condition record with a PSD spot check.

    python scripts/decide_point.py 1 1 106/100 108/100 --tail 111/100 112/100 113/100
"""

import argparse

from semicubic.decide import decide_semicubic_pdc
from semicubic.detcoef import psd_crosscheck
from semicubic.exactnum import parse_rational
from semicubic.shift import make_spec, parity_model


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("front", nargs="*")
    ap.add_argument("--tail", nargs=3, default=["111/100", "112/100", "113/100"])
    ap.add_argument("--rows", type=int, default=20)
    args = ap.parse_args()

    spec = make_spec([parse_rational(x) for x in args.front], *(parse_rational(x) for x in args.tail))
    d = decide_semicubic_pdc(spec)
    print(d.report())
    if d.parities:
        for j in (1, 2):
            model = parity_model(spec, j, args.rows)
            ok = all(psd_crosscheck(model, n, t) for n in range(args.rows + 1) for t in (0.1, 1, 10, 100))
            print(f"parity {j}: numeric PSD through n = {args.rows}: {ok}")


if __name__ == "__main__":
    main()
