#!/usr/bin/env python3
"""Write the first N zeta-zero ordinates, one per line, ascending.

The C++ code never computes zeros; this script produces the data file it
ingests. Uses mpmath's double-precision zero finder, spot-checked against
the multiprecision one.
"""
import argparse
import sys

import mpmath
from mpmath import fp


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("count", type=int)
    ap.add_argument("output")
    args = ap.parse_args()

    ordinates = []
    for n in range(1, args.count + 1):
        ordinates.append(fp.zetazero(n).imag)
        if n % 1000 == 0:
            print(f"{n} zeros", file=sys.stderr)

    if any(b <= a for a, b in zip(ordinates, ordinates[1:])):
        sys.exit("ordinates not strictly ascending")

    mpmath.mp.dps = 20
    for n in (1, args.count // 2, args.count):
        exact = float(mpmath.zetazero(n).imag)
        if abs(exact - ordinates[n - 1]) > 1e-6:
            sys.exit(f"zero {n}: fp={ordinates[n - 1]} mp={exact}")

    with open(args.output, "w") as out:
        for g in ordinates:
            out.write(f"{g:.9f}\n")


if __name__ == "__main__":
    main()
