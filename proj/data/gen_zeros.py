#!/usr/bin/env python3
"""Generate the bundled table of nontrivial zeta zero ordinates.

Writes one ordinate per line (21 significant digits, ascending) to
zeros_10k.txt.  Progress is checkpointed so the run can be resumed.
"""
import os
import sys

from mpmath import mp, zetazero

COUNT = 10000
DIGITS = 21
HERE = os.path.dirname(os.path.abspath(__file__))
PROGRESS = os.path.join(HERE, "zeros_10k.progress")
FINAL = os.path.join(HERE, "zeros_10k.txt")


def main():
    mp.dps = 24
    done = 0
    lines = []
    if os.path.exists(PROGRESS):
        with open(PROGRESS) as f:
            lines = [ln.strip() for ln in f if ln.strip()]
        done = len(lines)
    with open(PROGRESS, "a") as f:
        for n in range(done + 1, COUNT + 1):
            g = zetazero(n).imag
            s = mp.nstr(g, DIGITS)
            assert "e" not in s and "E" not in s, s
            f.write(s + "\n")
            f.flush()
            lines.append(s)
            if n % 100 == 0:
                print(n, s, flush=True)

    vals = [float(s) for s in lines]
    assert len(vals) == COUNT
    assert all(b > a for a, b in zip(vals, vals[1:])), "not ascending"
    assert abs(vals[0] - 14.134725) < 1e-6

    with open(FINAL, "w") as f:
        f.write("# Ordinates of the first %d nontrivial zeros of the Riemann zeta function\n" % COUNT)
        f.write("# (imaginary parts of zeros on the critical line, ascending).\n")
        f.write("# Computed with mpmath.zetazero at 24 decimal digits; 21 significant digits per line.\n")
        for s in lines:
            f.write(s + "\n")
    print("wrote", FINAL)


if __name__ == "__main__":
    sys.exit(main())
