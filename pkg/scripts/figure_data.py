#!/usr/bin/env python3
"""CSV datasets behind the figures. Plot them with whatever you like.

  lcy     LCY of candidate commas vs b for a few primes and the p=1 probe
  b-small b vs p for all primes below 1000, three algorithms
  b-large b vs p to 1e9: every prime to 1e5, sampled above
  dist    ln(p)/p weighted b distribution for one octave of primes
"""
import argparse
import csv
import sys

from rcn.arith import primes_between
from rcn.commas import Algorithm, candidate, prime_comma
from rcn.sweeps import SampleSweep
from rcn.tables import b_weights

LCY_PRIMES = [1, 5, 71, 1163, 17489, 149993, 1299709]


def lcy_rows(b_lo=-20, b_hi=20):
    for p in LCY_PRIMES:
        for b in range(b_lo, b_hi + 1):
            yield {"p": p, "b": b, "LCY": f"{candidate(p, b).lcy:.6f}"}


def b_rows(primes):
    for p in primes:
        row = {"p": p}
        for algo in Algorithm:
            row[f"b_{algo}"] = prime_comma(p, algo).b
        yield row


def large_primes(dense_to, high, probes, per_probe):
    yield from primes_between(5, dense_to)
    yield from SampleSweep(dense_to, high, probes, per_probe).primes()


def dist_rows(lo, hi):
    w = {algo: b_weights(lo, hi, algo) for algo in Algorithm}
    total = {algo: sum(v.values()) for algo, v in w.items()}
    for b in range(min(min(v) for v in w.values()), max(max(v) for v in w.values()) + 1):
        row = {"b": b}
        for algo in Algorithm:
            row[f"w_{algo}"] = f"{w[algo].get(b, 0.0):.9f}"
            row[f"share_{algo}"] = f"{w[algo].get(b, 0.0) / total[algo]:.6f}"
        yield row


def write(rows, out):
    rows = iter(rows)
    first = next(rows)
    w = csv.DictWriter(out, fieldnames=list(first), lineterminator="\n")
    w.writeheader()
    w.writerow(first)
    w.writerows(rows)


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("figure", choices=["lcy", "b-small", "b-large", "dist"])
    ap.add_argument("-o", "--output", type=argparse.FileType("w"), default=sys.stdout)
    ap.add_argument("--probes", type=int, default=4000, help="b-large: probe points above 1e5")
    ap.add_argument("--per-probe", type=int, default=1)
    ap.add_argument("--high", type=float, default=1e9)
    ap.add_argument("--from", dest="lo", type=int, default=50000)
    ap.add_argument("--to", dest="hi", type=int, default=100000)
    args = ap.parse_args()

    if args.figure == "lcy":
        rows = lcy_rows()
    elif args.figure == "b-small":
        rows = b_rows(primes_between(5, 1000))
    elif args.figure == "b-large":
        rows = b_rows(large_primes(100000, args.high, args.probes, args.per_probe))
    else:
        rows = dist_rows(args.lo, args.hi)
    write(rows, args.output)


if __name__ == "__main__":
    main()
