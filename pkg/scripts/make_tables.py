#!/usr/bin/env python3
"""Regenerate every reference table as CSV into one directory."""
import argparse
import logging
from pathlib import Path

from rcn.arith import primes_between, ratio_str
from rcn.commas import Algorithm, prime_comma
from rcn.tables import (Table, first_last_prime_per_b, gen_b_table, gen_prime_comma_table,
                        largest_commas, pyth_tables)

log = logging.getLogger("make_tables")


def three_algorithms(max_p: int) -> Table:
    cols = ["p"]
    for algo in Algorithm:
        cols += [f"b_{algo}", f"comma_{algo}", f"label_{algo}"]
    rows = []
    for p in primes_between(5, max_p):
        row = {"p": p}
        for algo in Algorithm:
            c = prime_comma(p, algo)
            row.update({f"b_{algo}": c.b, f"comma_{algo}": ratio_str(c.value),
                        f"label_{algo}": str(c.label)})
        rows.append(row)
    return Table("three_algorithms", cols, rows)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("out/tables"))
    ap.add_argument("--big", type=int, default=100000, help="max p for the first/last and largest tables")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    args.out.mkdir(parents=True, exist_ok=True)

    tables = dict(pyth_tables())
    tables["commas_dr_200"] = gen_prime_comma_table(200)
    tables["b_dr_1400"] = gen_b_table(1400)
    tables["firstlast_dr"] = first_last_prime_per_b(args.big)
    tables["largest_dr"] = largest_commas(args.big, 9)
    tables["three_algorithms_97"] = three_algorithms(97)
    for name, t in tables.items():
        path = args.out / f"{name}.csv"
        path.write_text(t.to_csv())
        log.info("%-22s %5d rows -> %s", name, len(t.rows), path)


if __name__ == "__main__":
    main()
