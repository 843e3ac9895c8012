"""Census table for a range of shapes, printed and optionally written to CSV.

    python scripts/run_census.py --max-side 4 --csv census.csv --jobs 2
"""
from __future__ import annotations

import argparse
import logging
import time

from weaves.census import CSV_COLUMNS, CensusConfig, bound_check, census, write_csv


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-side", type=int, default=1)
    ap.add_argument("--max-side", type=int, default=4)
    ap.add_argument("--max-cells", type=int, default=16, help="skip shapes with more cells")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--no-classes", action="store_true")
    ap.add_argument("--csv", metavar="OUT")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")

    config = CensusConfig(jobs=args.jobs, classes=not args.no_classes)
    rows = []
    print(" ".join(f"{c:>19}" if "classes" in c else f"{c:>11}" for c in CSV_COLUMNS), " ok")
    for m in range(args.min_side, args.max_side + 1):
        for n in range(args.min_side, args.max_side + 1):
            if m * n > args.max_cells:
                continue
            t0 = time.perf_counter()
            row = census(m, n, config)
            rows.append(row)
            cells = row.as_csv()
            line = " ".join(f"{cells[c]!s:>19}" if "classes" in c else f"{cells[c]!s:>11}" for c in CSV_COLUMNS)
            print(line, " yes" if bound_check(row) else "  NO", f" {time.perf_counter() - t0:.1f}s")
    if args.csv:
        write_csv(rows, args.csv)
        print(f"wrote {len(rows)} rows to {args.csv}")


if __name__ == "__main__":
    main()
