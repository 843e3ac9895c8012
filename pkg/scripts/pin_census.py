"""Recompute census counts with the brute-force oracles in weaves.oracles.

The numbers printed here are the ones frozen in tests/pinned.py.  The
oracle shares no decision code with weaves.census: layering is found by
trying every bipartition, parallel pairs by walking the interchange orbit,
and classes by union-find over all moves.

    python scripts/pin_census.py 2x2 3x3 3x4
"""
from __future__ import annotations

import argparse
import json
import time

from weaves.oracles import census_oracle


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("shapes", nargs="*", default=["2x2", "2x3", "3x3", "2x4", "3x4"])
    args = ap.parse_args()
    for shape in args.shapes:
        m, n = map(int, shape.split("x"))
        t0 = time.perf_counter()
        counts = census_oracle(m, n)
        print(json.dumps({"m": m, "n": n, **counts, "seconds": round(time.perf_counter() - t0, 1)}),
              flush=True)


if __name__ == "__main__":
    main()
