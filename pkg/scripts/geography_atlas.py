#!/usr/bin/env python3
"""Realize a whole region of admissible triples and summarize the recipes.

Usage: python scripts/geography_atlas.py [SIGMA_MIN] [B1_MAX]

Prints one line per realized triple plus a tally of which construction
covered how much of the region, ending with a verification sweep.
"""

import sys
from collections import Counter

from geographer.geography import enumerate_region
from geographer.verify import verify_bundle_grid


def main() -> int:
    sigma_min = int(sys.argv[1]) if len(sys.argv) > 1 else -40
    b1_max = int(sys.argv[2]) if len(sys.argv) > 2 else 8
    kinds = Counter()
    total = 0
    for recipe in enumerate_region(sigma_min, b1_max):
        a, b, c = recipe.triple
        print(f"({a:4d},{b:3d},{c:3d})  {recipe.label:>22s}  {recipe.kind}")
        kinds[recipe.kind] += 1
        total += 1
    print(f"\n{total} admissible triples realized")
    for kind, count in sorted(kinds.items()):
        print(f"  {kind}: {count}")

    report = verify_bundle_grid(6)
    status = "PASS" if report.passed else "FAIL"
    print(f"\nverification sweep over {report.cases} bundle cases: {status}")
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
