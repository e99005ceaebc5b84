"""Summary of the iterated kissing configurations below the Leech minimal vectors.

For each level: size, dimension, maximal inner product, spectrum with pair
counts, design strength and the split of members by inner-product histogram.

    python3 scripts/chain_report.py --depth 4 --base 0
"""

from __future__ import annotations

import argparse
import json

from leechcert.codes import design_strength, kissing_chain, orbit_split_by_histogram, spectrum
from leechcert.report import render


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--depth", type=int, default=4)
    ap.add_argument("--base", type=int, default=0, help="base member index at each level")
    ap.add_argument("--max-k", type=int, default=12)
    args = ap.parse_args()

    rows = []
    for level, code in enumerate(kissing_chain(args.depth, base_choice=args.base)):
        row = {"level": level, "size": len(code), "dim": code.dim, "max_inner": code.max_inner(),
               "strength": design_strength(code, args.max_k)}
        if level:
            row["spectrum"] = dict(spectrum(code))
            row["histogram_classes"] = sorted(len(g) for g in orbit_split_by_histogram(code))
        rows.append(row)
    print(json.dumps(render(rows), indent=2))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
