#!/usr/bin/env python3
"""Sweep every admissible parameter tuple of the four cube constructions
and count the inequivalent cubes each family yields per order."""

import argparse
import time

from costas_cubes.construct import table2


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-order", type=int, default=29)
    parser.add_argument("--all-orders", action="store_true",
                        help="also print orders where no family constructs anything")
    args = parser.parse_args()

    start = time.perf_counter()
    rows = table2(args.max_order)
    print("order  g2x3  w2w2g2  g3 (i/ii)  total_known")
    for r in rows:
        if not (args.all_orders or r.g2x3 or r.w2w2g2 or r.g3):
            continue
        g3_cell = f"{r.g3} ({r.g3_variant_i}/{r.g3_variant_ii})" if r.g3 else "-"
        print(
            f"{r.order:>5}  {r.g2x3 or '-':>4}  {r.w2w2g2 or '-':>6}  {g3_cell:>9}  "
            f"{r.total_known if r.total_known is not None else '?':>11}"
        )
    print(f"elapsed: {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
