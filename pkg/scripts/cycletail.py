"""Compare n*sigma0 of a cycle with a pendant path against the best tree.

Prints the per-row comparison for small n (checked by BFS) and the
crossover ratio alpha(n) = r/n for a list of large n (closed forms only),
next to the limiting value.
"""

import argparse
import csv
import sys

from eccbounds.experiments import ALPHA_LIMIT, compare_tree_vs_cycletail


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--bfs-n", type=int, nargs="*", default=[12, 24, 48, 64],
                    help="orders tabulated row by row and checked by BFS (n <= 64)")
    ap.add_argument("--alpha-n", type=int, nargs="*", default=[100, 500, 1000, 5000, 20000],
                    help="orders for the crossover ratio (formula mode)")
    args = ap.parse_args(argv)

    out = csv.writer(sys.stdout)
    rows, _ = compare_tree_vs_cycletail(args.bfs_n)
    out.writerow(["n", "r", "k", "h_bfs", "h_formula", "tree", "diff"])
    for r in rows:
        out.writerow([r.n, r.r, r.k, r.h_bfs, r.h_formula, r.tree_value, r.diff])
    bad = sum(r.h_bfs != r.h_formula for r in rows)

    out.writerow([])
    out.writerow(["n", "alpha", "limit", "gap"])
    _, alpha = compare_tree_vs_cycletail(args.alpha_n, mode="formula")
    for n in args.alpha_n:
        a = alpha[n]
        out.writerow([n, "" if a is None else f"{a:.6f}", f"{ALPHA_LIMIT:.6f}",
                      "" if a is None else f"{abs(a - ALPHA_LIMIT):.6f}"])
    if bad:
        print(f"{bad} rows where BFS and formula disagree", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
