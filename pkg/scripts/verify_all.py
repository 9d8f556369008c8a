"""Run every registered bound check up to a given order and summarize.

Writes one JSON report per bound into --out-dir when given.  Exits 1 if
any bound is violated.
"""

import argparse
import pathlib
import sys

from eccbounds.report import Report, to_json
from eccbounds.verifier import CHECKS, verify_bound


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nmax", type=int, default=None, help="largest order (default: per-check default)")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--labeled", action="store_true", help="sweep labeled graphs instead of iso classes")
    ap.add_argument("--only", nargs="*", default=None, help="bound ids to run")
    ap.add_argument("--out-dir", type=pathlib.Path, default=None)
    args = ap.parse_args(argv)

    ids = args.only or list(CHECKS)
    unknown = [b for b in ids if b not in CHECKS]
    if unknown:
        ap.error(f"unknown bound ids: {', '.join(unknown)}")
    if args.out_dir:
        args.out_dir.mkdir(parents=True, exist_ok=True)

    failed = 0
    print(f"{'bound':34s} {'n':>5s} {'graphs':>8s} {'viol':>5s} {'sharp':>6s} {'unique':>6s} {'iff':>4s} {'secs':>6s}")
    for bid in ids:
        check = CHECKS[bid]
        n_max = args.nmax or check.n_default
        if check.trees_only:
            n_max = min(n_max, 10)
        run = verify_bound(bid, n_max=n_max, iso_reduce=not (args.labeled or check.trees_only), jobs=args.jobs)
        failed += not run.ok
        print(f"{bid:34s} {n_max:5d} {run.graphs_checked:8d} {run.violation_count:5d} "
              f"{'ok' if not run.sharpness_failures else 'FAIL':>6s} {'ok' if run.uniqueness_ok else 'FAIL':>6s} "
              f"{'ok' if run.iff_ok else 'FAIL':>4s} {run.wall_time:6.1f}")
        sys.stdout.flush()
        if args.out_dir:
            rep = Report(["verify_all.py", bid], "verification_run", run)
            (args.out_dir / f"{bid}.json").write_text(to_json(rep) + "\n")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
