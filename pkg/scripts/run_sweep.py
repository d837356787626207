"""Run the Id(Z_n) sweep and print per-check totals.

    python3 scripts/run_sweep.py --lo 4 --hi 60 --max-s 6 [--workers 4] [--out sweep.json]
"""
import argparse
import json
import time

from mullat.theorems import summarize, sweep_zn


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--lo", type=int, default=4)
    p.add_argument("--hi", type=int, default=60)
    p.add_argument("--max-s", type=int, default=6)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--no-theorems", action="store_true", help="correspondence checks only")
    p.add_argument("--out", help="write per-instance results as JSON")
    args = p.parse_args()

    t0 = time.perf_counter()
    items = sweep_zn(args.lo, args.hi, args.max_s, theorems=not args.no_theorems, workers=args.workers)
    elapsed = time.perf_counter() - t0

    counts = summarize(items)
    print(f"{len(items)} instances over n in [{args.lo}, {args.hi}], |S| <= {args.max_s}: {elapsed:.1f}s")
    print(f"{'check':<32}{'pass':>7}{'fail':>7}{'skip':>7}{'cases':>10}")
    for name, row in counts.items():
        print(f"{name:<32}{row['pass']:>7}{row['fail']:>7}{row['skip']:>7}{row['cases']:>10}")
    failed = [it for it in items if not it.passed]
    for it in failed[:10]:
        print("FAIL", it.n, it.s_ring, it.failures)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(
                [{"n": it.n, "S": it.s_ring, "S_L": it.s_lattice, "passed": it.passed,
                  "checks": it.statuses} for it in items],
                fh,
                indent=1,
            )


if __name__ == "__main__":
    main()
