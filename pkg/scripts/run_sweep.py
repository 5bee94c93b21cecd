"""Exhaustive verification over all connected graphs up to a given order.

    python3 scripts/run_sweep.py --max-n 8 --lambda 1..4 --jobs 4 --out sweep.json
"""

import argparse
import sys
import time

from cyclebounds.harness import enumerate_graphs, verify_graphs
from cyclebounds.theorems import parse_lambda_range, parse_theorem_list


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--lambda", dest="lam", default="1..4")
    ap.add_argument("--theorems", default="all")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", help="write the JSON report here")
    args = ap.parse_args()

    lambdas = parse_lambda_range(args.lam)
    ids = parse_theorem_list(args.theorems, lambdas)
    t0 = time.perf_counter()
    graphs = []
    for n in range(1, args.max_n + 1):
        batch = list(enumerate_graphs(n, connected_only=True))
        print(f"n={n}: {len(batch)} connected graphs", file=sys.stderr)
        graphs.extend(batch)
    print(f"enumeration {time.perf_counter() - t0:.1f}s", file=sys.stderr)

    report = verify_graphs(graphs, ids, lambdas, jobs=args.jobs,
                           metadata={"n": f"1..{args.max_n}", "connected_only": True})
    print(report.to_text())
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(report.to_json(timing=True) + "\n")
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
