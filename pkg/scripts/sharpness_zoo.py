"""Run every built-in sharpness example and summarise what it shows.

For bound statements the summary counts instances meeting the bound with
equality; for threshold statements it lists which relaxations are falsified.
"""

import argparse
import json
import sys

from cyclebounds.sharpness import SHARPNESS_EXAMPLES, audit_claim


def summary(rep) -> str:
    parts = [f"{len(rep.instances)} instance(s)"]
    eq = [i.equality for i in rep.instances if i.equality is not None]
    if eq:
        parts.append(f"equality {sum(eq)}/{len(eq)}")
    falsified = sorted({k for i in rep.instances for k, v in i.relaxed_fails.items() if v})
    if falsified:
        parts.append("falsifies relaxed " + ",".join(falsified))
    kinds = sorted({i.verdict for i in rep.instances})
    parts.append("verdicts " + ",".join(kinds))
    if rep.skipped:
        parts.append(f"{len(rep.skipped)} skipped")
    return "; ".join(parts)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--theorem", help="only claims for this tag, e.g. T15")
    ap.add_argument("--detail", action="store_true", help="print per-instance tables")
    ap.add_argument("--json", help="write all reports as JSON")
    args = ap.parse_args()

    reports = []
    for claim in SHARPNESS_EXAMPLES:
        if args.theorem and claim.theorem.split("[")[0] != args.theorem:
            continue
        rep = audit_claim(claim)
        reports.append(rep)
        print(f"{claim.theorem:<7} {claim.description:<48} {summary(rep)}")
        if args.detail:
            print(rep.to_text())
    if args.json:
        with open(args.json, "w") as fh:
            json.dump([r.as_dict() for r in reports], fh, indent=2, sort_keys=True)
    return 0


if __name__ == "__main__":
    sys.exit(main())
