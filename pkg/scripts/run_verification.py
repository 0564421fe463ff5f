"""Run the verification suites and write a JSON report.

    python3 scripts/run_verification.py [--suite all] [--out report.json]
"""

import argparse
import json
import sys

from dedekind.harness import SUITES, Bounds, exit_status, run_suite


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--suite", default="all", choices=("all",) + SUITES)
    ap.add_argument("--max-chain", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out")
    args = ap.parse_args()

    bounds = Bounds(max_chain=args.max_chain, seed=args.seed)
    reports = run_suite(args.suite, bounds)
    for r in reports:
        print(r.line(), file=sys.stderr)
    doc = {"bounds": bounds.to_json(), "reports": [r.to_json(timing=True) for r in reports]}
    text = json.dumps(doc, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return exit_status(reports)


if __name__ == "__main__":
    sys.exit(main())
