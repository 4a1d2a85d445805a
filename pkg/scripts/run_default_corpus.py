#!/usr/bin/env python3
"""Run every theorem verifier over the built-in corpus and print the summary.

Equivalent to `scottlab verify --theorem all --corpus builtin --out report.json`,
with a per-theorem table printed at the end.
"""

import argparse
import json
import sys
import time

from scottlab import verifiers as vf


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="report.json", help="report output path")
    ap.add_argument("--timeout", type=float, default=60.0, help="per-instance timeout (s)")
    ap.add_argument("--include-slow", action="store_true", help="include entries flagged slow")
    ap.add_argument(
        "--theorem", default="all", choices=vf.THEOREMS + ["all"], help="which verifier to run"
    )
    args = ap.parse_args()

    theorems = list(vf.THEOREMS) if args.theorem == "all" else [args.theorem]
    config = vf.CorpusConfig(
        groups=vf.builtin_corpus(),
        theorems=theorems,
        timeout=args.timeout,
        include_slow=args.include_slow,
    )
    t0 = time.perf_counter()
    report, status = vf.run_corpus(config)
    elapsed = time.perf_counter() - t0

    with open(args.out, "w") as f:
        json.dump(report, f, indent=1)
        f.write("\n")

    print(f"{len(report['instances'])} theorem reports in {elapsed:.1f}s -> {args.out}")
    header = f"{'theorem':<22}{'pass':>6}{'cex':>6}{'vacuous':>9}{'inconclusive':>14}"
    print(header)
    print("-" * len(header))
    for tid, s in report["summary"].items():
        print(
            f"{tid:<22}{s['pass']:>6}{s['counterexamples']:>6}"
            f"{s['vacuous']:>9}{s['inconclusive']:>14}"
        )
    if report["meta"]["load_errors"]:
        print("load errors:", report["meta"]["load_errors"])
    print(f"exit status {status}")
    return status


if __name__ == "__main__":
    sys.exit(main())
