"""Run every cross-validation suite and report timing per suite.

Usage: python scripts/full_verify.py [--max-weight W]

Weight 8 is the acceptance-level sweep; higher weights grow combinatorially.
"""

import argparse
import sys
import time
from dataclasses import dataclass

from invkostka import verify_suite


@dataclass(frozen=True)
class SweepConfig:
    max_weight: int = 8


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-weight", type=int, default=SweepConfig.max_weight)
    cfg = SweepConfig(max_weight=ap.parse_args().max_weight)

    t0 = time.perf_counter()
    report = verify_suite(cfg.max_weight)
    elapsed = time.perf_counter() - t0
    for line in report.summary_lines():
        print(line)
    print(f"elapsed: {elapsed:.2f}s")
    return 0 if report.ok else 3


if __name__ == "__main__":
    sys.exit(main())
