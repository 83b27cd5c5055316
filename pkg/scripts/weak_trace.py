#!/usr/bin/env python3
"""Print a base-annotated weak Goodstein trace and its descent verdict.

Example:
    python scripts/weak_trace.py --start 8 --max-steps 25
"""

import argparse
import sys
from pathlib import Path

try:
    import goodstein
except ImportError:
    sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))
    import goodstein

from goodstein import RunConfig, RunKind, rank, run_collected, verify_run


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--start", type=int, default=8)
    parser.add_argument("--start-base", type=int, default=2)
    parser.add_argument("--max-steps", type=int, default=25)
    args = parser.parse_args()

    records, outcome = run_collected(
        RunKind.WEAK, RunConfig(args.start, args.start_base, max_steps=args.max_steps)
    )
    print("  ".join(record.rendered for record in records))
    print(f"outcome: {outcome.status.value} after {outcome.steps_emitted} records")

    cert = verify_run(records)
    verdict = "AllStepsDescend" if cert.all_steps_descend else f"ViolationAt({cert.violation_at})"
    print(f"descent: {verdict} over {len(cert.evidence)} steps, ranking arity {cert.k}")
    print("ranks:  ", "  ".join(str(rank(r.digits, cert.k)) for r in records[: min(8, len(records))]))
    return 0


if __name__ == "__main__":
    sys.exit(main())
