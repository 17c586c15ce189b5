"""Run every theorem check over all graphs on up to 6 vertices.

Prints a table of HOLDS / VACUOUS / SKIPPED / COUNTEREXAMPLE counts per
statement.  Pass a different order bound as the first argument (<= 8).
"""

import sys
import time

from gsq.corpus import CorpusSpec
from gsq.harness import STATEMENTS, TheoremId, verify_corpus


def main(n_max=6):
    t0 = time.perf_counter()
    report = verify_corpus(CorpusSpec.exhaustive(n_max), list(TheoremId), jobs=4)
    print(f"{len(report.entries)} graphs with n <= {n_max} in {time.perf_counter() - t0:.1f}s\n")
    print(f"{'statement':<18} {'HOLDS':>6} {'VACUOUS':>8} {'SKIPPED':>8} {'COUNTER':>8}")
    for name, c in report.summary().items():
        print(f"{name:<18} {c['HOLDS']:>6} {c['VACUOUS']:>8} {c['SKIPPED']:>8} {c['COUNTEREXAMPLE']:>8}")
    print()
    for tid in TheoremId:
        print(f"{tid.value}: {STATEMENTS[tid]}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 6)
