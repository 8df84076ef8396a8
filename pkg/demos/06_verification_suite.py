#!/usr/bin/env python3
# Run the whole verification suite and write the JSON verdict report.

import sys

from uct import run_suite
from uct.theorem_checker import report_json

verdicts = run_suite()
for v in verdicts:
    flag = "PASS" if v.passed else "FAIL"
    print(f"{flag}  {v.claim_id:32s} {v.spec:10s} {v.millis:8.1f} ms")

out = sys.argv[1] if len(sys.argv) > 1 else "verdicts.json"
with open(out, "w") as fh:
    fh.write(report_json(verdicts))
print(f"\n{sum(v.passed for v in verdicts)}/{len(verdicts)} checks passed; "
      f"report written to {out}")
