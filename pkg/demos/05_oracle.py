"""Cross-check the constructions against explicit groups of order at most 128."""

from __future__ import annotations

import time

from charlat.oracle import p_group_signatures, verify_against_formulas

t0 = time.perf_counter()
for s in p_group_signatures(128, [2, 3, 5]):
    report = verify_against_formulas(s)
    failed = [c["name"] for c in report["checks"] if not c["pass"]]
    print(f"p={s.p} {str(s):14s} {'ok' if not failed else failed}")
print(f"{time.perf_counter() - t0:.1f}s")
