#!/usr/bin/env python3
"""Run the seeded theorem-verification suite and summarize the reports.

The same registry backs the command line: `kreinalg verify --seed 42`.
Run directly: python3 demos/06_theorem_verification.py
"""

from kreinalg import run_lemma_suite

reports = run_lemma_suite(seed=42, dims=(2, 3, 4), instances=3)

width = max(len(r.lemma_id) for r in reports)
print(f"{'lemma':<{width}}  {'status':<6}  {'max error':>11}  {'tolerance':>9}  instances")
for r in reports:
    print(f"{r.lemma_id:<{width}}  {r.status:<6}  {r.max_error:>11.3e}  {r.tolerance:>9.1e}  {r.instances}")

failed = [r.lemma_id for r in reports if r.status != "pass"]
print()
print(f"{len(reports)} lemmas checked, {len(failed)} failing", f"-> {failed}" if failed else "")
