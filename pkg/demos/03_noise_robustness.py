"""Compare how much clean accuracy each model of a finished run loses under
noise, per corruption kind and severity.

    python3 demos/03_noise_robustness.py runs/seed0
"""
import csv
import sys
from collections import defaultdict
from pathlib import Path

run = Path(sys.argv[1] if len(sys.argv) > 1 else "demos_out/tiny_run")
rows = list(csv.DictReader(open(run / "metrics.csv", newline="")))
clean = {r["checkpoint"]: float(r["miou"]) for r in rows if r["corruption"] == "clean"}

drops = defaultdict(dict)
for r in rows:
    if r["corruption"] != "clean":
        drops[(r["corruption"], int(r["severity"]))][r["checkpoint"]] = 100 * (clean[r["checkpoint"]] - float(r["miou"]))

models = list(clean)
print(f"{'corruption':<12}{'sev':>4}  " + "".join(f"{m:>15}" for m in models))
print(f"{'clean mIoU':<16}  " + "".join(f"{100 * clean[m]:>15.1f}" for m in models))
for (kind, sev), d in sorted(drops.items()):
    print(f"{kind:<12}{sev:>4}  " + "".join(f"{d[m]:>15.1f}" for m in models))
print("\n(values are mIoU points lost relative to the same model on clean images)")
