"""Run the whole pipeline on a shrunken config (about a minute on one core) and
print the resulting report.

The numbers from a run this small are noise; the point is to see every
artifact the full experiment produces. For the real thing use

    texinv all --out runs/seed0 --seed 0

    python3 demos/02_tiny_experiment.py [run_dir]
"""
import sys
from pathlib import Path

from texinv.config import parse_config
from texinv.pipeline import STAGES, run_pipeline

TINY = """
data.n_source = 12
data.n_target_train = 12
data.n_target_val = 6
style.bank_size = 4
stage1.max_iter = 40
stage2.iters_per_round = 10
eval.severities = 1, 3, 5
"""

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demos_out/tiny_run")
cfg = parse_config(TINY)
manifest = run_pipeline(cfg, STAGES, out)

print(f"run directory: {out}")
for stage in STAGES:
    print(f"  {stage:<13} {manifest.seconds.get(stage, 0.0):6.1f}s")
print()
print((out / "report.md").read_text())
print("running it again reuses everything:")
run_pipeline(cfg, STAGES, out)
