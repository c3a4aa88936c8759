"""Run the theorem checks over every DAG on n nodes (or a random batch) and
write a JSON report.

    python scripts/sweep.py --n 5 --out results/sweep_n5.json
"""
import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from mintrails.verify import CHECKS, GenSpec, run_suite


@dataclass
class SweepConfig:
    n: int = 5
    mode: str = "exhaustive"
    p: float = 0.4
    seed: int = 0
    count: int = 200
    strict: bool = True
    checks: tuple = tuple(CHECKS)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    ap.add_argument("--p", type=float, default=0.4)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--lax", action="store_true", help="also evaluate graphs with active cycles")
    ap.add_argument("--out", type=Path)
    a = ap.parse_args()
    cfg = SweepConfig(a.n, a.mode, a.p, a.seed, a.count, strict=not a.lax)

    spec = GenSpec(cfg.mode, cfg.n, p=cfg.p, seed=cfg.seed, count=cfg.count)
    t0 = time.perf_counter()

    def tick(serial):
        if serial % 5000 == 0:
            print(f"  graph {serial} ({time.perf_counter() - t0:.0f}s)", file=sys.stderr)

    reports = run_suite(spec, cfg.checks, strict=cfg.strict, progress=tick)
    out = {
        "config": asdict(cfg),
        "seconds": round(time.perf_counter() - t0, 1),
        "checks": [r.to_dict() for r in reports],
    }
    for r in reports:
        print(f"{r.name:24s} graphs={r.graphs:6d} skipped={r.graphs_skipped:6d} "
              f"instances={r.instances:8d} skipped={r.instances_skipped:8d} "
              f"failures={r.failure_count}")
    print(f"{out['seconds']}s")
    if a.out:
        a.out.parent.mkdir(parents=True, exist_ok=True)
        a.out.write_text(json.dumps(out, indent=1))
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
