"""Evaluate the theorem conclusions on graphs that DO contain an active cycle.

The results assume no active cycles, so failures here are expected; they show
the checks can fail and which conclusions depend on the assumption.
"""
import argparse

from mintrails.structure import has_active_cycle
from mintrails.verify import CHECKS, CheckReport, GenSpec, generate


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=4)
    n = ap.parse_args().n
    graphs = [d for d in generate(GenSpec.exhaustive(n)) if has_active_cycle(d)]
    print(f"{len(graphs)} graphs on {n} nodes with an active cycle")
    for name, check in CHECKS.items():
        rep = CheckReport(name)
        for d in graphs:
            rep.merge(check(d, strict=False))
        example = rep.failures[0] if rep.failures else None
        print(f"{name:24s} instances={rep.instances:7d} failures={rep.failure_count:6d}")
        if example:
            print(f"    e.g. {example.clause} on {example.graph['edges']} {example.query} "
                  f"{example.detail}")


if __name__ == "__main__":
    main()
