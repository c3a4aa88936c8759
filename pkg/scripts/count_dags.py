"""Compare the generator's output size with the labelled-DAG recurrence, and
report how many graphs are free of active cycles."""
import argparse
import time

from mintrails.structure import has_active_cycle
from mintrails.verify import GenSpec, generate, labeled_dag_count


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=5)
    n_max = ap.parse_args().max_n
    print(f"{'n':>2} {'generated':>10} {'recurrence':>10} {'no active cycle':>16} {'sec':>6}")
    for n in range(1, n_max + 1):
        t0 = time.perf_counter()
        total = free = 0
        for d in generate(GenSpec.exhaustive(n)):
            total += 1
            free += not has_active_cycle(d)
        print(f"{n:>2} {total:>10} {labeled_dag_count(n):>10} {free:>16} "
              f"{time.perf_counter() - t0:>6.1f}")


if __name__ == "__main__":
    main()
