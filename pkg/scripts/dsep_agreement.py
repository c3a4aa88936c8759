"""Cross-check the two d-separation procedures (trail enumeration against
reachability) on every singleton query for small n plus random larger graphs."""
import argparse
import random
import time

from mintrails.verify import GenSpec, dsep_agreement, generate


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--random-graphs", type=int, default=1000)
    ap.add_argument("--random-max-n", type=int, default=12)
    ap.add_argument("--seed", type=int, default=20240501)
    a = ap.parse_args()

    for n in range(1, a.max_n + 1):
        t0 = time.perf_counter()
        q = bad = 0
        for d in generate(GenSpec.exhaustive(n)):
            c, b = dsep_agreement(d)
            q += c
            bad += len(b)
        print(f"exhaustive n={n}: {q} queries, {bad} disagreements, "
              f"{time.perf_counter() - t0:.1f}s")

    rng = random.Random(a.seed)
    t0 = time.perf_counter()
    q = bad = 0
    for _ in range(a.random_graphs):
        n = rng.randint(2, a.random_max_n)
        p = rng.uniform(0.1, 0.45)
        (d,) = generate(GenSpec.random(n, p, seed=rng.randrange(2**32), count=1))
        qs = []
        for _ in range(10):
            x, y = rng.sample(range(n), 2)
            z = sum(1 << v for v in range(n) if v not in (x, y) and rng.random() < 0.3)
            qs.append((x, y, z))
        c, b = dsep_agreement(d, qs)
        q += c
        bad += len(b)
    print(f"random: {a.random_graphs} graphs, {q} queries, {bad} disagreements, "
          f"{time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
