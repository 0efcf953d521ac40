"""Time the matching stage (sections + flow network + Edmonds-Karp) as n grows."""

import argparse
import math
import random
import time

import numpy as np

from dbextend.graph import GraphParams, generate_de_bruijn, sequence_to_cycle
from dbextend.matching import perfect_matching, sections_of


def time_matching(k, n, repeats=5):
    seq = generate_de_bruijn(k, n, rng=random.Random(n))
    sec = sections_of(sequence_to_cycle(seq, GraphParams(k, n - 1)))
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        mr = perfect_matching(sec)
        best = min(best, time.perf_counter() - t0)
    assert mr.flow_value == k ** (n - 1)
    return best


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--n", type=int, nargs="+", default=[3, 4, 5, 6, 7, 8, 9])
    a = p.parse_args()
    ts = []
    for n in a.n:
        t = time_matching(a.k, n)
        ts.append(t)
        print(f"k={a.k} n={n} sections={a.k ** (n - 1):>6} time={t * 1e3:9.3f} ms")
    slope = np.polyfit(a.n, np.log(ts), 1)[0]
    print(f"log-time slope per unit n: {slope:.3f}  (k^(3n-2) bound: {3 * math.log(a.k):.3f})")


if __name__ == "__main__":
    main()
