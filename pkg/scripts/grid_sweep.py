"""Extend seeded random de Bruijn sequences across a (k, n) grid and tabulate the gaps."""

import argparse
import random
import time
from dataclasses import dataclass, field

from dbextend.extender import extend
from dbextend.graph import generate_de_bruijn
from dbextend.verifier import verify_extension


@dataclass
class SweepConfig:
    ks: list[int] = field(default_factory=lambda: [2, 3, 4])
    ns: list[int] = field(default_factory=lambda: [2, 3, 4, 5, 6])
    inputs: int = 10
    max_len: int = 10**6
    seed: int = 0


def longest_gap(w, s):
    best = run = 0
    for a in w + w:
        run = 0 if a == s else run + 1
        best = max(best, run)
    return min(best, len(w))


def run(cfg: SweepConfig):
    print(f"{'k':>2} {'n':>2} {'|w|':>8} {'inputs':>6} {'bound':>5} {'worst gap':>9} {'max petal':>9} {'secs':>7}")
    for k in cfg.ks:
        for n in cfg.ns:
            if (k + 1) ** n > cfg.max_len:
                continue
            rng = random.Random(cfg.seed * 1000 + 10 * k + n)
            t0 = time.perf_counter()
            worst = 0
            petal = 0
            for _ in range(cfg.inputs):
                start = tuple(rng.randrange(k) for _ in range(n - 1))
                v = generate_de_bruijn(k, n, start=start, rng=rng)
                r = extend(v, k, n)
                assert verify_extension(v, r.output, k, n).passed
                worst = max(worst, longest_gap(r.output, k))
                petal = max(petal, max(i.petal_len for i in r.insertions))
            dt = time.perf_counter() - t0
            print(f"{k:>2} {n:>2} {(k + 1) ** n:>8} {cfg.inputs:>6} {n + 2 * k - 2:>5} {worst:>9} {petal:>9} {dt:>7.2f}")


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--k", type=int, nargs="+", default=[2, 3, 4])
    p.add_argument("--n", type=int, nargs="+", default=[2, 3, 4, 5, 6])
    p.add_argument("--inputs", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    a = p.parse_args()
    run(SweepConfig(ks=a.k, ns=a.n, inputs=a.inputs, seed=a.seed))


if __name__ == "__main__":
    main()
