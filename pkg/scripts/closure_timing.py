"""Wall-clock comparison of the two closure implementations.

closure_iterative sums explicit powers and serves as the oracle in the
tests; closure_block is the shipping divide-and-conquer version. Both
are exact, so the only interesting difference is time.

Usage: python3 scripts/closure_timing.py [--sizes 4,8,16,32] [--seed 11]
"""

import argparse
import random
import time

from tropalg import closure_block, closure_iterative, Z_MIN_PLUS
from tropalg.semiring import ExtScalar
from tropalg.trmatrix import TropMatrix


def random_distance_matrix(rng: random.Random, n: int) -> TropMatrix:
    rows = [
        [
            Z_MIN_PLUS.zero() if rng.random() < 0.2 else ExtScalar.of(rng.randint(0, 9))
            for _ in range(n)
        ]
        for _ in range(n)
    ]
    return TropMatrix.from_rows(rows, Z_MIN_PLUS)


def clock(fn, m) -> float:
    start = time.perf_counter()
    fn(m)
    return time.perf_counter() - start


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="4,8,16,32")
    ap.add_argument("--seed", type=int, default=11)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    print(f"{'n':>5} {'block (s)':>10} {'iterative (s)':>14}")
    for n in (int(s) for s in args.sizes.split(",")):
        m = random_distance_matrix(rng, n)
        t_block = clock(closure_block, m)
        t_iter = clock(closure_iterative, m)
        print(f"{n:>5} {t_block:>10.4f} {t_iter:>14.4f}")


if __name__ == "__main__":
    main()
