"""obn(K_n) for small n, with the number of orientations actually examined.

    python3 scripts/complete_ladder.py --max-n 8
"""

import argparse
import time

from obnkit import families as F
from obnkit.solver import obn_exact


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=8)
    args = ap.parse_args()
    print(f"{'n':>3} {'m':>4} {'obn':>4} {'explored':>10} {'2^m':>12} {'secs':>7}")
    for n in range(1, args.max_n + 1):
        g = F.complete(n)
        t0 = time.perf_counter()
        r = obn_exact(g, budget=max(g.m, 1))
        print(f"{n:>3} {g.m:>4} {r.value:>4} {r.explored:>10} {1 << g.m:>12} {time.perf_counter() - t0:>7.2f}")


if __name__ == "__main__":
    main()
