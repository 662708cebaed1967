"""Compare the compiled and numpy regular-trace kernels.

    python3 benchmarks/bench_kernel.py [--n 7] [--words 20] [--length 14]
"""
from __future__ import annotations

import argparse
import random
import time

from heckechar import kernel
from heckechar.hecke import basis_tables


def bench(n: int, words: int, length: int, seed: int) -> dict[str, float]:
    tb = basis_tables(n)
    rng = random.Random(seed)
    batch = [tuple(rng.randint(1, n - 1) for _ in range(length)) for _ in range(words)]
    timings = {}
    reference = None
    for backend in kernel.available_backends():
        t0 = time.perf_counter()
        results = [kernel.word_trace(w, tb.lmul, tb.ldesc, backend) for w in batch]
        timings[backend] = time.perf_counter() - t0
        if reference is None:
            reference = results
        elif results != reference:
            raise SystemExit(f"backend {backend} disagrees with {kernel.available_backends()[0]}")
    return timings


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=7)
    ap.add_argument("--words", type=int, default=20)
    ap.add_argument("--length", type=int, default=14)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    timings = bench(args.n, args.words, args.length, args.seed)
    print(f"n={args.n}  {args.words} words of length {args.length}")
    for backend, t in timings.items():
        print(f"  {backend:>7}: {t:8.3f} s  ({t / args.words * 1e3:.1f} ms/word)")
    if "cython" in timings:
        print(f"  speedup: {timings['numpy'] / timings['cython']:.1f}x")


if __name__ == "__main__":
    main()
