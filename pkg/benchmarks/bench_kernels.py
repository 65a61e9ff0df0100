"""Compare the compiled and pure-Python root-isolation kernels.

Run with ``python3 benchmarks/bench_kernels.py``. Both backends are timed on
the same integer polynomials; results must agree exactly.
"""

from __future__ import annotations

import argparse
import random
import timeit

from acrkit import _kernels_py

try:
    from acrkit import _kernels
except ImportError:  # extension not built
    _kernels = None


def workload(seed: int, count: int, degree: int) -> list[list[int]]:
    rng = random.Random(seed)
    polys = []
    for _ in range(count):
        # products of linear factors with roots in (0, 1) make the bisection work hard
        roots = [(rng.randint(1, 63), 64) for _ in range(degree)]
        coeffs = [1]
        for num, den in roots:
            coeffs = [a * -num + b * den for a, b in zip(coeffs + [0], [0] + coeffs)]
        polys.append(coeffs)
    return polys


def run(impl, polys):
    return [impl.vca_isolate(p) for p in polys]


def main(argv=None) -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--degree", type=int, default=6)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    polys = workload(args.seed, args.count, args.degree)
    backends = [("python", _kernels_py)] + ([("cython", _kernels)] if _kernels is not None else [])
    results = {}
    for name, impl in backends:
        results[name] = run(impl, polys)
        best = min(timeit.repeat(lambda: run(impl, polys), number=1, repeat=args.repeat))
        print(f"{name:>7}: {best * 1e3:9.2f} ms for {len(polys)} polynomials of degree {args.degree}")
    if len(results) == 2:
        assert results["python"] == results["cython"], "backends disagree"
        print("backends agree on every isolating interval")
    else:
        print("compiled extension unavailable; only the pure-Python kernel was timed")


if __name__ == "__main__":
    main()
