"""Compare the compiled kernels with the pure-Python fallback on the same inputs.

Run: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import time

from wrtwist import _kernels_py as py

try:
    from wrtwist import _kernels as cy
except ImportError:
    cy = None


def _cases():
    rng = random.Random(0)
    xs = [rng.uniform(-50, 50) for _ in range(20000)]
    ys = [rng.uniform(1e-3, 5) for _ in range(20000)]
    return [
        ("sqrt_residues(8009, 2000)", lambda k: k.sqrt_residues(8009, 2000)),
        ("box_min_abs_form(6, 5, -7, 120)", lambda k: k.box_min_abs_form(6, 5, -7, 120)),
        ("good_basis_keys(1, 1, -50, 201, 40)", lambda k: k.good_basis_keys(1, 1, -50, 201, 40)),
        ("reduce_points(20000)", lambda k: k.reduce_points(xs, ys)),
    ]


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if cy is None:
        print("compiled kernels not built; only the Python backend is available")
    print(f"{'kernel':40s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for name, call in _cases():
        tp = _time(lambda: call(py), args.repeat)
        if cy is None:
            print(f"{name:40s} {tp:10.4f} {'-':>10s} {'-':>8s}")
            continue
        if call(py) != call(cy):
            raise SystemExit(f"{name}: backends disagree")
        tc = _time(lambda: call(cy), args.repeat)
        print(f"{name:40s} {tp:10.4f} {tc:10.4f} {tp / tc:8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
