#!/usr/bin/env python3
"""Benchmark the two arithmetic lanes on the package's hot paths.

Runs the current lane by default; `--compare` re-executes itself once per
lane (GQ_KERNEL=pure / GQ_KERNEL=cython) and prints both columns.

    python benchmarks/bench_kernels.py --compare
"""

import argparse
import json
import os
import subprocess
import sys
import time


def bench_workloads(repeat):
    from greenquadrics import (
        IDENTITY,
        Hyperplane,
        bell_residual,
        chart_eval,
        classify_affine_quadric,
        classify_section,
        inverse_chart,
        natural_le,
        restrict_quadric,
    )
    from greenquadrics.sampling import (
        rand_invertible,
        rand_mat,
        rand_rank1,
        rand_rational,
        rng_for,
    )
    from greenquadrics.semigroup import minus_le

    timings = {}

    def timed(name, fn, n):
        start = time.perf_counter()
        fn(n)
        timings[name] = time.perf_counter() - start

    def mat_products(n):
        mats = [rand_mat(rng_for(1, i)) for i in range(200)]
        acc = IDENTITY
        for i in range(n):
            acc = mats[i % 200] @ mats[(3 * i + 1) % 200]

    def cayley_hamilton(n):
        for i in range(n):
            a = rand_mat(rng_for(2, i))
            assert (a @ a - a * a.trace() + IDENTITY * a.det()).is_zero()

    def residual_sweep(n):
        for i in range(n):
            rng = rng_for(3, i)
            assert bell_residual(rand_rank1(rng)) == 0

    def chart_sweep(n):
        for i in range(n):
            rng = rng_for(4, i)
            a = rand_rank1(rng)
            chart = inverse_chart(a)
            for _ in range(10):
                chart_eval(chart, rand_rational(rng), rand_rational(rng))

    def classify_sweep(n):
        for i in range(n):
            rng = rng_for(5, i)
            a = rand_invertible(rng) if i % 2 else rand_rank1(rng)
            lam = rand_rational(rng, 3, 2)
            classify_section(a, lam)
            classify_affine_quadric(restrict_quadric(Hyperplane(a, lam)))

    def order_sweep(n):
        for i in range(n):
            rng = rng_for(6, i)
            x, y = rand_rank1(rng), rand_invertible(rng)
            assert natural_le(x, y) == minus_le(x, y)

    timed("mat_products", mat_products, 20000 * repeat)
    timed("cayley_hamilton", cayley_hamilton, 4000 * repeat)
    timed("bell_residual", residual_sweep, 4000 * repeat)
    timed("inverse_charts", chart_sweep, 600 * repeat)
    timed("section_classify", classify_sweep, 300 * repeat)
    timed("natural_order", order_sweep, 1500 * repeat)
    return timings


def run_self(lane, repeat):
    env = dict(os.environ, GQ_KERNEL=lane)
    proc = subprocess.run(
        [sys.executable, __file__, "--json", "--repeat", str(repeat)],
        capture_output=True,
        text=True,
        env=env,
    )
    if proc.returncode != 0:
        raise RuntimeError(f"lane {lane} failed:\n{proc.stderr}")
    return json.loads(proc.stdout)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--compare", action="store_true", help="run both lanes")
    parser.add_argument("--repeat", type=int, default=1, help="workload multiplier")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    args = parser.parse_args()

    if args.compare:
        pure = run_self("pure", args.repeat)
        try:
            fast = run_self("cython", args.repeat)
        except RuntimeError as exc:
            print(f"compiled lane unavailable ({exc}); pure timings only")
            fast = None
        print(f"{'workload':<20}{'pure [s]':>12}{'cython [s]':>12}{'speedup':>10}")
        for name, t_pure in pure["timings"].items():
            if fast:
                t_fast = fast["timings"][name]
                print(f"{name:<20}{t_pure:>12.3f}{t_fast:>12.3f}{t_pure / t_fast:>9.1f}x")
            else:
                print(f"{name:<20}{t_pure:>12.3f}{'-':>12}{'-':>10}")
        return

    from greenquadrics import LANE

    timings = bench_workloads(args.repeat)
    if args.json:
        print(json.dumps({"lane": LANE, "timings": timings}))
    else:
        print(f"lane: {LANE}")
        for name, t in timings.items():
            print(f"  {name:<20}{t:.3f} s")


if __name__ == "__main__":
    main()
