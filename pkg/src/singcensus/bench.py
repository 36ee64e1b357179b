"""Benchmark the compiled basis kernel against the pure-Python fallback.

Runs the same census-style workload -- singular-locus dimension and degree
for a batch of random degree-l forms -- through both kernels and prints a
small table with per-form timings and the speedup.  The two kernels must
produce identical results on every form; a mismatch aborts the benchmark.

Usage::

    python -m singcensus.bench [--n 3] [--l 3] [--p 5] [--trials 40] [--seed 1]
"""

import argparse
import time

from .algebra.field import PrimeField
from .algebra.poly import GradedSpace
from .control import trial_rng
from .groebner import kernel, kernel_pure, sing_dim_deg


def _workload(n, l, p, trials, seed):
    field = PrimeField(p)
    space = GradedSpace(field, n + 1, l, GradedSpace.HOMOGENEOUS)
    rng = trial_rng(seed, 0)
    return [space.sample_nonzero(rng) for _ in range(trials)]


def _run(forms, engine):
    saved = kernel.reduced_groebner, kernel.normal_form
    if engine == "pure":
        kernel.reduced_groebner = kernel_pure.reduced_groebner
        kernel.normal_form = kernel_pure.normal_form
    try:
        results = []
        start = time.perf_counter()
        for f in forms:
            results.append(sing_dim_deg(f))
        elapsed = time.perf_counter() - start
    finally:
        kernel.reduced_groebner, kernel.normal_form = saved
    return results, elapsed


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="python -m singcensus.bench", description=__doc__.splitlines()[0]
    )
    parser.add_argument("--n", type=int, default=3)
    parser.add_argument("--l", type=int, default=3)
    parser.add_argument("--p", type=int, default=5)
    parser.add_argument("--trials", type=int, default=40)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args(argv)

    forms = _workload(args.n, args.l, args.p, args.trials, args.seed)
    active = kernel.kernel_name()
    print(
        f"workload: {args.trials} random degree-{args.l} forms in "
        f"P^{args.n} over F_{args.p} (seed {args.seed})"
    )
    print(f"compiled kernel available: {active == 'fast'}")

    fast_results = fast_elapsed = None
    if active == "fast":
        fast_results, fast_elapsed = _run(forms, "fast")
        per = 1000 * fast_elapsed / args.trials
        print(f"fast kernel: {fast_elapsed:.3f}s total, {per:.2f} ms/form")
    pure_results, pure_elapsed = _run(forms, "pure")
    per = 1000 * pure_elapsed / args.trials
    print(f"pure kernel: {pure_elapsed:.3f}s total, {per:.2f} ms/form")

    if fast_results is not None:
        if fast_results != pure_results:
            print("MISMATCH between kernels; aborting")
            return 1
        print(f"results identical; speedup {pure_elapsed / fast_elapsed:.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
