"""Compare the compiled term-arithmetic kernel against the pure-Python one.

Two views: raw kernel operations on synthetic sparse polynomials, and an
end-to-end verification sweep (the symplectic/orthogonal spectrum duality),
run once per available backend.

    python3 benchmarks/bench_kernels.py --repeat 5 --max-weight 4
"""

import argparse
import random
import time
from fractions import Fraction

from negdim import casimir, kernels


def synthetic_poly(rng, width, terms, max_exp):
    out = {}
    while len(out) < terms:
        exps = tuple(rng.randint(0, max_exp) for _ in range(width))
        out[exps] = Fraction(rng.randint(-99, 99), rng.randint(1, 9))
    return out


def bench_kernel_ops(repeat, terms):
    rng = random.Random(7)
    a = synthetic_poly(rng, 3, terms, 6)
    b = synthetic_poly(rng, 3, terms, 6)
    rows = []
    for op_name, op in [("poly_add", kernels.poly_add),
                        ("poly_mul", kernels.poly_mul)]:
        best = min(_time_once(op, a, b) for _ in range(repeat))
        rows.append((op_name, best))
    return rows


def _time_once(fn, *args):
    start = time.perf_counter()
    fn(*args)
    return time.perf_counter() - start


def bench_end_to_end(repeat, max_weight):
    best = None
    for _ in range(repeat):
        start = time.perf_counter()
        report = casimir.verify_sp_so(max_weight)
        elapsed = time.perf_counter() - start
        if not report.all_ok:
            raise SystemExit("verification failed during benchmarking")
        best = elapsed if best is None else min(best, elapsed)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--terms", type=int, default=250,
                        help="terms per synthetic polynomial")
    parser.add_argument("--max-weight", type=int, default=4,
                        help="sweep size for the end-to-end benchmark")
    args = parser.parse_args()

    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)}")
    if len(backends) == 1:
        print("compiled kernel not built; timing the fallback only")

    results = {}
    active = kernels.active_backend()
    try:
        for name in backends:
            kernels.set_backend(name)
            ops = bench_kernel_ops(args.repeat, args.terms)
            sweep = bench_end_to_end(args.repeat, args.max_weight)
            results[name] = (ops, sweep)
    finally:
        kernels.set_backend(active)

    print()
    print(f"{'operation':24s}" + "".join(f"{name:>12s}" for name in backends))
    op_names = [row[0] for row in next(iter(results.values()))[0]]
    for i, op_name in enumerate(op_names):
        line = f"{op_name + f' ({args.terms} terms)':24s}"
        for name in backends:
            line += f"{results[name][0][i][1] * 1e3:10.2f}ms"
        print(line)
    line = f"{f'sp-so sweep (w<={args.max_weight})':24s}"
    for name in backends:
        line += f"{results[name][1] * 1e3:10.2f}ms"
    print(line)

    if len(backends) > 1:
        base = results["python"][1]
        fast = results["cython"][1]
        print()
        print(f"end-to-end speedup cython vs python: {base / fast:.2f}x")


if __name__ == "__main__":
    main()
