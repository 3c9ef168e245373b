"""Compare the compiled and pure-Python kernels on the enumeration hot paths.

    python benchmarks/bench_kernels.py [--n 8] [--repeat 3]
"""

import argparse
import time

from naples import _backend, area_distribution, count_npf_permsum, fiber_gf_direct
from naples.oracle import oracle_count

WORKLOADS = {
    "count_npf_permsum": lambda n: count_npf_permsum(n, 2, max_n=n),
    "fiber_gf_direct": lambda n: fiber_gf_direct(n, 2, max_n=n),
    "area_distribution": lambda n: area_distribution(n, 2, max_n=n),
    "oracle_count": lambda n: oracle_count(min(n, 7), 2, max_n=8),
}


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=8)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = _backend.available()
    print(f"n={args.n}  backends={backends}")
    print(f"{'workload':<20}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for label, work in WORKLOADS.items():
        timings, results = [], []
        for backend in backends:
            with _backend.using(backend):
                t, r = best_of(lambda: work(args.n), args.repeat)
            timings.append(t)
            results.append(r)
        if len({repr(r) for r in results}) != 1:
            raise SystemExit(f"{label}: backends disagree")
        speedup = f"{timings[-1] / timings[0]:.1f}x" if len(timings) > 1 else "-"
        print(f"{label:<20}" + "".join(f"{t:>11.3f}s" for t in timings) + f"{speedup:>10}")


if __name__ == "__main__":
    main()
