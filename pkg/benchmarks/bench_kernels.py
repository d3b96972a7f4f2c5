"""Time the compiled and pure-Python kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--primes 101 211 401] [--repeat 3]
"""

import argparse
import time

import numpy as np

from ffhyp import kernels


def _best(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def workloads(p):
    coeffs = [((-1 - l) % p, l, 0) for l in range(2, min(p, 40))]
    return {
        "legendre_traces": lambda: kernels.legendre_traces(p),
        "torsion_count x38": lambda: [kernels.torsion_count(p, *c, 4) for c in coeffs],
        "weierstrass_classes": lambda: kernels.weierstrass_classes(p),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", type=int, nargs="+", default=[101, 211, 401])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernels not built; only the python backend is timed")
    original = kernels.BACKEND
    print(f"{'kernel':<22}{'p':>6}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    try:
        for p in args.primes:
            for name in workloads(p):
                times, results = {}, {}
                for b in backends:
                    kernels.use_backend(b)
                    times[b], results[b] = _best(workloads(p)[name], args.repeat)
                if len(backends) == 2:
                    a, c = results["python"], results["cython"]
                    assert np.array_equal(np.asarray(a), np.asarray(c)), f"{name} disagrees at p={p}"
                speed = times["python"] / times["cython"] if "cython" in times else float("nan")
                print(f"{name:<22}{p:>6}" + "".join(f"{times[b]:>11.4f}s" for b in backends)
                      + f"{speed:>9.1f}x")
    finally:
        kernels.use_backend(original)


if __name__ == "__main__":
    main()
