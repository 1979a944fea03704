"""Time the compiled and pure-Python Jacobi kernels on Cayley adjacency matrices.

    python3 benchmarks/bench_kernels.py [--group semidihedral(8)] [--matrices 50] [--repeat 3]
"""
import argparse
import random
import statistics
import sys
import time

import numpy as np

from mixcayley import kernels
from mixcayley.group import parse_group_spec, split_connection_set
from mixcayley.spectrum import adjacency, numeric_spectrum


def matrices(spec, count, seed):
    G = parse_group_spec(spec)
    rng = random.Random(seed)
    return [adjacency(G, split_connection_set(G, rng.randrange(1 << (G.order - 1))))
            for _ in range(count)]


def per_matrix_us(kernel, mats, repeat):
    runs = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        for M in mats:
            numeric_spectrum(M, kernel=kernel)
        runs.append((time.perf_counter() - t0) / len(mats) * 1e6)
    return min(runs), statistics.median(runs)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--group", default="semidihedral(8)")
    p.add_argument("--matrices", type=int, default=50)
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)

    mats = matrices(args.group, args.matrices, args.seed)
    n = mats[0].shape[0]
    backends = [("python", kernels.fallback.jacobi_sweeps)]
    if kernels.compiled is not None:
        backends.append(("cython", kernels.compiled.jacobi_sweeps))
    else:
        print("compiled kernel not built; timing the fallback only", file=sys.stderr)

    results = {}
    for name, kernel in backends:
        results[name] = per_matrix_us(kernel, mats, args.repeat)
        print(f"{name:<7} {n}x{n}  best {results[name][0]:9.1f} us   "
              f"median {results[name][1]:9.1f} us  per matrix")
    if len(results) == 2:
        print(f"speed-up {results['python'][0] / results['cython'][0]:.1f}x")
        ref = [np.linalg.eigvalsh(M) for M in mats]
        worst = max(np.max(np.abs(np.array(numeric_spectrum(M, kernel=k)) - w))
                    for _, k in backends for M, w in zip(mats, ref))
        print(f"max deviation from LAPACK {worst:.2e}")


if __name__ == "__main__":
    main()
