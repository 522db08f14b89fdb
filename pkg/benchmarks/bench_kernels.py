"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat N]

Micro-benchmarks multiply random sparse polynomials shaped like the ones the
greedy recurrence produces (exponents on a stride, integer coefficients).
The end-to-end rows recompute greedy elements from cold caches.
"""
import argparse
import random
import timeit

from qgreedy import greedy, kernels
from qgreedy.qbinom import cache_clear as clear_qbinom
from qgreedy.torus import AlgebraParams


def _poly(rng, n, stride, bits):
    return {stride * i: rng.getrandbits(bits) - (1 << (bits - 1)) for i in range(-n, n + 1)}


def _torus(rng, n):
    return {(rng.randint(-4, 4), rng.randint(-4, 4)): _poly(rng, 6, 2, 20) for _ in range(n)}


def _cold_compute(base, params):
    greedy.compute.cache_clear()
    clear_qbinom()
    greedy.compute(base, params)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)

    rng = random.Random(0)
    cases = []
    for n, bits in ((10, 16), (100, 16), (400, 40), (200, 100)):
        a, b = _poly(rng, n, 2, bits), _poly(rng, n // 2, 6, bits)
        cases.append((f"poly_mul {2 * n + 1}x{n + 1} ({bits}-bit)",
                      lambda a=a, b=b: kernels.poly_mul(a, b)))
    A, B = _torus(rng, 20), _torus(rng, 20)
    cases.append(("torus_mul 20x20 monomials", lambda: kernels.torus_mul(A, B)))
    for bc, base in (((2, 2), (5, 5)), ((2, 3), (6, 24)), ((1, 4), (4, 6))):
        params = AlgebraParams(*bc)
        cases.append((f"greedy X[{base[0]},{base[1]}] at (b,c)={bc}",
                      lambda base=base, params=params: _cold_compute(base, params)))

    backends = kernels.available_backends()
    original = kernels.BACKEND
    print(f"{'case':<42}" + "".join(f"{name:>12}" for name in backends) + f"{'speedup':>10}")
    try:
        for label, fn in cases:
            times = {}
            for name in backends:
                kernels.set_backend(name)
                times[name] = min(timeit.repeat(fn, number=1, repeat=args.repeat))
            row = f"{label:<42}" + "".join(f"{times[n] * 1e3:>10.2f}ms" for n in backends)
            if "cython" in times:
                row += f"{times['python'] / times['cython']:>9.1f}x"
            print(row)
    finally:
        kernels.set_backend(original)


if __name__ == "__main__":
    main()
