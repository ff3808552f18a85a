"""Compare the compiled and pure-Python kernels on representative workloads.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each workload is run on both backends and the results are checked for
equality before timings are reported.
"""
import argparse
import random
import sys
import timeit

from assocforms.kernels import get_backend
from assocforms.poly import pack
from assocforms.scalars import QQ

PRIME = 2147483629


def random_terms(r, nvars, degree, count):
    terms = {}
    while len(terms) < count:
        cut = sorted(r.randint(0, degree) for _ in range(nvars - 1))
        exps = [b - a for a, b in zip([0] + cut, cut + [degree])]
        terms[pack(exps, nvars)] = QQ(r.randint(-99, 99) or 1, r.randint(1, 9))
    return terms


def random_matrix(r, rows, cols):
    return [[r.randrange(PRIME) for _ in range(cols)] for _ in range(rows)]


def workloads():
    r = random.Random(2024)
    a, b = random_terms(r, 6, 5, 200), random_terms(r, 6, 4, 120)
    wide = random_matrix(r, 120, 300)
    square = random_matrix(r, 150, 150)
    return [
        ("mul_terms 200x120 terms", "mul_terms", (a, b)),
        ("rref_mod 120x300", "rref_mod", (wide, PRIME)),
        ("det_mod 150x150", "det_mod", (square, PRIME)),
    ]


def _same(x, y):
    if isinstance(x, tuple):
        return x[0].tolist() == y[0].tolist() and list(x[1]) == list(y[1])
    return x == y


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    py = get_backend("python")
    try:
        cy = get_backend("cython")
    except ImportError:
        print("the compiled extension is not built; only the Python backend is available")
        return 1
    print(f"{'workload':28} {'python':>11} {'cython':>11} {'speedup':>8}")
    for label, fn, fargs in workloads():
        fp, fc = getattr(py, fn), getattr(cy, fn)
        if not _same(fp(*fargs), fc(*fargs)):
            print(f"{label}: backends disagree")
            return 1
        tp = min(timeit.repeat(lambda: fp(*fargs), number=1, repeat=args.repeat))
        tc = min(timeit.repeat(lambda: fc(*fargs), number=1, repeat=args.repeat))
        print(f"{label:28} {tp * 1e3:9.2f}ms {tc * 1e3:9.2f}ms {tp / tc:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
