"""Compare the numba and numpy kernels on hull and face-lattice workloads.

    python benchmarks/bench_kernels.py [--repeat 3] [--n-hull 7] [--n-lattice 5]

Both backends run in the same process (the ``which`` argument overrides the
environment flag) and their outputs are checked for equality.
"""
import argparse
import time
import warnings

import numpy as np

warnings.filterwarnings("ignore", message=".*TBB.*")

from matchfield.polytope import convex_hull, face_lattice, matching_field_polytope  # noqa: E402


def best_of(fn, repeat):
    times = []
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--n-hull", type=int, default=7)
    ap.add_argument("--n-lattice", type=int, default=5)
    args = ap.parse_args()

    # compile once so timings exclude JIT start-up
    small = matching_field_polytope(3, 1).points
    convex_hull(small, which="numba")
    face_lattice(convex_hull(small), which="numba")

    print(f"{'workload':<28}{'numba s':>10}{'numpy s':>10}{'speedup':>9}  same")
    for n in range(4, args.n_hull + 1):
        for ell in (0, n // 2):
            pts = matching_field_polytope(n, ell).points
            tj, hj = best_of(lambda: convex_hull(pts, which="numba"), args.repeat)
            tn, hn = best_of(lambda: convex_hull(pts, which="numpy"), args.repeat)
            same = np.array_equal(hj.incidence, hn.incidence)
            print(f"{f'hull n={n} ell={ell}':<28}{tj:>10.4f}{tn:>10.4f}{tn / tj:>9.2f}  {same}")
    for n in range(4, args.n_lattice + 1):
        for ell in range(n):
            hull = matching_field_polytope(n, ell).hull
            tj, lj = best_of(lambda: face_lattice(hull, which="numba"), args.repeat)
            tn, ln = best_of(lambda: face_lattice(hull, which="numpy"), args.repeat)
            same = lj.f_vector == ln.f_vector
            print(f"{f'face lattice n={n} ell={ell}':<28}{tj:>10.4f}{tn:>10.4f}{tn / tj:>9.2f}  {same}")


if __name__ == "__main__":
    main()
