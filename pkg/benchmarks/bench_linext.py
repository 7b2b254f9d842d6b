"""Time the linear-extension kernels (numba vs numpy vs pure Python) on real marking posets.

    python benchmarks/bench_linext.py [--degree 6] [--cogenus 1] [--repeat 3]
"""

import argparse
import time

import numpy as np

from severi.floordiag import _kernels, enumerate_floor_diagrams, marking_poset
from severi.floordiag.poset import linear_extensions_python
from severi.lattice import Plane


def _time(fn, posets, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = [fn(p) for p in posets]
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degree", type=int, default=6)
    ap.add_argument("--cogenus", type=int, default=1)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    diagrams = enumerate_floor_diagrams(Plane(args.degree), args.cogenus)
    posets = [marking_poset(D) for D in diagrams]
    masks = [np.array(p.pred_masks(), dtype=np.int64) for p in posets]
    sizes = [len(p) for p in posets]
    print(f"P2 degree {args.degree}, cogenus {args.cogenus}: {len(posets)} posets, "
          f"{min(sizes)}-{max(sizes)} elements")

    runs = {"python": (linear_extensions_python, posets), "numpy": (_kernels.linext_numpy, masks)}
    if _kernels.HAVE_NUMBA:
        _kernels.linext_numba(masks[0])  # compile outside the timed region
        runs["numba"] = (_kernels.linext_numba, masks)

    results = {}
    for name, (fn, data) in runs.items():
        secs, out = _time(fn, data, args.repeat)
        results[name] = out
        print(f"  {name:>6}: {secs * 1e3:9.1f} ms")
    ref = results["python"]
    for name, out in results.items():
        # -1 marks int64 overflow in the array kernels
        agree = all(a == b or a == -1 for a, b in zip(out, ref))
        print(f"  {name:>6} agrees with python: {agree}")


if __name__ == "__main__":
    main()
