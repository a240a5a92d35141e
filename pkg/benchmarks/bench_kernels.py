"""numba vs numpy timings for the hot kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each kernel is run on both backends over the same inputs; outputs are
compared before any timing is reported, and the first numba call (JIT
compile or cache load) is excluded.
"""

import argparse
import time

import numpy as np

from maxsub import _accel, atlas, kernels
from maxsub.group import coset_action
from maxsub.verify import _d_times_a


def _best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def cases():
    G = atlas.psl3_3()  # 5616 elements on 13 points
    t = G.table()
    gens = t.elems[[int(i) for i in t.index(np.stack([g.array for g in G.generators]))]].astype(np.int64)
    yield "closure PSL3(3)", lambda: kernels.closure(t.elems, t.keys, t.base, t.weights, gens, [t.identity])

    M = atlas.m11()
    tm = M.table()
    yield "element orders M11", lambda: kernels.element_orders(tm.elems)

    G2, Wd = _d_times_a(atlas.psl2(7))  # coset action of degree 168
    act = coset_action(G2, Wd)
    img = np.stack([g.array for g in act.image.generators]).astype(np.int64)
    yield "minimal blocks, degree 168", lambda: [kernels.minimal_block(img, 0, b) for b in range(1, 40)]

    rng = np.random.default_rng(0)
    batch = np.stack([G2.random_element(rng).array for _ in range(20_000)])
    yield "canonical coset reps x20000", lambda: act.coset_of(batch)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if not _accel.HAVE_NUMBA:
        print("numba is not importable; only the numpy backend can run")
        return 1
    print(f"{'kernel':32} {'numpy ms':>10} {'numba ms':>10} {'speed-up':>9}")
    for name, fn in cases():
        times = {}
        outs = {}
        for be in ("numpy", "numba"):
            prev = _accel.set_backend(be)
            try:
                fn()  # warm-up / JIT
                times[be], outs[be] = _best(fn, args.repeat)
            finally:
                _accel.set_backend(prev)
        a, b = outs["numpy"], outs["numba"]
        same = all(np.array_equal(x, y) for x, y in zip(a, b)) if isinstance(a, list) else np.array_equal(a, b)
        if not same:
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:32} {times['numpy'] * 1e3:10.2f} {times['numba'] * 1e3:10.2f} {times['numpy'] / times['numba']:8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
