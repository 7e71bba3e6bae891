"""Time the numba kernels against the pure-numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Both paths are called directly, so the CHOWLAB_NO_NUMBA flag does not
matter here.  Results are checked for equality before timing.
"""

import argparse
import time

import numpy as np

from chowlab import _kernels as K
from chowlab.chow import _dp_arrays
from chowlab.families import gen_boolean, gen_nonlogconcave_counterexample, gen_random_graded
from chowlab.poset import rank_array


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def chain_sum_cases():
    cases = [("boolean(6)", *gen_boolean(6)), ("nonlogconcave(9,10)", *gen_nonlogconcave_counterexample(9, 10))]
    randoms = [gen_random_graded([0, i], 7, 4) for i in range(200)]
    out = []
    for label, P, r in cases:
        ra = rank_array(P, r)
        out.append((label, [(*_dp_arrays(P, ra), int(ra[P.index(P.top)]))]))
    batch = []
    for P, r in randoms:
        ra = rank_array(P, r)
        batch.append((*_dp_arrays(P, ra), int(ra[P.index(P.top)])))
    out.append(("200 random rank<=7", batch))
    return out


def scd_cases():
    def products(limit):
        out = []

        def rec(prefix, size):
            if prefix:
                out.append(prefix)
            for r in range(1, limit):
                if size * (r + 1) > limit:
                    break
                rec(prefix + (r,), size * (r + 1))

        rec((), 1)
        return out

    cases = [("product(4,4,4,4)", [(4, 4, 4, 4)]), ("product(9,9,9)", [(9, 9, 9)]), ("product(1 x 14)", [(1,) * 14])]
    sweep = products(200)
    cases.append((f"all {len(sweep)} products <= 200", sweep))
    return [(label, [(np.asarray(b, dtype=np.int64), K.strides_of(b)) for b in group]) for label, group in cases]


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not K.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    rows = []
    for label, batch in chain_sum_cases():
        for a in batch:
            t1, _ = K.chain_sum_numba(*a)
            t2, _ = K.chain_sum_numpy(*a)
            assert np.array_equal(t1, t2), label
        tn = best_of(lambda: [K.chain_sum_numba(*a) for a in batch], args.repeat)
        tp = best_of(lambda: [K.chain_sum_numpy(*a) for a in batch], args.repeat)
        rows.append(("chain sum", label, tn, tp))

    for label, batch in scd_cases():
        for b, s in batch:
            o1, f1 = K.scd_build_numba(b, s)
            o2, f2 = K.scd_build_numpy(b, s)
            assert np.array_equal(o1, o2) and np.array_equal(f1, f2), label
        tn = best_of(lambda: [K.scd_verify_numba(b, s, *K.scd_build_numba(b, s)) for b, s in batch], args.repeat)
        tp = best_of(lambda: [K.scd_verify_numpy(b, s, *K.scd_build_numpy(b, s)) for b, s in batch], args.repeat)
        rows.append(("scd build+verify", label, tn, tp))

    print(f"{'kernel':<18} {'case':<28} {'numba ms':>10} {'numpy ms':>10} {'ratio':>7}")
    for kind, label, tn, tp in rows:
        print(f"{kind:<18} {label:<28} {1e3 * tn:>10.2f} {1e3 * tp:>10.2f} {tp / tn:>7.1f}")


if __name__ == "__main__":
    main()
