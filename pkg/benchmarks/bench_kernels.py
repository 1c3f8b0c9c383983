"""Compare the jitted kernels against their pure-python fallbacks.

The package selects the jitted path at import time unless
PAIRCODES_NO_NUMBA is set; results are identical either way, only the
throughput differs.  This script times both implementations of each
hot kernel on realistic inputs in a single process and prints a small
table.

    python3 benchmarks/bench_kernels.py [--repeats N]
"""

import argparse
import time

import numpy as np

from paircodes import kernels
from paircodes.codes import make_code
from paircodes.cosets import closed_defining_set, generator_from_defining_set
from paircodes.families import build_family
from paircodes.field import make_field, make_tower, nth_root_of_unity
from paircodes.patterns import canonical_supports_by_pw


def best_of(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_canonical():
    rng = np.random.default_rng(1)
    n = 40
    masks = rng.integers(1, 1 << n, size=200_000, dtype=np.int64)
    return (
        "canonical_many  200k masks, n=40",
        lambda: kernels._canonical_many_impl(masks, n),
        lambda: kernels.canonical_many(masks, n),
    )


def bench_rank():
    ctx = make_field(7, 2)
    rng = np.random.default_rng(2)
    mats = rng.integers(0, ctx.q, size=(2000, 6, 6)).astype(np.int32)
    args = (ctx.add_table, ctx.neg_table, ctx.log, ctx.exp)

    def run(fn):
        def inner():
            for m in mats:
                fn(m.copy(), *args)

        return inner

    return (
        "gf_rank         2000 6x6 over GF(49)",
        run(kernels._gf_rank_impl),
        run(kernels.gf_rank),
    )


def bench_admissible():
    code = build_family("dp8", 7)
    masks = np.array(canonical_supports_by_pw(code.n, 7), dtype=np.int64)
    masks = np.tile(masks, 50)
    big = code.smap.big
    texp = np.array(code.T.exponents, dtype=np.int64)
    args = (code.n, texp, code.alpha_pows(), big.add_table, big.neg_table, big.log, big.exp)

    def pure():
        saved = kernels.gf_rank
        kernels.gf_rank = kernels._gf_rank_impl  # impl dispatches via this global
        try:
            kernels._admissible_many_impl(masks, *args)
        finally:
            kernels.gf_rank = saved

    return (
        f"admissible_many {masks.size} supports, dp8 q=7",
        pure,
        lambda: kernels.admissible_many(masks, *args),
    )


def bench_enum():
    ctx = make_field(5, 1)
    smap = make_tower(5, 1)
    root = nth_root_of_unity(smap.big, 12)
    ds = closed_defining_set(12, 1, [0, 1, 2], 5)
    code = make_code(ctx, 12, 1, generator_from_defining_set(ds, root, smap), root=root)
    rows = code.generator_matrix().astype(np.int32)
    args = (ctx.q, kernels.step_delta(ctx), ctx.add_table, ctx.neg_table, ctx.log, ctx.exp)
    return (
        f"enum_min_weights 5^{code.k} codewords, n=12",
        lambda: kernels._enum_min_weights_impl(rows, *args),
        lambda: kernels.enum_min_weights(rows, *args),
    )


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    benches = [bench_canonical(), bench_rank(), bench_admissible(), bench_enum()]
    if not kernels.HAS_NUMBA:
        print("numba unavailable (or disabled); timing the pure path only\n")

    print(f"{'kernel / workload':<40} {'pure':>10} {'jitted':>10} {'speedup':>9}")
    for name, pure, fast in benches:
        if kernels.HAS_NUMBA:
            fast()  # compile outside the timed region
            t_fast = best_of(fast, args.repeats)
        t_pure = best_of(pure, args.repeats)
        if kernels.HAS_NUMBA:
            print(f"{name:<40} {t_pure:>9.3f}s {t_fast:>9.3f}s {t_pure / t_fast:>8.1f}x")
        else:
            print(f"{name:<40} {t_pure:>9.3f}s {'-':>10} {'-':>9}")


if __name__ == "__main__":
    main()
