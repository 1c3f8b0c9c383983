"""Kernel tests: rank and exhaustive-enumeration against pure oracles.

The oracles here are deliberately naive: fraction-free elimination done
with scalar field ops for rank, itertools.product over all messages for
the enumeration.  The kernels must agree exactly, jitted or not.
"""

import os
import subprocess
import sys
from itertools import product

import numpy as np
import pytest

from paircodes import kernels
from paircodes.field import make_field


def rank_oracle(ctx, rows):
    """Row-reduce with scalar ops; rows is a list of lists of indices."""
    mat = [list(r) for r in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = ctx.inv(mat[rank][col])
        mat[rank] = [ctx.mul(inv, v) for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [ctx.sub(v, ctx.mul(f, w)) for v, w in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def enum_oracle(ctx, rows):
    """Every nonzero codeword of the row space; returns min weights and witnesses."""
    k, n = rows.shape
    best_h = best_p = None
    wit_h = wit_p = None
    for msg in product(range(ctx.q), repeat=k):
        if not any(msg):
            continue
        word = [0] * n
        for j, m in enumerate(msg):
            if m:
                for i in range(n):
                    word[i] = ctx.add(word[i], ctx.mul(m, int(rows[j, i])))
        wh = sum(1 for v in word if v)
        wp = sum(1 for i in range(n) if word[i] or word[(i + 1) % n])
        if best_h is None or (wh, word) < (best_h, list(wit_h)):
            best_h, wit_h = wh, list(word)
        if best_p is None or (wp, word) < (best_p, list(wit_p)):
            best_p, wit_p = wp, list(word)
    return best_h, best_p, wit_h, wit_p


def field_tables(ctx):
    add = ctx.add_table
    neg = ctx.neg_table
    return add, neg, ctx.log, ctx.exp


class TestRankKernel:
    @pytest.mark.parametrize("p,m", [(3, 2), (5, 2), (13, 2)])
    def test_matches_oracle_random(self, p, m):
        ctx = make_field(p, m)
        add, neg, log, exp = field_tables(ctx)
        rng = np.random.default_rng(11)
        for _ in range(120):
            rows = int(rng.integers(1, 7))
            cols = int(rng.integers(1, 7))
            mat = rng.integers(0, ctx.q, size=(rows, cols)).astype(np.int32)
            want = rank_oracle(ctx, mat.tolist())
            got = kernels.gf_rank(mat.copy(), add, neg, log, exp)
            assert got == want

    def test_rank_deficient_by_construction(self):
        ctx = make_field(3, 2)
        add, neg, log, exp = field_tables(ctx)
        rng = np.random.default_rng(13)
        base = rng.integers(0, 9, size=(2, 6)).astype(np.int32)
        # third row = combination of the first two
        c0, c1 = 5, 7
        comb = np.array(
            [ctx.add(ctx.mul(c0, int(a)), ctx.mul(c1, int(b))) for a, b in zip(base[0], base[1])],
            dtype=np.int32,
        )
        mat = np.vstack([base, comb[None, :]])
        assert kernels.gf_rank(mat.copy(), add, neg, log, exp) == rank_oracle(ctx, base.tolist())

    def test_empty_and_zero(self):
        ctx = make_field(5, 2)
        add, neg, log, exp = field_tables(ctx)
        assert kernels.gf_rank(np.zeros((0, 4), dtype=np.int32), add, neg, log, exp) == 0
        assert kernels.gf_rank(np.zeros((3, 4), dtype=np.int32), add, neg, log, exp) == 0

    def test_identity_blocks(self):
        ctx = make_field(3, 2)
        add, neg, log, exp = field_tables(ctx)
        mat = np.eye(5, dtype=np.int32)
        assert kernels.gf_rank(mat, add, neg, log, exp) == 5


class TestEnumerationKernel:
    def check_code(self, ctx, rows):
        add, neg, log, exp = field_tables(ctx)
        want = enum_oracle(ctx, rows)
        got = kernels.enum_min_weights(
            rows.astype(np.int32), ctx.q, kernels.step_delta(ctx), add, neg, log, exp
        )
        assert (got[0], got[1]) == (want[0], want[1])
        assert got[2].tolist() == want[2]
        assert got[3].tolist() == want[3]

    def test_gf3_small_cyclic(self):
        ctx = make_field(3, 1)
        # generator matrix of the [8,2] cyclic code with g = (x^8-1)/(x^2-1)... take
        # simple shift rows of a degree-6 divisor of x^8 - 1 over GF(3)
        g = [1, 0, 1, 0, 1, 0, 1, 0]  # 1 + x^2 + x^4 + x^6, times x
        rows = np.array([g, g[-1:] + g[:-1]], dtype=np.int32)
        self.check_code(ctx, rows)

    def test_gf5_random_rows(self):
        ctx = make_field(5, 1)
        rng = np.random.default_rng(17)
        for _ in range(10):
            rows = rng.integers(0, 5, size=(3, 7)).astype(np.int32)
            self.check_code(ctx, rows)

    def test_gf9_extension_field(self):
        ctx = make_field(3, 2)
        rng = np.random.default_rng(19)
        rows = rng.integers(0, 9, size=(2, 6)).astype(np.int32)
        self.check_code(ctx, rows)

    def test_single_row(self):
        ctx = make_field(7, 1)
        rows = np.array([[1, 0, 3, 0, 0, 6]], dtype=np.int32)
        self.check_code(ctx, rows)


class TestStepDelta:
    def test_covers_message_space(self):
        # replaying the deltas from 0 must visit every field element once,
        # in index order, then wrap back to zero
        for p, m in [(3, 1), (5, 1), (3, 2)]:
            ctx = make_field(p, m)
            delta = kernels.step_delta(ctx)
            assert len(delta) == ctx.q
            seen = [0]
            for _ in range(ctx.q - 1):
                seen.append(ctx.add(seen[-1], int(delta[seen[-1]])))
            assert seen == list(range(ctx.q))
            assert ctx.add(seen[-1], int(delta[seen[-1]])) == 0

    def test_deltas_nonzero(self):
        ctx = make_field(3, 2)
        assert all(int(d) != 0 for d in kernels.step_delta(ctx))


class TestCanonicalMany:
    def test_matches_scalar(self):
        from paircodes.patterns import canonical_rotation

        rng = np.random.default_rng(29)
        for n in (5, 12, 24, 56, 62):
            masks = rng.integers(0, 1 << min(n, 62), size=400).astype(np.int64)
            masks &= (1 << n) - 1
            got = kernels.canonical_many(masks, n)
            want = [canonical_rotation(int(m), n) for m in masks]
            assert got.tolist() == want

    def test_edges(self):
        masks = np.array([0, (1 << 8) - 1, 1], dtype=np.int64)
        out = kernels.canonical_many(masks, 8)
        assert out.tolist() == [0, 255, 1 << 7]


class TestJitParity:
    def test_wrapped_equals_impl(self):
        ctx = make_field(5, 2)
        add, neg, log, exp = field_tables(ctx)
        rng = np.random.default_rng(23)
        mat = rng.integers(0, 25, size=(4, 6)).astype(np.int32)
        assert kernels.gf_rank(mat.copy(), add, neg, log, exp) == kernels._gf_rank_impl(
            mat.copy(), add, neg, log, exp
        )
        small = make_field(5, 1)
        sadd, sneg, slog, sexp = field_tables(small)
        rows = rng.integers(0, 5, size=(2, 6)).astype(np.int32)
        a = kernels.enum_min_weights(rows, 5, kernels.step_delta(small), sadd, sneg, slog, sexp)
        b = kernels._enum_min_weights_impl(
            rows, 5, kernels.step_delta(small), sadd, sneg, slog, sexp
        )
        assert a[0] == b[0] and a[1] == b[1]
        assert a[2].tolist() == b[2].tolist() and a[3].tolist() == b[3].tolist()

    def test_env_flag_disables_numba(self):
        code = (
            "import paircodes.kernels as k;"
            "print(k.HAS_NUMBA, k.gf_rank is k._gf_rank_impl)"
        )
        env = dict(os.environ, PAIRCODES_NO_NUMBA="1")
        out = subprocess.run(
            [sys.executable, "-c", code], env=env, capture_output=True, text=True
        )
        assert out.returncode == 0, out.stderr
        assert out.stdout.split() == ["False", "True"]
