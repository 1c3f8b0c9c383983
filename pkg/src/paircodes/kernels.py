"""Hot loops shared by the distance engines.

Everything here speaks the table dialect: field elements are int32
indices, multiplication goes through log/exp (exp is two periods long so
summed logs never need a modulo), addition through the dense add table.
The two kernels are written as plain functions and wrapped with numba on
import; set PAIRCODES_NO_NUMBA=1 before import to force the pure paths.
"""

import os

import numpy as np

if os.environ.get("PAIRCODES_NO_NUMBA"):
    HAS_NUMBA = False
else:
    try:
        from numba import njit

        HAS_NUMBA = True
    except ImportError:
        HAS_NUMBA = False


def step_delta(ctx):
    """delta[v] = element stepping index v to index v+1 (wrapping to 0).

    Lets the enumeration kernel walk the whole field with one add per
    digit instead of recomputing scalar multiples.
    """
    q = ctx.q
    d = np.empty(q, dtype=np.int32)
    for v in range(q):
        nxt = v + 1 if v + 1 < q else 0
        d[v] = ctx.sub(nxt, v)
    return d


def _canonical_many_impl(masks, n):
    """Canonical (lex-min characteristic sequence) rotation for each mask.

    masks is int64 and n must be at most 62 so rotations never overflow.
    Candidate rotations start at gap starts; the comparison key is the
    bit-reversed rotation, whose integer order is the lex order on
    characteristic sequences.
    """
    cnt = masks.shape[0]
    out = np.empty(cnt, dtype=np.int64)
    full = (1 << n) - 1
    for idx in range(cnt):
        mask = masks[idx]
        if mask == 0 or mask == full:
            out[idx] = mask
            continue
        prev = ((mask >> (n - 1)) | (mask << 1)) & full
        starts = prev & ~mask & full
        best = -1
        best_key = 0
        for t in range(n):
            if (starts >> t) & 1 == 0:
                continue
            if t == 0:
                rot = mask
            else:
                rot = (mask >> t) | ((mask & ((1 << t) - 1)) << (n - t))
            key = 0
            v = rot
            for _ in range(n):
                key = (key << 1) | (v & 1)
                v >>= 1
            if best < 0 or key < best_key:
                best = rot
                best_key = key
        out[idx] = best
    return out


def _gf_rank_impl(mat, add, neg, log, exp):
    """Rank of mat over the field the tables describe.  Destroys mat."""
    m, ncols = mat.shape
    order = exp.shape[0] // 2
    rank = 0
    for col in range(ncols):
        if rank == m:
            break
        piv = -1
        for r in range(rank, m):
            if mat[r, col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for c in range(col, ncols):
                tmp = mat[rank, c]
                mat[rank, c] = mat[piv, c]
                mat[piv, c] = tmp
        il = order - log[mat[rank, col]]  # exponent of the pivot inverse
        for c in range(col, ncols):
            v = mat[rank, c]
            if v != 0:
                mat[rank, c] = exp[log[v] + il]
        for r in range(rank + 1, m):
            f = mat[r, col]
            if f == 0:
                continue
            lf = log[f]
            mat[r, col] = 0
            for c in range(col + 1, ncols):
                v = mat[rank, c]
                if v != 0:
                    mat[r, c] = add[mat[r, c], neg[exp[lf + log[v]]]]
        rank += 1
    return rank


def _admissible_many_impl(masks, n, texp, alpha_pows, add, neg, log, exp):
    """Flag masks whose root-power matrix is rank deficient.

    For support positions s (set bits of the mask) and defining exponents
    texp, the matrix M[r, c] = alpha^(texp[r] * pos[c]) has a nontrivial
    null vector exactly when a codeword lives on a subset of the support.
    alpha_pows[j] holds the field index of alpha^j and its length is the
    root order, so exponents reduce mod len(alpha_pows).
    """
    cnt = masks.shape[0]
    rows = texp.shape[0]
    rn = alpha_pows.shape[0]
    out = np.zeros(cnt, dtype=np.uint8)
    pos = np.empty(n, dtype=np.int64)
    mat = np.empty((rows, n), dtype=np.int32)
    for idx in range(cnt):
        mask = masks[idx]
        s = 0
        for i in range(n):
            if (mask >> i) & 1:
                pos[s] = i
                s += 1
        if rows < s:
            out[idx] = 1  # fewer equations than unknowns
            continue
        for r in range(rows):
            for c in range(s):
                mat[r, c] = alpha_pows[(texp[r] * pos[c]) % rn]
        if gf_rank(mat[:, :s], add, neg, log, exp) < s:
            out[idx] = 1
    return out


def _enum_min_weights_impl(rows, q, delta, add, neg, log, exp):
    """Scan the full row space of rows (k x n) over GF(q).

    Walks message space as an odometer, updating the codeword
    incrementally, and returns (min_hamming, min_pair, word_h, word_p)
    where each word is the lexicographically smallest codeword (as an
    index vector) attaining its minimum.
    """
    k, n = rows.shape
    total = np.int64(1)
    for _ in range(k):
        total *= q
    msg = np.zeros(k, dtype=np.int32)
    word = np.zeros(n, dtype=np.int32)
    best_h = n + 1
    best_p = n + 1
    wit_h = np.zeros(n, dtype=np.int32)
    wit_p = np.zeros(n, dtype=np.int32)
    for _ in range(total - 1):
        j = 0
        while msg[j] == q - 1:
            ld = log[delta[q - 1]]
            for i in range(n):
                rv = rows[j, i]
                if rv != 0:
                    word[i] = add[word[i], exp[ld + log[rv]]]
            msg[j] = 0
            j += 1
        ld = log[delta[msg[j]]]
        for i in range(n):
            rv = rows[j, i]
            if rv != 0:
                word[i] = add[word[i], exp[ld + log[rv]]]
        msg[j] += 1

        wh = 0
        wp = 0
        for i in range(n):
            if word[i] != 0:
                wh += 1
            nxt = i + 1
            if nxt == n:
                nxt = 0
            if word[i] != 0 or word[nxt] != 0:
                wp += 1

        if wh < best_h:
            best_h = wh
            for i in range(n):
                wit_h[i] = word[i]
        elif wh == best_h:
            for i in range(n):
                if word[i] != wit_h[i]:
                    if word[i] < wit_h[i]:
                        for t in range(n):
                            wit_h[t] = word[t]
                    break
        if wp < best_p:
            best_p = wp
            for i in range(n):
                wit_p[i] = word[i]
        elif wp == best_p:
            for i in range(n):
                if word[i] != wit_p[i]:
                    if word[i] < wit_p[i]:
                        for t in range(n):
                            wit_p[t] = word[t]
                    break
    return best_h, best_p, wit_h, wit_p


if HAS_NUMBA:
    canonical_many = njit(cache=True, nogil=True)(_canonical_many_impl)
    gf_rank = njit(cache=True, nogil=True)(_gf_rank_impl)
    admissible_many = njit(cache=True, nogil=True)(_admissible_many_impl)
    enum_min_weights = njit(cache=True, nogil=True)(_enum_min_weights_impl)
else:
    canonical_many = _canonical_many_impl
    gf_rank = _gf_rank_impl
    admissible_many = _admissible_many_impl
    enum_min_weights = _enum_min_weights_impl
