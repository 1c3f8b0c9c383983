"""Shared test setup: warm the jitted kernels once per session.

Compilation (or disk-cache load) cost lands here instead of inside any
timed certification, so wall-clock assertions measure steady state.
"""

import pytest


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    from paircodes.codes import make_code, min_hamming, min_pair
    from paircodes.cosets import closed_defining_set, generator_from_defining_set
    from paircodes.field import make_field, make_tower, nth_root_of_unity

    ctx = make_field(3, 1)
    smap = make_tower(3, 1)
    root = nth_root_of_unity(smap.big, 8)
    ds = closed_defining_set(8, 1, [0, 1, 2, 4], 3)
    code = make_code(ctx, 8, 1, generator_from_defining_set(ds, root, smap), root=root)
    min_hamming(code, 8, method="support_rank")
    min_pair(code, 8, method="support_rank")
    min_hamming(code, 8, method="full_enumeration")
    yield
