"""Engine tests: seed conventions, bidirectional recurrence, special values.

The REFERENCE_ROWS table freezes r = -4 .. 10 for the U and V families at
n = 2, 3, 4, 5.  The forward halves were recomputed by the literal
order-n sum in naive_forward below; the backward halves follow from the
three-term form and are pinned here as ground truth.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nstep.engine import (
    Family,
    OrderError,
    SeedError,
    TermCache,
    make_spec,
)

# (family, n) -> terms at r = -4 .. 10
REFERENCE_ROWS = {
    ("U", 2): [-3, 2, -1, 1, 0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55],
    ("V", 2): [7, -4, 3, -1, 2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123],
    ("U", 3): [0, -1, 1, 0, 0, 1, 1, 2, 4, 7, 13, 24, 44, 81, 149],
    ("V", 3): [-5, 5, -1, -1, 3, 1, 3, 7, 11, 21, 39, 71, 131, 241, 443],
    ("U", 4): [-1, 1, 0, 0, 0, 1, 1, 2, 4, 8, 15, 29, 56, 108, 208],
    ("V", 4): [7, -1, -1, -1, 4, 1, 3, 7, 15, 26, 51, 99, 191, 367, 708],
    ("U", 5): [1, 0, 0, 0, 0, 1, 1, 2, 4, 8, 16, 31, 61, 120, 236],
    ("V", 5): [-1, -1, -1, -1, 5, 1, 3, 7, 15, 31, 57, 113, 223, 439, 863],
}


def naive_forward(seed_base, seeds, hi):
    """Order-n sum only, no backward logic: independent forward oracle."""
    vals = dict(zip(range(seed_base, seed_base + len(seeds)), seeds))
    n = len(seeds)
    for r in range(seed_base + n, hi + 1):
        vals[r] = sum(vals[r - i] for i in range(1, n + 1))
    return vals


@pytest.mark.parametrize("family,n", sorted(REFERENCE_ROWS))
def test_reference_rows(family, n):
    cache = TermCache(make_spec(family, n))
    assert cache.terms(-4, 10) == REFERENCE_ROWS[(family, n)]


@pytest.mark.parametrize("family,n", sorted(REFERENCE_ROWS))
def test_forward_agrees_with_naive_sum(family, n):
    spec = make_spec(family, n)
    base, block = spec.seed_block()
    vals = naive_forward(base, block, 40)
    cache = TermCache(spec)
    for r in range(base, 41):
        assert cache.term(r) == vals[r]


def test_make_spec_validation():
    with pytest.raises(OrderError):
        make_spec("U", 1)
    with pytest.raises(OrderError):
        make_spec("W", 0, seeds=())
    with pytest.raises(SeedError):
        make_spec("W", 3, seeds=(1, 2))
    with pytest.raises(SeedError):
        make_spec("W", 3)
    with pytest.raises(SeedError):
        make_spec("U", 3, seeds=(1, 2, 3))
    spec = make_spec("W", 3, seeds=[3, 1, 3])
    assert spec.seeds == (3, 1, 3)
    assert spec.family is Family.W


def test_seed_blocks():
    assert make_spec("U", 4).seed_block() == (-3, (1, 0, 0, 0))
    assert make_spec("V", 4).seed_block() == (-3, (-1, -1, -1, 4))
    assert make_spec("W", 2, seeds=(7, -2)).seed_block() == (0, (7, -2))


def test_window():
    cache = TermCache(make_spec("U", 2))
    w = cache.window(1)
    assert w.terms == (0, 1)
    assert w.r == 1
    t = TermCache(make_spec("U", 3))
    assert t.window(10).terms == (81, 44, 24)


@pytest.mark.parametrize("n", range(2, 9))
def test_u_special_values(n):
    u = TermCache(make_spec("U", n)).term
    kron = 1 if n == 2 else 0
    assert u(1) == 1
    assert u(-1) == kron
    assert u(-n) == -1
    assert u(-n - 1) == 2 * kron
    assert u(n) == 2 ** (n - 2)
    assert u(n + 1) == 2 ** (n - 1)
    assert u(n + 2) == 2**n - 1


@pytest.mark.parametrize("n", range(2, 9))
def test_v_special_values(n):
    v = TermCache(make_spec("V", n)).term
    assert v(1) == 1
    assert v(-n) == 2 * n - 1
    assert v(-n - 1) == -n - 2
    assert v(n) == 2**n - 1


def test_u_twostep_vs_eightstep_powers():
    # the 2^n - 1 value lands at r = n + 2, so it moves with n
    assert TermCache(make_spec("U", 6)).term(8) == 63
    assert TermCache(make_spec("U", 8)).term(10) == 255


@pytest.mark.parametrize("n", range(2, 8))
@pytest.mark.parametrize("k", range(0, 61, 7))
def test_u_beyond_order_expansion(n, k):
    # U(n+k) = 2^(n+k-2) - sum_{j=1..k} 2^(j-1) U(k-j), k >= 0
    u = TermCache(make_spec("U", n)).term
    rhs = 2 ** (n + k - 2) - sum(2 ** (j - 1) * u(k - j) for j in range(1, k + 1))
    assert u(n + k) == rhs


seed_lists = st.lists(st.integers(-50, 50), min_size=2, max_size=7)


@given(seeds=seed_lists, r=st.integers(-60, 60))
@settings(max_examples=120, deadline=None)
def test_recurrence_everywhere(seeds, r):
    n = len(seeds)
    cache = TermCache(make_spec("W", n, seeds=seeds))
    w = cache.term
    assert w(r) == sum(w(r - i) for i in range(1, n + 1))
    assert w(r) == 2 * w(r - 1) - w(r - n - 1)


@given(seeds=seed_lists, r=st.integers(-40, 40))
@settings(max_examples=60, deadline=None)
def test_backward_then_forward_roundtrip(seeds, r):
    n = len(seeds)
    a = TermCache(make_spec("W", n, seeds=seeds))
    b = TermCache(make_spec("W", n, seeds=seeds))
    # ask in opposite orders; values must agree regardless of fill order
    x = a.term(r)
    a.term(-r)
    b.term(-r)
    assert b.term(r) == x


@pytest.mark.parametrize("n", range(2, 7))
def test_window_sum_identities(n):
    # sum of any n+1 consecutive terms with the top one doubled collapses:
    # sum_{j=k-n}^{k} W(j) = 2 W(k)  and  sum_{j=1}^{n+1} W(-j) = 2 W(-1)
    for fam, seeds in (("U", None), ("V", None), ("W", tuple(range(1, n + 1)))):
        w = TermCache(make_spec(fam, n, seeds=seeds)).term
        for k in (-3, 0, 5, 11):
            assert sum(w(j) for j in range(k - n, k + 1)) == 2 * w(k)
        assert sum(w(-j) for j in range(1, n + 2)) == 2 * w(-1)


@pytest.mark.parametrize("n", range(2, 7))
def test_weighted_negative_window_sums(n):
    u = TermCache(make_spec("U", n)).term
    v = TermCache(make_spec("V", n)).term
    assert sum(j * u(-j) for j in range(1, n + 2)) == (2 * (n + 1) if n == 2 else 0) - 1
    assert 2 * sum(j * v(-j) for j in range(1, n + 2)) == n * n - 7 * n - 4


def test_zero_sequence_stays_zero():
    cache = TermCache(make_spec("W", 4, seeds=(0, 0, 0, 0)))
    assert all(cache.term(r) == 0 for r in range(-30, 31))


def test_terms_range_validation():
    cache = TermCache(make_spec("U", 2))
    with pytest.raises(ValueError):
        cache.terms(5, 4)
    assert cache.terms(3, 3) == [2]
