"""Shift-vector and doubling-evaluation tests.

The matrix_power_oracle is deliberately a separate algorithm (companion
matrix powering) so the two fast paths check each other as well as the
naive engine.
"""

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nstep.engine import TermCache, make_spec
from nstep.fasteval import (
    DoublingEvaluator,
    FamilyError,
    Ring,
    RingError,
    ShiftVector,
    apply_shift,
    compose,
    identity_vector,
    matrix_power_oracle,
    shift_vector,
    term_at,
)


def test_ring_basics():
    exact = Ring()
    assert exact.kind == "exact"
    assert exact.reduce(-7) == -7
    mod = Ring(10)
    assert mod.kind == "modular"
    assert mod.reduce(-7) == 3
    assert mod.mul(6, 7) == 2
    assert mod.mult_count == 1
    with pytest.raises(RingError):
        Ring(1)
    with pytest.raises(RingError):
        Ring(0)


def test_shift_vector_rejects_non_u():
    with pytest.raises(FamilyError):
        shift_vector(TermCache(make_spec("V", 3)), 2, Ring())


def test_shift_vector_at_zero_is_all_ones():
    u = TermCache(make_spec("U", 4))
    assert shift_vector(u, 0, Ring()).coeffs == (1, 1, 1, 1)
    assert identity_vector(4, Ring()).coeffs == (1, 1, 1, 1)


def test_shift_vector_small_orders():
    u2 = TermCache(make_spec("U", 2))
    for s in range(-8, 9):
        c = shift_vector(u2, s, Ring()).coeffs
        assert c == (u2.term(s + 2), u2.term(s + 1))
    u3 = TermCache(make_spec("U", 3))
    for s in range(-8, 9):
        c = shift_vector(u3, s, Ring()).coeffs
        assert c == (u3.term(s + 2), u3.term(s + 1) + u3.term(s), u3.term(s + 1))
    assert shift_vector(u3, -19, Ring()).coeffs == (0, 56, -103)


@given(n=st.integers(2, 7), s=st.integers(-40, 40))
@settings(max_examples=80, deadline=None)
def test_shift_vector_telescoping(n, s):
    u = TermCache(make_spec("U", n))
    c = shift_vector(u, s, Ring()).coeffs
    assert c[n - 1] == u.term(s + 1)
    for i in range(n - 1):
        assert c[i] - c[i + 1] == u.term(s - n + i + 2)


def test_apply_shift_examples():
    ring = Ring()
    t = TermCache(make_spec("U", 3))
    sv = shift_vector(t, -19, ring)
    assert apply_shift(sv, t.window(10), ring) == t.term(-9) == -8
    k = TermCache(make_spec("V", 3))
    sv4 = shift_vector(t, 4, ring)
    assert apply_shift(sv4, k.window(6), ring) == k.term(10) == 443


def test_apply_shift_order_mismatch():
    sv = ShiftVector(3, 0, (1, 1, 1))
    w = TermCache(make_spec("U", 2)).window(1)
    with pytest.raises(ValueError):
        apply_shift(sv, w, Ring())


@pytest.mark.parametrize("modulus", [None, 2, 97, 2**31 - 1])
def test_compose_matches_direct(modulus):
    for n in range(2, 6):
        ring = Ring(modulus)
        u = TermCache(make_spec("U", n))
        for a in range(-20, 21, 3):
            for b in range(-20, 21, 4):
                got = compose(
                    shift_vector(u, a, ring), shift_vector(u, b, ring), ring
                )
                want = shift_vector(u, a + b, ring)
                assert got.s == a + b
                assert got.coeffs == want.coeffs


def test_compose_order_mismatch():
    with pytest.raises(ValueError):
        compose(ShiftVector(2, 0, (1, 1)), ShiftVector(3, 0, (1, 1, 1)), Ring())


def test_compose_counts_n_squared_mults():
    for n in (2, 3, 5, 8):
        u = TermCache(make_spec("U", n))
        ring = Ring()
        a = shift_vector(u, 5, ring)
        b = shift_vector(u, 7, ring)
        ring.mult_count = 0
        compose(a, b, ring)
        assert ring.mult_count == n * n


def test_role_swap_addition():
    # W(r+s) can also be read with W supplying the coefficients and U the
    # window: sum_i (sum_{j=0..n-i} W(s-j+1)) U(r-i)
    for n in range(2, 7):
        u = TermCache(make_spec("U", n))
        for fam, seeds in (("V", None), ("W", tuple(range(-2, n - 2)))):
            w = TermCache(make_spec(fam, n, seeds=seeds))
            for r in range(-12, 13, 5):
                for s in range(-12, 13, 4):
                    rhs = sum(
                        sum(w.term(s - j + 1) for j in range(n - i + 1))
                        * u.term(r - i)
                        for i in range(1, n + 1)
                    )
                    assert w.term(r + s) == rhs


@pytest.mark.parametrize(
    "fam,n,seeds",
    [("U", 2, None), ("V", 2, None), ("U", 3, None), ("V", 4, None),
     ("W", 3, (2, -5, 1)), ("W", 5, (1, 1, 1, 1, 1))],
)
def test_term_at_exact_matches_engine(fam, n, seeds):
    spec = make_spec(fam, n, seeds=seeds)
    cache = TermCache(spec)
    ev = DoublingEvaluator(n, Ring())
    for r in range(-300, 301, 7):
        assert ev.term(spec, r) == cache.term(r)
    assert term_at(spec, 123, Ring()) == cache.term(123)
    assert term_at(spec, -123, Ring()) == cache.term(-123)


def test_term_at_known_values():
    assert term_at(make_spec("U", 5), 10, Ring()) == 236
    assert term_at(make_spec("U", 3), -18, Ring()) == -103
    assert term_at(make_spec("V", 4), -4, Ring()) == 7


def test_term_at_modular_matches_exact():
    spec = make_spec("W", 3, seeds=(4, 0, -3))
    cache = TermCache(spec)
    for m in (2, 9, 1009):
        ring = Ring(m)
        for r in range(-40, 41, 11):
            assert term_at(spec, r, ring) == cache.term(r) % m


def test_matrix_oracle_matches_engine():
    for fam, n, seeds in (("U", 2, None), ("V", 3, None), ("W", 4, (1, 2, 3, 4))):
        spec = make_spec(fam, n, seeds=seeds)
        cache = TermCache(spec)
        for r in range(-60, 61, 13):
            assert matrix_power_oracle(spec, r, Ring()) == cache.term(r)


def test_cross_check_doubling_vs_matrix_random_triples():
    rng = random.Random(414243)
    for _ in range(12):
        n = rng.randint(2, 12)
        r = rng.randint(-(10**18), 10**18)
        m = rng.randint(2, 2**61 - 1)
        fam = rng.choice(["U", "V", "W"])
        seeds = tuple(rng.randint(-9, 9) for _ in range(n)) if fam == "W" else None
        spec = make_spec(fam, n, seeds=seeds)
        assert term_at(spec, r, Ring(m)) == matrix_power_oracle(spec, r, Ring(m))


def test_doubling_mult_count_within_bound():
    ring = Ring(2**61 - 1)
    r = 10**18
    n = 10
    term_at(make_spec("U", n), r, ring)
    assert ring.mult_count <= 4 * n * n * math.ceil(math.log2(r))


def test_doubling_evaluator_rejects_other_order():
    ev = DoublingEvaluator(3, Ring())
    with pytest.raises(ValueError):
        ev.term(make_spec("U", 4), 5)
