import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _reference import bits, from_bits, ref_gf2
from kloosterman.errors import NoSolution, ZeroInversion
from kloosterman.gf2 import FieldCtx2, find_modulus, is_irreducible, setup_gf2

F8 = setup_gf2(3)
F4 = setup_gf2(2)
W = 2  # generator of F_4


def elems(F):
    return st.integers(0, F.mask)


# -- setup


def test_setup_examples():
    assert F8.modulus == 0b1011
    assert F8.delta == 1
    assert F4.modulus == 0b111
    assert F4.delta == W


def test_modulus_n75_is_sparse_trinomial_or_pentanomial():
    F = setup_gf2(75)
    weight = bin(F.modulus).count("1")
    assert weight in (3, 5)
    assert F.modulus == (1 << 75) | (1 << 6) | (1 << 3) | (1 << 1) | 1


@pytest.mark.parametrize("n", range(1, 12))
def test_modulus_is_first_irreducible_of_minimal_weight(n):
    # brute force over every monic polynomial of degree n
    def irreducible(m):
        for d in range(2, 1 << (n // 2 + 1)):
            r = m
            while r.bit_length() >= d.bit_length():
                r ^= d << (r.bit_length() - d.bit_length())
            if r == 0:
                return False
        return True

    cands = [m for m in range(1 << n, 1 << (n + 1)) if irreducible(m)]
    best = min(cands, key=lambda m: (bin(m).count("1"), m))
    assert find_modulus(n) == best
    assert is_irreducible(best)


def test_reducible_rejected():
    assert not is_irreducible(0b101)     # (t+1)^2
    assert not is_irreducible(0b11111 ^ 0b10)  # t^4+t^3+t^2+1 has root 1


@pytest.mark.parametrize("n", [1, 2, 3, 4, 8, 13, 47, 75, 163])
def test_context_invariants(n):
    F = setup_gf2(n)
    assert F.trace(F.delta) == 1
    if n % 2 == 1:
        assert F.delta == 1
    for i, r in enumerate(F.ht_table):
        if F.trace(1 << i) == 0:
            assert F.square(r) ^ r == 1 << i


# -- arithmetic examples


def test_mul_examples():
    assert F8.mul(2, 4) == 3
    assert all(F8.mul(1, x) == x for x in range(8))
    assert F8.square(6) == 2


def test_inv_examples():
    assert F8.inv(1) == 1
    assert F8.inv(2) == 5
    with pytest.raises(ZeroInversion):
        F8.inv(0)
    with pytest.raises(ZeroDivisionError):
        F8.inv(0)


def test_sqrt_examples():
    assert F8.sqrt(0) == 0 and F8.sqrt(1) == 1
    assert F8.sqrt(2) == 6
    assert F4.sqrt(W) == F4.square(W)


def test_trace_examples():
    assert F8.trace(1) == 1
    assert F8.trace(2) == 0
    assert F4.trace(1) == 0


def test_solve_quadratic_examples():
    assert F8.solve_quadratic(0) == 0
    assert F8.solve_quadratic(2) == 4
    w2 = F4.square(W)
    assert F4.solve_quadratic(1) == w2
    assert F4.square(w2) ^ w2 == 1
    with pytest.raises(NoSolution):
        F8.solve_quadratic(1)


# -- properties against the reference arithmetic


@pytest.mark.parametrize("n", [5, 13, 47])
def test_matches_reference(n):
    F = setup_gf2(n)
    R = ref_gf2(F)
    rng = np.random.default_rng(n)
    for _ in range(30):
        a, b = F.random_element(rng), F.random_element(rng)
        A, B = bits(a, n), bits(b, n)
        assert F.mul(a, b) == from_bits(R.mul(A, B))
        assert F.trace(a) == R.trace(A)
        if a:
            assert F.inv(a) == from_bits(R.inv(A))


F47 = setup_gf2(47)


@settings(max_examples=200, deadline=None)
@given(elems(F47), elems(F47), elems(F47))
def test_field_axioms(a, b, c):
    F = F47
    assert F.mul(a, b) == F.mul(b, a)
    assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
    assert F.mul(a, b ^ c) == F.mul(a, b) ^ F.mul(a, c)
    assert F.square(a) == F.mul(a, a)
    assert F.sqrt(F.square(a)) == a
    assert F.trace(a ^ b) == F.trace(a) ^ F.trace(b)
    if a:
        assert F.mul(a, F.inv(a)) == 1
        assert F.inv(F.inv(a)) == a
    assert F.pow(a, F.order) == a


@settings(max_examples=200, deadline=None)
@given(elems(F47), elems(F47))
def test_solver_linear(c, d):
    F = F47
    assert F._solver(c ^ d) == F._solver(c) ^ F._solver(d)


@pytest.mark.parametrize("n", range(1, 17))
def test_trace_kernel_size(n):
    F = setup_gf2(n)
    xs = np.arange(F.order, dtype=np.uint64)
    tr = np.bitwise_count(xs & np.uint64(F.trace_mask)) & 1
    assert int(np.count_nonzero(tr == 0)) == 2 ** (n - 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 8])
def test_trace_mask_matches_definition(n):
    F = setup_gf2(n)
    for a in range(F.order):
        s, x = a, a
        for _ in range(n - 1):
            x = F.square(x)
            s ^= x
        assert s == F.trace(a)


@pytest.mark.parametrize("n", [47, 75, 163])
def test_solver_soundness(n):
    F = setup_gf2(n)
    rng = np.random.default_rng(1000 + n)
    done = 0
    while done < 10 ** 4:
        c = F.random_element(rng)
        if F.trace(c):
            continue
        r = F.solve_quadratic(c)
        assert F.square(r) ^ r == c
        done += 1


@pytest.mark.parametrize("n", [2, 3, 4, 7, 10, 16, 47])
def test_closed_form_solver_matches_table(n):
    F = setup_gf2(n)
    rng = np.random.default_rng(n)
    for _ in range(50):
        c = F.random_element(rng)
        if F.trace(c):
            c ^= F.delta
        assert F.fast_half(c) == F.solve_quadratic(c)
        r = F.fast_half(c)
        assert F.square(r) ^ r == c


@pytest.mark.parametrize("n", [3, 5, 11, 47])
def test_half_trace_odd_n(n):
    F = setup_gf2(n)
    rng = np.random.default_rng(n)
    for _ in range(50):
        c = F.random_element(rng)
        if F.trace(c):
            c ^= 1
        r = F.half_trace(c)
        assert F.square(r) ^ r == c
        assert F.solve_quadratic(c) in (r, r ^ 1)


def test_half_trace_rejects_even():
    with pytest.raises(ValueError):
        F4.half_trace(1)


def test_custom_delta_changes_table_not_solutions():
    G = setup_gf2(8)
    assert FieldCtx2(8, G.modulus, G.delta).ht_table == G.ht_table
    alt = next(d for d in range(1, 256) if G.trace(d) and d != G.delta)
    H = FieldCtx2(8, G.modulus, alt)
    for c in range(256):
        if G.trace(c) == 0:
            assert H.solve_quadratic(c) in (G.solve_quadratic(c), G.solve_quadratic(c) ^ 1)


def test_bad_delta_rejected():
    G = setup_gf2(8)
    bad = next(d for d in range(256) if G.trace(d) == 0)
    with pytest.raises(ValueError):
        FieldCtx2(8, G.modulus, bad)


def test_hex_round_trip():
    F = setup_gf2(75)
    rng = np.random.default_rng(0)
    for _ in range(20):
        a = F.random_element(rng)
        assert F.from_str(F.to_str(a)) == a
    with pytest.raises(ValueError):
        F8.from_str("8")
