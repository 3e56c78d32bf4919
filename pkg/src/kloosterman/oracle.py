"""Brute-force reference computations.

Everything here enumerates the whole field, vectorised with numpy, and is
meant as ground truth for the fast paths at small n.  F(2^n) elements are
held in uint64 arrays (so n <= 32); F(3^n) elements are held by their base-3
integer encoding with log/exp tables built once per field.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._poly import prime_divisors
from .errors import DegreeTooLarge, ZeroArgument
from .gf3 import ONE

WHT_MAX_DEGREE = 28
_VEC2_MAX_DEGREE = 32


@dataclass(frozen=True)
class KloostermanValue:
    value: int

    def __int__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, KloostermanValue):
            return self.value == other.value
        return self.value == other

    def __hash__(self):
        return hash(self.value)


# -- F(2^n), vectorised


def _vmul2_scalar(field, arr, s):
    r = np.zeros_like(arr)
    j = 0
    while s:
        if s & 1:
            r ^= arr << np.uint64(j)
        s >>= 1
        j += 1
    return _vreduce2(field, r)


def _vmul2(field, u, v):
    r = np.zeros_like(u)
    for j in range(field.n):
        r ^= (u << np.uint64(j)) * ((v >> np.uint64(j)) & np.uint64(1))
    return _vreduce2(field, r)


def _vreduce2(field, r):
    n = field.n
    m = np.uint64(field.modulus)
    for i in range(2 * n - 2, n - 1, -1):
        bit = (r >> np.uint64(i)) & np.uint64(1)
        r ^= bit * (m << np.uint64(i - n))
    return r


def _vtrace2(field, arr):
    return (np.bitwise_count(arr & np.uint64(field.trace_mask)) & 1).astype(np.int64)


@lru_cache(maxsize=8)
def _tables2(field):
    n = field.n
    if n > _VEC2_MAX_DEGREE:
        raise DegreeTooLarge(f"vectorised F(2^{n}) needs n <= {_VEC2_MAX_DEGREE}")
    xs = np.arange(field.order, dtype=np.uint64)
    # x^(2^n - 2) by square-and-multiply; maps 0 to 0
    inv = np.ones_like(xs)
    base = xs.copy()
    e = field.order - 2
    while e:
        if e & 1:
            inv = _vmul2(field, inv, base)
        e >>= 1
        if e:
            base = _vmul2(field, base, base)
    if field.order == 2:
        inv = xs.copy()
    inv_sq = _vmul2(field, inv, inv)
    return xs, inv, inv_sq


# -- F(3^n), via discrete logarithms


@dataclass
class _Tables3:
    digits: np.ndarray   # (N, n) trit matrix
    pow3: np.ndarray
    exp: np.ndarray
    log: np.ndarray
    trace: np.ndarray
    chi: np.ndarray      # quadratic character, 0 at 0


def _primitive_element(field):
    q1 = field.order - 1
    ps = prime_divisors(q1) if q1 > 1 else []
    one = 1 if field.p == 2 else ONE
    for v in range(1, field.order):
        g = v if field.p == 2 else field.from_int(v)
        if all(field.pow(g, q1 // r) != one for r in ps):
            return g
    raise AssertionError("no primitive element")  # unreachable


@lru_cache(maxsize=8)
def _tables3(field):
    N, n = field.order, field.n
    g = _primitive_element(field)
    exp = np.zeros(N - 1, dtype=np.int64)
    x = ONE
    for k in range(N - 1):
        exp[k] = field.to_int(x)
        x = field.mul(x, g)
    log = np.full(N, -1, dtype=np.int64)
    log[exp] = np.arange(N - 1)
    pow3 = 3 ** np.arange(n, dtype=np.int64)
    digits = (np.arange(N, dtype=np.int64)[:, None] // pow3) % 3
    tr_basis = np.array([field.trace((1 << i, 0)) for i in range(n)], dtype=np.int64)
    trace = (digits @ tr_basis) % 3
    chi = np.where(log % 2 == 0, 1, -1)
    chi[0] = 0
    return _Tables3(digits, pow3, exp, log, trace, chi)


def _vmul3(T, u, v):
    N1 = len(T.exp)
    r = T.exp[(T.log[u] + T.log[v]) % N1]
    return np.where((u == 0) | (v == 0), 0, r)


def _vadd3(T, u, v, sign=1):
    return ((T.digits[u] + sign * T.digits[v]) % 3) @ T.pow3


# -- public oracles


def kloosterman_naive(field, a):
    """1 + sum over nonzero x of zeta^Tr(1/x + a x), summed term by term."""
    if field.p == 2:
        xs, inv, _ = _tables2(field)
        xs, inv = xs[1:], inv[1:]
        tr = _vtrace2(field, inv) ^ _vtrace2(field, _vmul2_scalar(field, xs, a))
        return KloostermanValue(1 + int(np.sum(1 - 2 * tr)))
    T = _tables3(field)
    ai = field.to_int(a)
    xs = np.arange(1, field.order, dtype=np.int64)
    inv = T.exp[(-T.log[xs]) % len(T.exp)]
    ax = _vmul3(T, np.full_like(xs, ai), xs)
    tr = (T.trace[inv] + T.trace[ax]) % 3
    counts = np.bincount(tr, minlength=3)
    # the sum is real because Tr(1/x + a x) takes the values 1 and 2 equally often
    assert counts[1] == counts[2]
    return KloostermanValue(1 + int(counts[0]) - int(counts[1]))


def curve_order_naive(field, a):
    """#E(a) by enumerating every x-coordinate."""
    if field.p == 2:
        if a == 0:
            raise ZeroArgument("a must be nonzero")
        xs, _, inv_sq = _tables2(field)
        # x != 0: y = x z with z^2 + z = x + a/x^2, two points iff trace 0
        c = xs[1:] ^ _vmul2_scalar(field, inv_sq[1:], a)
        affine = 1 + 2 * int(np.count_nonzero(_vtrace2(field, c) == 0))
        return affine + 1
    ai = field.to_int(a)
    if ai == 0:
        raise ZeroArgument("a must be nonzero")
    T = _tables3(field)
    xs = np.arange(field.order, dtype=np.int64)
    sq = _vmul3(T, xs, xs)
    cube = _vmul3(T, sq, xs)
    rhs = _vadd3(T, _vadd3(T, cube, sq), np.full_like(xs, ai), sign=-1)
    return 1 + int(np.sum(1 + T.chi[rhs]))


def ord_p(v, p):
    h = 0
    while v % p == 0:
        v //= p
        h += 1
    return h


def sylow_order_naive(field, a):
    return ord_p(curve_order_naive(field, a), field.p)


def fwht(v):
    """Unnormalised fast Walsh-Hadamard transform of a length-2^n vector."""
    v = np.array(v, dtype=np.int64)
    N = len(v)
    h = 1
    while h < N:
        v = v.reshape(-1, 2, h)
        v = np.stack((v[:, 0] + v[:, 1], v[:, 0] - v[:, 1]), axis=1)
        h *= 2
    return v.reshape(N)


def kloosterman_all_wht(field, max_degree=WHT_MAX_DEGREE):
    """K(a) for every a in F(2^n), indexed by the integer encoding of a."""
    if field.p != 2:
        raise ValueError("the Walsh-Hadamard method is for binary fields")
    n = field.n
    if n > max_degree:
        raise DegreeTooLarge(f"n = {n} exceeds the Walsh-Hadamard cap {max_degree}")
    _, inv, _ = _tables2(field)
    # x = 0 contributes +1 so the transform value is exactly K(a)
    signs = 1 - 2 * _vtrace2(field, inv)
    W = fwht(signs)
    # Tr(a x) = <u(a), x> with u(a)_i = Tr(a t^i); row i of that map has mask bits Tr(t^(i+j))
    xs = np.arange(field.order, dtype=np.uint64)
    u = np.zeros_like(xs)
    for i in range(n):
        mask = 0
        for j in range(n):
            if field.trace(field.mul(1 << i, 1 << j)):
                mask |= 1 << j
        bit = (np.bitwise_count(xs & np.uint64(mask)) & 1).astype(np.uint64)
        u |= bit << np.uint64(i)
    return W[u.astype(np.int64)]


def kloosterman_all_naive(field):
    """K(a) for every a in F(2^n), summed term by term over x = g^k.

    With T[k] = Tr(g^k), the term for x = g^k is (-1)^(T[-k] + T[k + log a]),
    so each K(a) is one dot product against a cyclic shift of T.
    """
    if field.p != 2:
        raise ValueError("only binary fields are supported")
    N1 = field.order - 1
    g = _primitive_element(field)
    S = np.empty(N1, dtype=np.float64)
    x = 1
    for k in range(N1):
        S[k] = -1.0 if field.trace(x) else 1.0
        x = field.mul(x, g)
    S_inv = S[(-np.arange(N1)) % N1]
    S2 = np.concatenate((S, S))
    K = np.zeros(field.order, dtype=np.int64)
    K[0] = 1 + int(S.sum())
    x = 1
    for k in range(N1):
        K[x] = 1 + int(round(float(S_inv @ S2[k:k + N1])))
        x = field.mul(x, g)
    return K


def wht_all_zeros(field, max_degree=WHT_MAX_DEGREE):
    """Sorted list of every a != 0 with K(a) = 0, via one Walsh-Hadamard transform."""
    K = kloosterman_all_wht(field, max_degree)
    zeros = np.flatnonzero(K == 0)
    return [int(a) for a in zeros if a != 0]
