"""Arithmetic in F(2^n) in a polynomial basis.

Elements are plain Python ints: bit i is the coefficient of t^i, where t is a
root of the context's irreducible modulus.  Every method returns the canonical
reduced form (no bits at or above position n).  Addition is ``a ^ b``.
"""

from functools import lru_cache

from ._poly import has_root_in_prime_field, prime_divisors, sparse_candidates
from .errors import NoSolution, ZeroInversion


def _clmul(a, b):
    """Carry-less product of two bit-vectors."""
    if a.bit_length() < b.bit_length():
        a, b = b, a
    r = 0
    while b:
        low = b & -b
        r ^= a << (low.bit_length() - 1)
        b ^= low
    return r


def _polymod(a, m):
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def _polygcd(a, b):
    while b:
        a, b = b, _polymod(a, b)
    return a


def is_irreducible(m):
    """Rabin's test for a polynomial over F_2 given as a bit-vector."""
    n = m.bit_length() - 1
    if n < 1:
        return False

    def frob_iter(k):
        x = 0b10
        for _ in range(k):
            x = _polymod(_clmul(x, x), m)
        return x

    if frob_iter(n) != _polymod(0b10, m):
        return False
    for q in prime_divisors(n):
        h = frob_iter(n // q) ^ 0b10
        if _polygcd(m, _polymod(h, m)) != 1:
            return False
    return True


def find_modulus(n):
    for terms in sparse_candidates(n, 2):
        if n > 1 and has_root_in_prime_field(terms, 2):
            continue
        m = sum(1 << e for e in terms)
        if is_irreducible(m):
            return m
    raise AssertionError(f"no irreducible polynomial of degree {n}")  # unreachable


class LinearMap2:
    """An F_2-linear map on bit-vectors, applied byte by byte via lookup tables."""

    __slots__ = ("images", "_tables")

    def __init__(self, images):
        self.images = tuple(images)
        tables = []
        for base in range(0, len(self.images), 8):
            chunk = self.images[base:base + 8]
            tab = [0] * (1 << len(chunk))
            for idx in range(1, len(tab)):
                low = idx & -idx
                tab[idx] = tab[idx ^ low] ^ chunk[low.bit_length() - 1]
            tables.append(tab)
        self._tables = tables

    def __call__(self, x):
        r = 0
        for tab in self._tables:
            if not x:
                break
            r ^= tab[x & 0xFF]
            x >>= 8
        return r


class FieldCtx2:
    """Immutable description of F(2^n) = F_2[t]/(modulus).

    ``delta`` is an element of absolute trace 1 and ``ht_table`` holds the
    images of the basis elements t^i under the linear quadratic solver, so
    that ``solve_quadratic`` is a table combination.
    """

    p = 2

    def __init__(self, n, modulus, delta=None):
        if modulus.bit_length() - 1 != n:
            raise ValueError(f"modulus has degree {modulus.bit_length() - 1}, expected {n}")
        self.n = n
        self.modulus = modulus
        self.order = 1 << n
        self.mask = self.order - 1
        # t^n == sum of these powers
        low = modulus ^ (1 << n)
        self._low_terms = tuple(i for i in range(n) if low >> i & 1)

        basis = [1 << i for i in range(n)]
        self._square = LinearMap2(self._slow_square(b) for b in basis)
        sqrt_images = []
        for b in basis:
            for _ in range(n - 1):
                b = self._square(b)
            sqrt_images.append(b)
        self._sqrt = LinearMap2(sqrt_images)

        trace_mask = 0
        for i, b in enumerate(basis):
            if self._trace_by_powers(b):
                trace_mask |= 1 << i
        self.trace_mask = trace_mask

        if delta is None:
            delta = next(b for b in basis if self.trace(b) == 1)
        if self.trace(delta) != 1:
            raise ValueError("delta must have trace 1")
        self.delta = delta
        self._solver = LinearMap2(self.fast_half(b) for b in basis)
        self.ht_table = self._solver.images

    def __repr__(self):
        return f"FieldCtx2(n={self.n}, modulus={self.modulus:#x}, delta={self.delta:#x})"

    def __reduce__(self):
        return (FieldCtx2, (self.n, self.modulus, self.delta))

    # -- reduction and the slow paths used to build tables

    def _reduce(self, a):
        n, terms = self.n, self._low_terms
        while a >> n:
            hi = a >> n
            a &= self.mask
            for e in terms:
                a ^= hi << e
        return a

    def _slow_square(self, a):
        return self._reduce(_clmul(a, a))

    def _trace_by_powers(self, a):
        s, x = a, a
        for _ in range(self.n - 1):
            x = self._square(x)
            s ^= x
        assert s in (0, 1)
        return s

    # -- arithmetic

    @staticmethod
    def add(a, b):
        return a ^ b

    def mul(self, a, b):
        return self._reduce(_clmul(a, b))

    def square(self, a):
        return self._square(a)

    def sqrt(self, a):
        """The unique square root, a^(2^(n-1))."""
        return self._sqrt(a)

    def pow(self, a, e):
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            e >>= 1
            a = self.square(a)
        return r

    def inv(self, a):
        if a == 0:
            raise ZeroInversion("inverse of 0 in F(2^%d)" % self.n)
        u, v = a, self.modulus
        g1, g2 = 1, 0
        while u != 1:
            j = u.bit_length() - v.bit_length()
            if j < 0:
                u, v, g1, g2 = v, u, g2, g1
                j = -j
            u ^= v << j
            g1 ^= g2 << j
        return self._reduce(g1)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def trace(self, a):
        return (a & self.trace_mask).bit_count() & 1

    def solve_quadratic(self, c):
        """Return r with r^2 + r = c; the other root is r ^ 1.

        Raises NoSolution when trace(c) = 1.
        """
        if self.trace(c):
            raise NoSolution("trace(c) = 1: x^2 + x = c has no root")
        return self._solver(c)

    # -- closed-form solvers, kept for cross-checking the table

    def fast_half(self, x):
        """sum_{i=0}^{n-2} (sum_{j=i+1}^{n-1} delta^(2^j)) x^(2^i), evaluated directly."""
        n = self.n
        dpows = [self.delta]
        for _ in range(n - 1):
            dpows.append(self.square(dpows[-1]))
        coef, acc = 0, 0
        # walk i downwards so the inner sum accumulates one term per step
        xpows = [x]
        for _ in range(n - 2):
            xpows.append(self.square(xpows[-1]))
        for i in range(n - 2, -1, -1):
            coef ^= dpows[i + 1]
            acc ^= self.mul(coef, xpows[i])
        return acc

    def half_trace(self, x):
        """sum_{i=0}^{(n-1)/2} x^(2^(2i)); only meaningful for odd n."""
        if self.n % 2 == 0:
            raise ValueError("half trace needs odd n")
        acc, y = x, x
        for _ in range((self.n - 1) // 2):
            y = self.square(self.square(y))
            acc ^= y
        return acc

    # -- element helpers

    def elements(self, start=0):
        return range(start, self.order)

    def random_element(self, rng):
        nbytes = (self.n + 7) // 8
        return int.from_bytes(rng.bytes(nbytes), "little") & self.mask

    def to_str(self, a):
        return format(a, "x")

    def from_str(self, s):
        v = int(s, 16)
        if v >> self.n:
            raise ValueError(f"element {s!r} has bits at or above t^{self.n}")
        return v

    def dumps(self):
        lines = [
            "p=2",
            f"n={self.n}",
            f"modulus={self.modulus:x}",
            f"delta={self.delta:x}",
            "table=" + ",".join(format(v, "x") for v in self.ht_table),
        ]
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def setup_gf2(n):
    """Deterministic field setup: sparsest, then smallest, irreducible modulus."""
    if n < 1:
        raise ValueError("n must be positive")
    return FieldCtx2(n, find_modulus(n))
