"""Arithmetic in F(3^n) in a polynomial basis.

An element is a pair of ints ``(lo, hi)``: bit i of ``lo`` is set when the
coefficient of t^i is 1 and bit i of ``hi`` when it is 2.  The two planes
never overlap.  With this layout addition and negation are a handful of word
operations, independent of n.

The integer encoding used for enumeration and for the examples in the docs
reads the coefficient vector in base 3: c_{n-1} 3^{n-1} + ... + c_0.
"""

from functools import lru_cache

from ._poly import has_root_in_prime_field, prime_divisors, sparse_candidates
from .errors import NoSolution, NonResidue, ZeroInversion

ZERO = (0, 0)
ONE = (1, 0)


def add(a, b):
    al, ah = a
    bl, bh = b
    t = (al | bh) ^ (ah | bl)
    return ((ah | bh) ^ t, (al | bl) ^ t)


def neg(a):
    return (a[1], a[0])


def sub(a, b):
    return add(a, (b[1], b[0]))


def _degree(a):
    return max(a[0].bit_length(), a[1].bit_length()) - 1


def _shift(a, k):
    return (a[0] << k, a[1] << k)


def _polymod(a, m):
    dm = _degree(m)
    lead_m = 1 if m[0] >> dm & 1 else 2
    while True:
        d = _degree(a)
        if d < dm:
            return a
        lead = 1 if a[0] >> d & 1 else 2
        s = _shift(m, d - dm)
        a = sub(a, s) if lead == lead_m else add(a, s)


def _polymul(a, b):
    al, ah = a
    rl = rh = 0
    bl, bh = b
    i = 0
    while bl >> i or bh >> i:
        if bl >> i & 1:
            rl, rh = add((rl, rh), (al << i, ah << i))
        elif bh >> i & 1:
            rl, rh = add((rl, rh), (ah << i, al << i))
        i += 1
    return (rl, rh)


def _polygcd(a, b):
    while b != ZERO:
        a, b = b, _polymod(a, b)
    return a


def is_irreducible(m):
    """Rabin's test over F_3 for a monic polynomial in plane form."""
    n = _degree(m)
    if n < 1:
        return False
    t = (0b10, 0)

    def frob_iter(k):
        x = _polymod(t, m)
        for _ in range(k):
            x = _polymod(_polymul(_polymul(x, x), x), m)
        return x

    if frob_iter(n) != _polymod(t, m):
        return False
    for q in prime_divisors(n):
        h = _polymod(sub(frob_iter(n // q), t), m)
        g = _polygcd(m, h)
        if _degree(g) != 0:
            return False
    return True


def _terms_to_planes(terms):
    lo = hi = 0
    for e, c in terms.items():
        if c == 1:
            lo |= 1 << e
        else:
            hi |= 1 << e
    return (lo, hi)


def find_modulus(n):
    for terms in sparse_candidates(n, 3):
        if n > 1 and has_root_in_prime_field(terms, 3):
            continue
        m = _terms_to_planes(terms)
        if is_irreducible(m):
            return m
    raise AssertionError(f"no irreducible polynomial of degree {n}")  # unreachable


class LinearMap3:
    """An F_3-linear map applied four trits at a time through lookup tables."""

    __slots__ = ("images", "_tables")

    def __init__(self, images):
        self.images = tuple(images)
        tables = []
        for base in range(0, len(self.images), 4):
            chunk = self.images[base:base + 4]
            tab = [ZERO] * 256
            for idx in range(1, 256):
                lo, hi = idx & 15, idx >> 4
                if lo & hi or (lo | hi) >> len(chunk):
                    continue
                if lo:
                    low = lo & -lo
                    j = low.bit_length() - 1
                    tab[idx] = add(tab[idx ^ low], chunk[j])
                else:
                    low = hi & -hi
                    j = low.bit_length() - 1
                    tab[idx] = sub(tab[idx ^ (low << 4)], chunk[j])
            tables.append(tab)
        self._tables = tables

    def __call__(self, a):
        lo, hi = a
        rl = rh = 0
        for tab in self._tables:
            if not (lo | hi):
                break
            el, eh = tab[(lo & 15) | (hi & 15) << 4]
            t = (rl | eh) ^ (rh | el)
            rl, rh = (rh | eh) ^ t, (rl | el) ^ t
            lo >>= 4
            hi >>= 4
        return (rl, rh)


class FieldCtx3:
    """Immutable description of F(3^n) = F_3[t]/(modulus).

    ``delta`` has absolute trace 1; ``as_table`` holds the images of t^i under
    the linear Artin-Schreier solver used by ``solve_cubic``.
    """

    p = 3

    def __init__(self, n, modulus, delta=None):
        if _degree(modulus) != n or not modulus[0] >> n & 1:
            raise ValueError("modulus must be monic of degree n")
        self.n = n
        self.modulus = modulus
        self.order = 3 ** n
        self.mask = (1 << n) - 1

        basis = [(1 << i, 0) for i in range(n)]
        self._cube = LinearMap3(self._slow_cube(b) for b in basis)
        root_images = []
        for b in basis:
            for _ in range(n - 1):
                b = self._cube(b)
            root_images.append(b)
        self._cuberoot = LinearMap3(root_images)

        m1 = m2 = 0
        for i, b in enumerate(basis):
            s, x = b, b
            for _ in range(n - 1):
                x = self._cube(x)
                s = add(s, x)
            assert s[0] >> 1 == 0 and s[1] >> 1 == 0
            if s[0]:
                m1 |= 1 << i
            elif s[1]:
                m2 |= 1 << i
        self._trace_masks = (m1, m2)

        if delta is None:
            if n % 3 == 1:
                delta = ONE
            elif n % 3 == 2:
                delta = neg(ONE)
            else:
                delta = next((b for b in basis if self.trace(b) == 1), None)
                if delta is None:
                    delta = neg(next(b for b in basis if self.trace(b) == 2))
        if self.trace(delta) != 1:
            raise ValueError("delta must have trace 1")
        self.delta = delta
        self._solver = LinearMap3(self.fast_third(b) for b in basis)
        self.as_table = self._solver.images

        q = self.order - 1
        s = (q & -q).bit_length() - 1
        self._two_adic = (s, q >> s)
        self._nonresidue = None

    def __repr__(self):
        return f"FieldCtx3(n={self.n}, modulus={self.to_str(self.modulus, self.n + 1)})"

    def __reduce__(self):
        return (FieldCtx3, (self.n, self.modulus, self.delta))

    def _slow_cube(self, a):
        return self.mul(self.mul(a, a), a)

    # -- arithmetic

    add = staticmethod(add)
    sub = staticmethod(sub)
    neg = staticmethod(neg)

    def mul(self, a, b):
        al, ah = a
        bl, bh = b
        fl, fh = self.modulus
        n = self.n
        rl = rh = 0
        for i in range(max(bl.bit_length(), bh.bit_length()) - 1, -1, -1):
            rl <<= 1
            rh <<= 1
            # clear the t^n coefficient by subtracting (lead) * modulus
            if rl >> n & 1:
                t = (rl | fl) ^ (rh | fh)
                rl, rh = (rh | fl) ^ t, (rl | fh) ^ t
            elif rh >> n & 1:
                t = (rl | fh) ^ (rh | fl)
                rl, rh = (rh | fh) ^ t, (rl | fl) ^ t
            if bl >> i & 1:
                t = (rl | ah) ^ (rh | al)
                rl, rh = (rh | ah) ^ t, (rl | al) ^ t
            elif bh >> i & 1:
                t = (rl | al) ^ (rh | ah)
                rl, rh = (rh | al) ^ t, (rl | ah) ^ t
        return (rl, rh)

    def square(self, a):
        return self.mul(a, a)

    def cube(self, a):
        return self._cube(a)

    def cuberoot(self, a):
        """The unique cube root, a^(3^(n-1))."""
        return self._cuberoot(a)

    def pow(self, a, e):
        r = ONE
        while e:
            if e & 1:
                r = self.mul(r, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return r

    def inv(self, a):
        if a == ZERO:
            raise ZeroInversion(f"inverse of 0 in F(3^{self.n})")
        # extended Euclid on (a, modulus); invariant u == g1 * a mod modulus
        u, v = a, self.modulus
        g1, g2 = ONE, ZERO
        du, dv = _degree(u), _degree(v)
        while du > 0:
            if du < dv:
                u, v, g1, g2, du, dv = v, u, g2, g1, dv, du
            j = du - dv
            same = (u[0] >> du & 1) == (v[0] >> dv & 1)
            if same:
                u = sub(u, _shift(v, j))
                g1 = sub(g1, _shift(g2, j))
            else:
                u = add(u, _shift(v, j))
                g1 = add(g1, _shift(g2, j))
            du = _degree(u)
        # u is a nonzero constant, so its inverse is itself
        if u[1]:
            g1 = neg(g1)
        return _polymod(g1, self.modulus)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def trace(self, a):
        m1, m2 = self._trace_masks
        lo, hi = a
        return ((lo & m1).bit_count() - (hi & m1).bit_count()
                - (lo & m2).bit_count() + (hi & m2).bit_count()) % 3

    def is_square(self, a):
        return a == ZERO or self.pow(a, (self.order - 1) // 2) == ONE

    def _find_nonresidue(self):
        if self._nonresidue is None:
            minus_one = neg(ONE)
            for v in range(2, self.order):
                z = self.from_int(v)
                if self.pow(z, (self.order - 1) // 2) == minus_one:
                    self._nonresidue = z
                    break
        return self._nonresidue

    def sqrt(self, a):
        """Square root, normalised to the root whose leading trit is 1.

        Raises NonResidue when a is not a square.
        """
        if a == ZERO:
            return ZERO
        s, m = self._two_adic
        if s == 1:
            r = self.pow(a, (self.order + 1) // 4)
        else:
            # Tonelli-Shanks
            z = self._find_nonresidue()
            c = self.pow(z, m)
            r = self.pow(a, (m + 1) // 2)
            t = self.pow(a, m)
            k = s
            while t != ONE:
                i, t2 = 0, t
                while t2 != ONE:
                    t2 = self.mul(t2, t2)
                    i += 1
                    if i == k:
                        raise NonResidue("not a square")
                b = c
                for _ in range(k - i - 1):
                    b = self.mul(b, b)
                k = i
                c = self.mul(b, b)
                t = self.mul(t, c)
                r = self.mul(r, b)
        if self.mul(r, r) != a:
            raise NonResidue("not a square")
        return self.canonical_sign(r)

    @staticmethod
    def canonical_sign(r):
        """Pick, from {r, -r}, the lexicographically smaller trit vector."""
        lo, hi = r
        return (hi, lo) if hi.bit_length() > lo.bit_length() else r

    def solve_cubic(self, beta):
        """Return X with X^3 - X + beta = 0; the other roots are X + 1 and X - 1.

        Raises NoSolution when trace(beta) != 0.
        """
        if self.trace(beta):
            raise NoSolution("trace(beta) != 0: X^3 - X + beta has no root")
        return self._solver(beta)

    def fast_third(self, beta):
        """sum_{i=0}^{n-2} (sum_{j=i+1}^{n-1} delta^(3^j)) beta^(3^i), evaluated directly."""
        n = self.n
        dpows = [self.delta]
        for _ in range(n - 1):
            dpows.append(self.cube(dpows[-1]))
        bpows = [beta]
        for _ in range(n - 2):
            bpows.append(self.cube(bpows[-1]))
        coef, acc = ZERO, ZERO
        for i in range(n - 2, -1, -1):
            coef = add(coef, dpows[i + 1])
            acc = add(acc, self.mul(coef, bpows[i]))
        return acc

    # -- element helpers

    @staticmethod
    def from_int(v):
        lo = hi = 0
        i = 0
        while v:
            v, d = divmod(v, 3)
            if d == 1:
                lo |= 1 << i
            elif d == 2:
                hi |= 1 << i
            i += 1
        return (lo, hi)

    @staticmethod
    def to_int(a):
        lo, hi = a
        v = 0
        for i in range(max(lo.bit_length(), hi.bit_length()) - 1, -1, -1):
            v = 3 * v + (lo >> i & 1) + 2 * (hi >> i & 1)
        return v

    def elements(self, start=0):
        return (self.from_int(v) for v in range(start, self.order))

    def random_element(self, rng):
        trits = rng.integers(0, 3, size=self.n)
        lo = hi = 0
        for i, d in enumerate(trits.tolist()):
            if d == 1:
                lo |= 1 << i
            elif d == 2:
                hi |= 1 << i
        return (lo, hi)

    def to_str(self, a, width=None):
        """Digits c_{k-1} ... c_0 with k = width (default n)."""
        width = self.n if width is None else width
        lo, hi = a
        return "".join(str((lo >> i & 1) + 2 * (hi >> i & 1)) for i in range(width - 1, -1, -1))

    def from_str(self, s):
        s = s.strip()
        if not s or len(s) > self.n or any(ch not in "012" for ch in s):
            raise ValueError(f"bad trit string {s!r} for F(3^{self.n})")
        return self.from_int(int(s, 3))

    def dumps(self):
        lines = [
            "p=3",
            f"n={self.n}",
            f"modulus={self.to_str(self.modulus, self.n + 1)}",
            f"delta={self.to_str(self.delta)}",
            "table=" + ",".join(self.to_str(v) for v in self.as_table),
        ]
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def setup_gf3(n):
    """Deterministic field setup: sparsest, then smallest, irreducible modulus."""
    if n < 1:
        raise ValueError("n must be positive")
    return FieldCtx3(n, find_modulus(n))
