"""The binary curves E(a): y^2 + xy = x^3 + a over F(2^n).

Affine points are ``(x, y)`` tuples and the identity is ``None``.  Halving
works on the lambda-representation ``(x, lam)`` with ``lam = x + y/x``, which
saves a multiplication per step.
"""

from dataclasses import dataclass
from typing import NamedTuple, Optional, Tuple

import numpy as np

from .errors import NotHalvable, UnsupportedDegree, ZeroArgument

Point = Optional[Tuple[int, int]]

# default for lisonek_test: draw the point at random
RANDOM = object()


class PointLambda(NamedTuple):
    x: int
    lam: int


@dataclass(frozen=True)
class SylowResult:
    """h = ord_p(#E) and a generator of the cyclic Sylow p-subgroup."""

    h: int
    generator: tuple
    iterations: int = 0


class Curve2:
    def __init__(self, field, a):
        if a == 0:
            raise ZeroArgument("a must be nonzero")
        self.field = field
        self.a = a

    def __repr__(self):
        return f"Curve2(n={self.field.n}, a={self.a:#x})"

    # -- group law in affine coordinates

    def contains(self, P):
        if P is None:
            return True
        F = self.field
        x, y = P
        return F.square(y) ^ F.mul(x, y) == F.mul(F.square(x), x) ^ self.a

    def two_torsion(self):
        return (0, self.field.sqrt(self.a))

    def neg(self, P):
        if P is None:
            return None
        x, y = P
        return (x, x ^ y)

    def double(self, P):
        if P is None:
            return None
        F = self.field
        x, y = P
        if x == 0:
            return None
        lam = x ^ F.div(y, x)
        x3 = F.square(lam) ^ lam
        y3 = F.square(x) ^ F.mul(x3, lam ^ 1)
        return (x3, y3)

    def add(self, P, Q):
        if P is None:
            return Q
        if Q is None:
            return P
        F = self.field
        x1, y1 = P
        x2, y2 = Q
        if x1 == x2:
            if y1 == y2:
                return self.double(P)
            return None
        lam = F.div(y1 ^ y2, x1 ^ x2)
        x3 = F.square(lam) ^ lam ^ x1 ^ x2
        y3 = F.mul(lam, x1 ^ x3) ^ x3 ^ y1
        return (x3, y3)

    def mul(self, k, P):
        """Left-to-right double-and-add."""
        if k < 0:
            return self.mul(-k, self.neg(P))
        R = None
        for bit in bin(k)[2:]:
            R = self.double(R)
            if bit == "1":
                R = self.add(R, P)
        return R

    def mul_pow2(self, k, P):
        """[2^k]P by k doublings."""
        for _ in range(k):
            if P is None:
                break
            P = self.double(P)
        return P

    # -- lambda representation

    def to_lambda(self, P):
        x, y = P
        if x == 0:
            raise ValueError("the 2-torsion point has no lambda-representation")
        return PointLambda(x, x ^ self.field.div(y, x))

    def from_lambda(self, L):
        x, lam = L
        return (x, self.field.mul(x, x ^ lam))

    def double_lambda(self, L):
        """[2]L as an affine point; (0, sqrt(a)) when L has order 4."""
        F = self.field
        x, lam = L
        xi = F.square(lam) ^ lam
        eta = F.square(x) ^ F.mul(xi, lam ^ 1)
        return (xi, eta)

    def halve(self, L):
        """One of the two halves of L, in lambda-representation.

        Requires trace(L.x) = 0.  The slope root is the table value of the
        quadratic solver and the new slope is that root plus one.
        """
        F = self.field
        x, lam = L
        if F.trace(x):
            raise NotHalvable("trace(x) = 1")
        lam_hat = F.solve_quadratic(x)
        t = F.mul(x, x ^ lam ^ lam_hat)
        x_new = F.sqrt(t)
        # x_new == 0 would make the half a 2-torsion point, impossible here
        assert x_new != 0
        return PointLambda(x_new, lam_hat ^ 1)

    def seed(self):
        """The order-4 point (a^(1/4), a^(1/2)) as (a^(1/4), 0)."""
        F = self.field
        return PointLambda(F.sqrt(F.sqrt(self.a)), 0)

    # -- Sylow 2-subgroup

    def sylow(self):
        F = self.field
        L = self.seed()
        h = 2
        while not F.trace(L.x):
            L = self.halve(L)
            h += 1
        return SylowResult(h, self.from_lambda(L), h - 2)

    def is_zero(self):
        """True iff K(a) = 0, decided by whether the Sylow height equals n."""
        if self.field.n < 2:
            raise UnsupportedDegree("no Kloosterman zeros exist over F_2")
        return self.sylow().h == self.field.n

    # -- randomised baseline

    def random_point(self, rng):
        """A random affine point; each x is drawn uniformly and a root picked by coin flip."""
        F = self.field
        while True:
            x = F.random_element(rng)
            if x == 0:
                return self.two_torsion()
            c = x ^ F.mul(self.a, F.square(F.inv(x)))
            if F.trace(c):
                continue
            z = F.solve_quadratic(c)
            if rng.integers(2):
                z ^= 1
            return (x, F.mul(x, z))

    def lisonek_test(self, rng_seed=0, point=RANDOM):
        """One trial of the random-point order test.

        False means a is certainly not a zero (or this point was inconclusive);
        True certifies a zero.  For n = 2 the Hasse interval also contains 8,
        so a point of order 4 certifies nothing and exact counting is used.
        """
        F = self.field
        n = F.n
        if n < 2:
            raise UnsupportedDegree("no Kloosterman zeros exist over F_2")
        if n == 2:
            from .oracle import curve_order_naive
            return curve_order_naive(F, self.a) == 4
        if point is RANDOM:
            point = self.random_point(np.random.default_rng(rng_seed))
        Q = self.mul_pow2(n - 1, point)
        return Q is not None and self.double(Q) is None


def sylow2(field, a):
    return Curve2(field, a).sylow()


def is_zero2(field, a):
    return Curve2(field, a).is_zero()
