"""The ternary curves E(a): y^2 = x^3 + x^2 - a over F(3^n).

Points are ``(x, y)`` pairs of F(3^n) elements; ``None`` is the identity.
"""

import numpy as np

from .ec2 import RANDOM, SylowResult
from .errors import DegeneratePoint, NotThirdable, UnsupportedDegree, ZeroArgument
from .gf3 import ONE, ZERO, add, neg, sub


class Curve3:
    def __init__(self, field, a):
        if a == ZERO:
            raise ZeroArgument("a must be nonzero")
        self.field = field
        self.a = a

    def __repr__(self):
        return f"Curve3(n={self.field.n}, a={self.field.to_str(self.a)})"

    def rhs(self, x):
        F = self.field
        return sub(add(F.cube(x), F.mul(x, x)), self.a)

    def contains(self, P):
        if P is None:
            return True
        x, y = P
        return self.field.mul(y, y) == self.rhs(x)

    # -- group law

    def neg(self, P):
        if P is None:
            return None
        return (P[0], neg(P[1]))

    def _chord(self, x1, y1, x2, lam):
        # a2 = 1: x3 = lam^2 - 1 - x1 - x2
        F = self.field
        x3 = sub(sub(sub(F.mul(lam, lam), ONE), x1), x2)
        y3 = sub(F.mul(lam, sub(x1, x3)), y1)
        return (x3, y3)

    def double(self, P):
        if P is None:
            return None
        x, y = P
        if y == ZERO:
            return None
        # tangent slope (3x^2 + 2x) / 2y = x / y in characteristic 3
        lam = self.field.div(x, y)
        return self._chord(x, y, x, lam)

    def add(self, P, Q):
        if P is None:
            return Q
        if Q is None:
            return P
        x1, y1 = P
        x2, y2 = Q
        if x1 == x2:
            if y1 == y2:
                return self.double(P)
            return None
        lam = self.field.div(sub(y2, y1), sub(x2, x1))
        return self._chord(x1, y1, x2, lam)

    def triple(self, P):
        return self.add(self.double(P), P)

    def mul(self, k, P):
        if k < 0:
            return self.mul(-k, self.neg(P))
        R = None
        for bit in bin(k)[2:]:
            R = self.double(R)
            if bit == "1":
                R = self.add(R, P)
        return R

    def mul_pow3(self, k, P):
        for _ in range(k):
            if P is None:
                break
            P = self.triple(P)
        return P

    # -- thirding

    def thirding_beta(self, Q):
        """a*eta/xi^3; Q is 3-divisible exactly when its trace vanishes."""
        if Q is None or Q[0] == ZERO:
            raise DegeneratePoint("cannot third the identity or a point with x = 0")
        F = self.field
        xi, eta = Q
        return F.div(F.mul(self.a, eta), F.cube(xi))

    def _x_from_root(self, Q, root):
        # undo X = xi^2/(a eta) * root and X -> 1/X - a(1 - xi)/xi, then x = X^(1/3)
        F = self.field
        xi, eta = Q
        a = self.a
        a_eta = F.mul(a, eta)
        # a eta/(xi^2 root) - a(1 - xi)/xi over the common denominator xi^2 root
        num = sub(a_eta, F.mul(F.mul(F.mul(a, sub(ONE, xi)), xi), root))
        X = F.div(num, F.mul(F.mul(xi, xi), root))
        return F.cuberoot(X)

    def third_x_candidates(self, Q):
        """x-coordinates of the three thirds of +-Q, one per root X, X+1, X-1."""
        if Q is not None and Q[1] == ZERO and Q[0] != ZERO:
            T = self.seed()
            return [Q[0], self.add(Q, T)[0], self.add(Q, self.neg(T))[0]]
        beta = self.thirding_beta(Q)
        root = self.field.solve_cubic(beta)
        return [self._x_from_root(Q, r) for r in (root, add(root, ONE), sub(root, ONE))]

    def third(self, Q, flip=False):
        """A point P with [3]P = +-Q.

        The cubic root is the solver's table value; if that third has x = 0
        (possible only when xi = -a) the root plus one is used instead, since
        a point with x = 0 cannot be tested for further divisibility.  The y
        coordinate is the canonical square root, negated when ``flip`` is set.
        A point of order 2 (y = 0) is its own third.
        """
        if Q is not None and Q[1] == ZERO and Q[0] != ZERO:
            return Q
        return self._third(Q, self.thirding_beta(Q), flip)

    def _third(self, Q, beta, flip):
        F = self.field
        if F.trace(beta):
            raise NotThirdable("trace(a*eta/xi^3) != 0")
        root = F.solve_cubic(beta)
        x = self._x_from_root(Q, root)
        if x == ZERO:
            x = self._x_from_root(Q, add(root, ONE))
        y = F.sqrt(self.rhs(x))
        return (x, neg(y) if flip else y)

    # -- Sylow 3-subgroup

    def seed(self):
        """The 3-torsion point (a^(1/3), a^(1/3))."""
        r = self.field.cuberoot(self.a)
        return (r, r)

    def sylow(self, flip=False):
        F = self.field
        P = self.seed()
        # for the seed, a*y/x^3 = a^(1/3)
        beta = P[1]
        h = 1
        while not F.trace(beta):
            P = self._third(P, beta, flip)
            beta = self.thirding_beta(P)
            h += 1
            if h > F.n + 1:
                raise AssertionError("Sylow height exceeds the Hasse bound")
        return SylowResult(h, P, h - 1)

    def is_zero(self):
        """True iff K(a) = 0; n = 1 falls back to exact point counting."""
        F = self.field
        if F.n == 1:
            from .oracle import curve_order_naive
            return curve_order_naive(F, self.a) == 3
        return self.sylow().h == F.n

    # -- randomised baseline

    def random_point(self, rng):
        F = self.field
        while True:
            x = F.random_element(rng)
            r = self.rhs(x)
            if r == ZERO:
                return (x, ZERO)
            if not F.is_square(r):
                continue
            y = F.sqrt(r)
            if rng.integers(2):
                y = neg(y)
            return (x, y)

    def lisonek_test(self, rng_seed=0, point=RANDOM):
        """One trial of the random-point order test (n = 1 uses exact counting)."""
        F = self.field
        if F.n == 1:
            from .oracle import curve_order_naive
            return curve_order_naive(F, self.a) == 3
        if point is RANDOM:
            point = self.random_point(np.random.default_rng(rng_seed))
        Q = self.mul_pow3(F.n - 1, point)
        return Q is not None and self.triple(Q) is None


def sylow3(field, a):
    return Curve3(field, a).sylow()


def is_zero3(field, a):
    return Curve3(field, a).is_zero()
