import numpy as np
import pytest

from kloosterman.ec3 import Curve3, is_zero3, sylow3
from kloosterman.errors import DegeneratePoint, NotThirdable, ZeroArgument
from kloosterman.gf3 import ONE, ZERO, FieldCtx3, add, neg, setup_gf3
from kloosterman.oracle import curve_order_naive, ord_p

e = FieldCtx3.from_int
F3 = setup_gf3(1)
F9 = setup_gf3(2)


def points(C):
    F = C.field
    roots = {}
    for y in F.elements():
        roots.setdefault(F.mul(y, y), []).append(y)
    return [(x, y) for x in F.elements() for y in roots.get(C.rhs(x), [])]


# -- examples


def test_group_examples():
    C = Curve3(F3, ONE)
    P = (ONE, ONE)
    assert C.contains(P)
    assert C.double(P) == (ONE, e(2)) == C.neg(P)
    assert C.triple(P) is None
    assert C.add(P, None) == P and C.add(None, P) == P
    assert C.add(P, C.neg(P)) is None


def test_third_examples():
    with pytest.raises(NotThirdable):
        Curve3(F3, ONE).third((ONE, ONE))
    C = Curve3(F3, e(2))
    assert C.contains((e(2), e(2)))
    with pytest.raises(NotThirdable):
        C.third((e(2), e(2)))
    with pytest.raises(DegeneratePoint):
        C.third(None)
    F = setup_gf3(3)
    C = Curve3(F, neg(ONE))      # rhs(0) = 1 is a square
    Q = next(P for P in points(C) if P[0] == ZERO)
    with pytest.raises(DegeneratePoint):
        C.third(Q)


def test_sylow_examples():
    assert sylow3(F3, ONE).h == 1
    assert sylow3(F3, e(2)).h == 1
    assert sum(1 for a in F9.elements(1) if sylow3(F9, a).h == 2) == 2
    with pytest.raises(ZeroArgument):
        Curve3(F9, ZERO)


def test_is_zero_examples():
    assert is_zero3(F3, ONE)
    assert not is_zero3(F3, e(2))
    F = setup_gf3(5)
    assert sum(is_zero3(F, a) for a in F.elements(1)) == 15


# -- group law and thirding against enumeration


@pytest.mark.parametrize("n", [1, 2, 3])
def test_group_law(n):
    F = setup_gf3(n)
    for a in F.elements(1):
        C = Curve3(F, a)
        pts = points(C) + [None]
        assert len(pts) == curve_order_naive(F, a)
        for P in pts:
            assert C.add(P, C.neg(P)) is None
            assert C.double(P) == C.add(P, P)
            for Q in pts:
                R = C.add(P, Q)
                assert C.contains(R)
                assert R == C.add(Q, P)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_thirding_tree(n):
    F = setup_gf3(n)
    for a in F.elements(1):
        C = Curve3(F, a)
        pts = points(C)
        thirds = {}
        for P in pts:
            thirds.setdefault(C.triple(P), []).append(P)
        for Q in pts:
            if Q[0] == ZERO:
                continue
            pm = thirds.get(Q, []) + thirds.get(C.neg(Q), [])
            xs = {P[0] for P in pm}
            if Q[1] != ZERO:
                assert (F.trace(C.thirding_beta(Q)) == 0) == bool(pm)
            if not pm:
                with pytest.raises(NotThirdable):
                    C.third(Q)
                continue
            # for y = 0 the thirds Q + T and Q - T are negatives of each other
            assert len(xs) == (2 if Q[1] == ZERO else 3)
            assert set(C.third_x_candidates(Q)) == xs
            for flip in (False, True):
                P = C.third(Q, flip)
                assert P[0] != ZERO
                assert C.triple(P) in (Q, C.neg(Q))


def test_x_zero_third_uses_next_root():
    C = Curve3(F9, ONE)
    x = e(2)                     # xi = -a
    Q = (x, F9.sqrt(C.rhs(x)))
    beta = C.thirding_beta(Q)
    root = F9.solve_cubic(beta)
    assert C._x_from_root(Q, root) == ZERO
    P = C.third(Q)
    assert P[0] == C._x_from_root(Q, add(root, ONE)) != ZERO
    assert C.triple(P) in (Q, C.neg(Q))


def test_order_two_point_is_its_own_third():
    F = setup_gf3(3)
    for a in F.elements(1):
        C = Curve3(F, a)
        for Q in points(C):
            if Q[1] == ZERO:
                assert C.third(Q) == Q
                assert C.triple(Q) == Q
                xs = {P[0] for P in points(C) if C.triple(P) == Q}
                assert set(C.third_x_candidates(Q)) == xs


@pytest.mark.parametrize("n", range(1, 6))
def test_sylow_matches_oracle(n):
    F = setup_gf3(n)
    for a in F.elements(1):
        assert sylow3(F, a).h == ord_p(curve_order_naive(F, a), 3)


@pytest.mark.parametrize("n", range(1, 7))
def test_generator_order(n):
    F = setup_gf3(n)
    for a in F.elements(1):
        C = Curve3(F, a)
        res = C.sylow()
        G = res.generator
        assert C.contains(G)
        assert C.mul_pow3(res.h, G) is None
        assert C.mul_pow3(res.h - 1, G) is not None
        assert res.iterations == res.h - 1


@pytest.mark.parametrize("n", range(2, 7))
def test_sign_invariance_exhaustive(n):
    F = setup_gf3(n)
    for a in F.elements(1):
        C = Curve3(F, a)
        r0, r1 = C.sylow(), C.sylow(flip=True)
        assert r0.h == r1.h


@pytest.mark.parametrize("n", [13, 20])
def test_sign_invariance_random(n):
    F = setup_gf3(n)
    rng = np.random.default_rng(n)
    for _ in range(300):
        a = F.random_element(rng)
        if a == ZERO:
            continue
        C = Curve3(F, a)
        assert C.sylow().h == C.sylow(flip=True).h


def test_third_roundtrip_n11():
    F = setup_gf3(11)
    rng = np.random.default_rng(11)
    done = 0
    while done < 1000:
        a = F.random_element(rng)
        if a == ZERO:
            continue
        C = Curve3(F, a)
        Q = C.random_point(rng)
        if Q[0] == ZERO or Q[1] == ZERO or F.trace(C.thirding_beta(Q)):
            continue
        assert C.triple(C.third(Q)) in (Q, C.neg(Q))
        done += 1


def test_determinism():
    F = setup_gf3(47)
    rng = np.random.default_rng(3)
    for _ in range(10):
        a = F.random_element(rng)
        assert Curve3(F, a).sylow() == Curve3(F, a).sylow()


# -- randomised baseline


def test_lisonek_examples():
    zeros = [a for a in F9.elements(1) if is_zero3(F9, a)]
    assert len(zeros) == 2
    for a in zeros:
        C = Curve3(F9, a)
        assert C.lisonek_test(point=C.sylow().generator)
        assert not C.lisonek_test(point=None)
    C = Curve3(F3, e(2))
    assert not any(C.lisonek_test(rng_seed=s) for s in range(10))
    assert Curve3(F3, ONE).lisonek_test()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_lisonek_one_sided(n):
    F = setup_gf3(n)
    for a in F.elements(1):
        C = Curve3(F, a)
        hits = [C.lisonek_test(rng_seed=s) for s in range(20)]
        if C.is_zero():
            # each trial certifies with probability 2/3
            assert any(hits)
        else:
            assert not any(hits)


def test_random_point_on_curve():
    F = setup_gf3(20)
    rng = np.random.default_rng(4)
    C = Curve3(F, e(12345))
    for _ in range(30):
        assert C.contains(C.random_point(rng))


def test_neg():
    C = Curve3(F9, ONE)
    for P in points(C):
        assert C.neg(C.neg(P)) == P
        assert C.neg(P)[1] == neg(P[1])
    assert C.neg(None) is None
