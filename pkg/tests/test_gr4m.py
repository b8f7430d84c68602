import random

from iz4codes import gf2m, gr4m
from iz4codes.gf2m import ALOG, THETA, fe_mul, fe_trace
from iz4codes.gr4m import (BETA, M_NU, NU, ONE, THETA_LIFT, ZERO, frobenius,
                           graeffe_lift, mod2_reduce, ring_add, ring_eval,
                           ring_mul, ring_scale, ring_trace, teichmuller_lift,
                           two_adic)

rng = random.Random(2046)


def ring_pow(a, k):
    acc = ONE
    base = a
    while k:
        if k & 1:
            acc = ring_mul(acc, base)
        base = ring_mul(base, base)
        k >>= 1
    return acc


def random_ring_element():
    return tuple(rng.randrange(4) for _ in range(10))


def test_graeffe_lift():
    assert M_NU == (1, 2, 1, 1, 0, 0, 1, 2, 3, 1, 1)
    assert graeffe_lift(0b11) == (3, 1)          # x+1 -> x+3
    # lift property: mod-2 reduction returns the input polynomial
    back = sum((c & 1) << i for i, c in enumerate(M_NU))
    assert back == gf2m.MOD_POLY


def test_m_nu_annihilates_nu():
    assert ring_eval(M_NU, NU) == ZERO


def test_ring_mul():
    assert ring_pow(NU, 1023) == ONE
    for k in range(1, 1023, 111):
        assert ring_pow(NU, k) != ONE
    b = random_ring_element()
    assert ring_mul(ONE, b) == b
    for _ in range(50):
        a, b = random_ring_element(), random_ring_element()
        assert ring_mul(ring_scale(2, a), ring_scale(2, b)) == ZERO


def test_mod2_reduce():
    assert mod2_reduce(NU) == gf2m.ALPHA
    y = random_ring_element()
    assert mod2_reduce(ring_scale(2, y)) == 0
    for _ in range(100):
        a, b = random_ring_element(), random_ring_element()
        assert mod2_reduce(ring_mul(a, b)) == fe_mul(mod2_reduce(a), mod2_reduce(b))
        assert mod2_reduce(ring_add(a, b)) == mod2_reduce(a) ^ mod2_reduce(b)


def test_teichmuller_lift():
    assert teichmuller_lift(gf2m.ALPHA) == NU
    assert teichmuller_lift(0) == ZERO
    assert teichmuller_lift(THETA) == ring_pow(NU, gf2m.discrete_log(THETA))
    # e^(2^10) = e for members of the Teichmuller set
    for a in (1, gf2m.ALPHA, THETA, ALOG[700]):
        e = teichmuller_lift(a)
        assert ring_pow(e, 1 << 10) == e


def test_teichmuller_closure():
    for _ in range(300):
        a, b = rng.randrange(1024), rng.randrange(1024)
        prod = ring_mul(teichmuller_lift(a), teichmuller_lift(b))
        assert prod == teichmuller_lift(fe_mul(a, b))


def test_frobenius():
    assert frobenius(NU) == ring_mul(NU, NU)
    two = ring_scale(2, ONE)
    assert frobenius(two) == two
    for _ in range(100):
        a = random_ring_element()
        cur = a
        for _ in range(10):
            cur = frobenius(cur)
        assert cur == a


def test_ring_trace():
    assert ring_trace(THETA_LIFT) == 1
    assert ring_trace(ZERO) == 0
    assert ring_trace(ONE) == 2
    for _ in range(100):
        a, b = random_ring_element(), random_ring_element()
        assert ring_trace(ring_scale(2, a)) == 2 * fe_trace(mod2_reduce(a)) % 4
        assert ring_trace(ring_add(a, b)) == (ring_trace(a) + ring_trace(b)) % 4
        assert ring_trace(frobenius(a)) == ring_trace(a)


def test_two_adic():
    assert two_adic(NU) == (gf2m.ALPHA, 0)
    assert two_adic(ring_scale(2, ONE)) == (0, 1)
    for _ in range(100):
        y = rng.randrange(1024)
        one_2y = ring_add(ONE, ring_scale(2, teichmuller_lift(y)))
        assert two_adic(one_2y) == (1, y)
        a = random_ring_element()
        a0, a1 = two_adic(a)
        recomp = ring_add(teichmuller_lift(a0),
                          ring_scale(2, teichmuller_lift(a1)))
        assert recomp == a


def test_beta():
    assert BETA == ring_mul(NU, ring_add(ONE, ring_scale(2, THETA_LIFT)))
    assert ring_pow(BETA, 2046) == ONE
    assert ring_pow(BETA, 1023) != ONE
    assert mod2_reduce(BETA) == gf2m.ALPHA
