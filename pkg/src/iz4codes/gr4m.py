"""Arithmetic in the Galois ring GR(4,10).

Ring elements are tuples of 10 coefficients over Z4 (index i = coefficient of
nu^i), reduced by the Graeffe lift of the field polynomial:

    m_nu(x) = x^10 + x^9 + 3x^8 + 2x^7 + x^6 + x^3 + x^2 + 2x + 1

nu reduces to alpha mod 2 and has multiplicative order 1023.  The ring hosts
the Teichmuller set, the Frobenius automorphism and the trace T used by the
quaternary code definition.
"""

from . import gf2m
from .gf2m import ALOG, LOG, M, ORDER, fe_mul


def graeffe_lift(pbits):
    """Lift a binary polynomial (bitmask) to Z4 via q(x^2) = (-1)^d p(x)p(-x).

    Returns the ascending Z4 coefficient tuple of q.  The product p(x)p(-x)
    must come out even-powered; a surviving odd coefficient means the input
    was not square-free mod 2.
    """
    if pbits <= 0:
        raise ValueError("empty polynomial")
    d = pbits.bit_length() - 1
    c = [(pbits >> i) & 1 for i in range(d + 1)]
    cm = [(-v if i & 1 else v) % 4 for i, v in enumerate(c)]
    prod = [0] * (2 * d + 1)
    for i, ci in enumerate(c):
        if ci:
            for j, cj in enumerate(cm):
                prod[i + j] = (prod[i + j] + ci * cj) % 4
    if d & 1:
        prod = [(-v) % 4 for v in prod]
    if any(prod[1::2]):
        raise ValueError("product not even-powered: input not square-free mod 2")
    return tuple(prod[0::2])


M_NU = graeffe_lift(gf2m.MOD_POLY)

ZERO = (0,) * M
ONE = (1,) + (0,) * (M - 1)
NU = (0, 1) + (0,) * (M - 2)

# x^(10+k) mod m_nu for k = 0..8: reduction table for degree-18 products
_RES = []
_r = tuple((-v) % 4 for v in M_NU[:M])
for _ in range(M - 1):
    _RES.append(_r)
    _carry = _r[M - 1]
    _r = tuple((((0,) + _r[:M - 1])[i] + _carry * _RES[0][i]) % 4 for i in range(M))
_RES.append(_r)


def ring_add(a, b):
    return tuple((x + y) % 4 for x, y in zip(a, b))


def ring_sub(a, b):
    return tuple((x - y) % 4 for x, y in zip(a, b))


def ring_scale(k, a):
    return tuple((k * x) % 4 for x in a)


def ring_mul(a, b):
    """Product reduced by m_nu over Z4."""
    prod = [0] * (2 * M - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    out = [v % 4 for v in prod[:M]]
    for k in range(M - 1):
        hi = prod[M + k] % 4
        if hi:
            res = _RES[k]
            for i in range(M):
                out[i] = (out[i] + hi * res[i]) % 4
    return tuple(out)


def ring_eval(coeffs, a):
    """Evaluate a Z4 polynomial (ascending coefficients) at ring element a."""
    acc = ZERO
    for c in reversed(coeffs):
        acc = ring_mul(acc, a)
        acc = ring_add(acc, ring_scale(c, ONE))
    return acc


def mod2_reduce(a):
    """Coefficient-wise reduction mod 2, reinterpreted in GF(2^10)."""
    e = 0
    for i, x in enumerate(a):
        e |= (x & 1) << i
    return e


def _build_nu_powers():
    pows = [ONE]
    cur = ONE
    for _ in range(ORDER - 1):
        cur = ring_mul(cur, NU)
        pows.append(cur)
    if ring_mul(cur, NU) != ONE:
        raise RuntimeError("nu does not have order 1023")
    return pows


_NUPOW = _build_nu_powers()


def teichmuller_lift(a):
    """The unique Teichmuller element reducing to a mod 2 (alpha^k -> nu^k)."""
    if a == 0:
        return ZERO
    return _NUPOW[LOG[a]]


def two_adic(a):
    """Decompose a = t(a0) + 2 t(a1) with t the Teichmuller lift.

    Returns the mod-2 images (a0, a1) as field elements.
    """
    a0 = mod2_reduce(a)
    d = ring_sub(a, teichmuller_lift(a0))
    a1 = 0
    for i, x in enumerate(d):
        if x & 1:
            raise RuntimeError("2-adic remainder not even")
        a1 |= (x >> 1) << i
    return a0, a1


def frobenius(a):
    """Ring automorphism: a0 + 2 a1 -> a0^2 + 2 a1^2 on 2-adic coordinates."""
    a0, a1 = two_adic(a)
    sq = teichmuller_lift(fe_mul(a0, a0))
    if a1 == 0:
        return sq
    return ring_add(sq, ring_scale(2, teichmuller_lift(fe_mul(a1, a1))))


def ring_trace(a):
    """T(a) = sum of the 10 Frobenius conjugates; a Z4 scalar."""
    acc = a
    cur = a
    for _ in range(M - 1):
        cur = frobenius(cur)
        acc = ring_add(acc, cur)
    if any(acc[1:]):
        raise RuntimeError("trace is not a ring constant")
    return acc[0]


_TEICH_TRACE = None


def teichmuller_trace_table():
    """T(teichmuller_lift(a)) for every field element a, as a list of 1024
    Z4 values indexed by the mod-2 image.  Built once on first use."""
    global _TEICH_TRACE
    if _TEICH_TRACE is None:
        _TEICH_TRACE = [ring_trace(teichmuller_lift(a)) for a in range(1024)]
    return _TEICH_TRACE


THETA_LIFT = teichmuller_lift(gf2m.THETA)

# beta = nu(1 + 2 theta~): the period-2046 unit driving the quaternary family
BETA = ring_mul(NU, ring_add(ONE, ring_scale(2, THETA_LIFT)))
