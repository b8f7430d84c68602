"""Coupled 11-stage shift registers generating the quaternary family.

The degree-11 characteristic recursion Q(t+11) = sum c_k Q(t+k) over Z4
splits, via Q = u + 2v, into a linear 7-tap recursion for the u register and
a coupled recursion for the v register that adds a carry term sigma2 (the
second elementary symmetric function of the 7 u taps, the mod-4 carry of
their mod-2 sum) plus a u feedforward from the doubled coefficients.

All polynomials here are derived from the ring algebra and verified by
evaluation at beta before use; algebraic generation is the authoritative
oracle for every emitted symbol.
"""

from dataclasses import dataclass

import numpy as np

from . import codegen, gr4m

STAGES = 11


def min_poly_beta():
    """Degree-10 Z4 minimal polynomial of beta, ascending coefficients.

    m_nu(beta) leaves the 2-torsion residue 2(beta+1), so the minimal
    polynomial is m_nu + 2(x+1).  Verified by ring evaluation at beta;
    a nonzero residue aborts.
    """
    m = list(gr4m.M_NU)
    m[0] = (m[0] + 2) % 4
    m[1] = (m[1] + 2) % 4
    mb = tuple(m)
    if gr4m.ring_eval(mb, gr4m.BETA) != gr4m.ZERO:
        raise RuntimeError("minimal polynomial does not annihilate beta: %r"
                           % (gr4m.ring_eval(mb, gr4m.BETA),))
    return mb


def char_poly():
    """Degree-11 characteristic polynomial m_beta(x)(x+1) over Z4.

    The extra root 1 absorbs the x 3^t term; every family code satisfies the
    induced recursion over its full period.
    """
    mb = min_poly_beta()
    cp = [0] * (len(mb) + 1)
    for i, c in enumerate(mb):
        cp[i] = (cp[i] + c) % 4
        cp[i + 1] = (cp[i + 1] + c) % 4
    cp = tuple(cp)
    if gr4m.ring_eval(cp, gr4m.BETA) != gr4m.ZERO:
        raise RuntimeError("characteristic polynomial fails at beta")
    return cp


def recursion_coeffs():
    """c_k with Q(t+11) = sum_k c_k Q(t+k) mod 4: negated char_poly tail."""
    cp = char_poly()
    return tuple((-c) % 4 for c in cp[:STAGES])


_REC = recursion_coeffs()
# u(t+11) XORs the odd-coefficient taps; the v feedforward takes the taps
# whose coefficient has a 2s bit.
A_TAPS = tuple(k for k, c in enumerate(_REC) if c & 1)
B_TAPS = tuple(k for k, c in enumerate(_REC) if c & 2)
_A_MASK = sum(1 << k for k in A_TAPS)
_B_MASK = sum(1 << k for k in B_TAPS)


def sigma2(bits):
    """Second elementary symmetric function of 7 bits over GF(2):
    parity of the number of pairs i<j with b_i = b_j = 1."""
    if len(bits) != 7:
        raise ValueError("sigma2 takes exactly 7 inputs")
    pc = sum(bits)
    return (pc * (pc - 1) // 2) & 1


def sigma2_factored(bits):
    """Grouped two-level form of sigma2 (29 XOR and 6 AND gates in hardware):
    (b1+b2+b3+b4)(b5+b6+b7) + (b1+b2)(b3+b4) + (b5+b6)b7
    + b1 b2 + b3 b4 + b5 b6."""
    b1, b2, b3, b4, b5, b6, b7 = bits
    return (((b1 ^ b2 ^ b3 ^ b4) & (b5 ^ b6 ^ b7))
            ^ ((b1 ^ b2) & (b3 ^ b4)) ^ ((b5 ^ b6) & b7)
            ^ (b1 & b2) ^ (b3 & b4) ^ (b5 & b6))


@dataclass
class RegisterState:
    u: int          # 11 bits, bit k = U(t+k)
    v: int          # 11 bits, bit k = V(t+k)
    t: int = 0


def step(state):
    """Advance one chip: returns (next_state, q, v, w) where q = u + 2v is
    the quaternary symbol at time t, v the QP bit, w = u XOR v the IP bit."""
    u0 = state.u & 1
    v0 = state.v & 1
    pc = (state.u & _A_MASK).bit_count()
    un = pc & 1
    sig = (pc * (pc - 1) // 2) & 1       # sigma2 over the same 7 taps
    vn = ((state.v & _A_MASK).bit_count()
          ^ (state.u & _B_MASK).bit_count() ^ sig) & 1
    nxt = RegisterState((state.u >> 1) | (un << (STAGES - 1)),
                        (state.v >> 1) | (vn << (STAGES - 1)),
                        state.t + 1)
    return nxt, u0 + 2 * v0, v0, u0 ^ v0


def seed_from_index(idx):
    """Load both registers from the first 11 algebraically generated symbols."""
    q = codegen.gen_quaternary(idx).symbols[:STAGES]
    u = 0
    v = 0
    for k, s in enumerate(q):
        u |= (int(s) & 1) << k
        v |= (int(s) >> 1) << k
    return RegisterState(u, v, 0)


def generate(idx, length=codegen.PERIOD):
    """Generate a quaternary code by register stepping from the seed."""
    state = seed_from_index(idx)
    out = np.empty(length, dtype=np.int8)
    for t in range(length):
        state, q, _v, _w = step(state)
        out[t] = q
    return codegen.QuaternaryCode(idx, out)
