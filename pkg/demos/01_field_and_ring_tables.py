"""Structural tables behind the code families.

Walks the GF(2^10) layer (primitive polynomial, trace-dual basis) and the
Galois-ring layer on top of it (Graeffe lift, Teichmuller set, the period
2046 generator beta) and prints the tables a hardware implementer would pin.
"""

from iz4codes import gf2m, gr4m


def poly_str(bits):
    terms = [("x^%d" % i if i > 1 else ("x" if i else "1"))
             for i in range(bits.bit_length()) if bits >> i & 1]
    return " + ".join(reversed(terms))


def ring_poly_str(coeffs):
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "x^%d" % i if i > 1 else ("x" if i else "1")
        terms.append(mono if c == 1 and i else ("%d%s" % (c, mono) if i
                                                else str(c)))
    return " + ".join(reversed(terms))


print("binary field GF(2^10)")
print("  m_alpha =", poly_str(gf2m.MOD_POLY))
print("  alpha has order", gf2m.ORDER)
print("  theta = alpha^64 + alpha^65 = alpha^%d, trace(theta) = %d"
      % (gf2m.discrete_log(gf2m.THETA), gf2m.fe_trace(gf2m.THETA)))

print("\ntrace-dual basis delta_i of {1, alpha, ..., alpha^9}")
for i, d in enumerate(gf2m.dual_basis()):
    print("  delta_%d = alpha^%-3d" % (i, gf2m.discrete_log(d)))

print("\ndual coordinates are trace inner products: 1 and theta expand as")
for name, v in (("1", 1), ("theta", gf2m.THETA)):
    h = gf2m.dual_coords(v)
    print("  %-5s -> indices %s" % (name,
                                    [i for i in range(10) if h >> i & 1]))

print("\nGalois ring GR(4,10) = Z4[x] / m_nu(x)")
print("  m_nu = graeffe lift of m_alpha =", ring_poly_str(gr4m.M_NU))
print("  graeffe lift of x+1 ->", ring_poly_str(gr4m.graeffe_lift(0b11)))
print("  trace of 1:", gr4m.ring_trace(gr4m.ONE),
      " trace of lifted theta:", gr4m.ring_trace(gr4m.THETA_LIFT))

beta = gr4m.BETA
order = 1
cur = beta
while cur != gr4m.ONE:
    cur = gr4m.ring_mul(cur, beta)
    order += 1
print("  beta = nu (1 + 2 theta~) has order", order)
print("  beta mod 2 reduces to alpha:", gr4m.mod2_reduce(beta) == gf2m.ALPHA)
