"""Hardware view: two coupled 11-stage binary registers.

A quaternary symbol Q(t) = u(t) + 2 v(t) comes out of a linear register u
and a register v whose feedback adds a carry term, the second elementary
symmetric function of the u taps.  The tap sets fall out of the degree-11
characteristic polynomial over Z4.  The script prints the wiring and
checks the output stream against the algebraic generator.
"""

import random

from iz4codes import codegen, gf2m, shiftreg

print("minimal polynomial of the ring generator (Z4, ascending):")
print(" ", shiftreg.min_poly_beta())
print("characteristic polynomial (degree 11):")
print(" ", shiftreg.char_poly())
print("recursion coefficients:", shiftreg.recursion_coeffs())
print("u-register taps (linear):     ", shiftreg.A_TAPS)
print("v-register feedforward taps:  ", shiftreg.B_TAPS)

print("\ncarry = sigma2 of the 7 u taps; factored form uses 6 ANDs:")
rng = random.Random(3)
for _ in range(4):
    bits = tuple(rng.randrange(2) for _ in range(7))
    assert shiftreg.sigma2(bits) == shiftreg.sigma2_factored(bits)
    print("  taps %s -> carry %d" % (bits, shiftreg.sigma2(bits)))

idx = codegen.CodeIndex(x=1, y=gf2m.from_dual_coords(37))
seed = shiftreg.seed_from_index(idx)
print("\nseed for %s: u = %s, v = %s" %
      (idx.label, format(seed.u, "011b"), format(seed.v, "011b")))

state, symbols = seed, []
for _ in range(codegen.PERIOD):
    state, sym, _, _ = shiftreg.step(state)
    symbols.append(sym)
oracle = codegen.gen_quaternary(idx)
print("register stream matches algebraic stream:",
      symbols == list(oracle.symbols))
print("state returns to seed after %d steps (full period):" % state.t,
      (state.u, state.v) == (seed.u, seed.v))
