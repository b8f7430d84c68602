"""Orthogonality check between a long pilot code and a slow data code.

A pilot code of length 5 x 2046 runs against a data code of length 2046
clocked at a fifth of the pilot rate, so each data chip holds for 5
consecutive pilot chips.  The zero-lag inner product measures their
interference.  An upsampled copy scores +10230, its complement -10230,
and a single pilot chip flip moves the score by 2.
"""

import numpy as np

from iz4codes import codegen, stats

rng = np.random.default_rng(11)
data = rng.integers(0, 2, codegen.PERIOD, dtype=np.int8)

pilot = np.repeat(data, 5)
print("pilot == upsampled data:   ", stats.paired_orthogonality(pilot, data))
print("pilot == complement:       ",
      stats.paired_orthogonality(pilot ^ 1, data))

flipped = pilot.copy()
flipped[123] ^= 1
print("one chip flipped:          ",
      stats.paired_orthogonality(flipped, data))

random_pilot = rng.integers(0, 2, 5 * codegen.PERIOD, dtype=np.int8)
print("random pilot (typical):    ",
      stats.paired_orthogonality(random_pilot, data))

member = codegen.build_iz4_2s().codes[0]
print("random pilot vs %s: %d" %
      (member.label, stats.paired_orthogonality(random_pilot, member)))
