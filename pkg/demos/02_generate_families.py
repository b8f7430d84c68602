"""Build the three code families and walk the selection pipeline.

MFD2 is the quaternary family (512 codes, period 2046).  IZ4_2 is its
binary image (1024 codes, two phases per parent).  IZ4_2S is the screened
subset: balance filter, cyclic deduplication, then a greedy sweep that
holds odd autocorrelation to 140 and odd crosscorrelation to 198.
"""

from collections import Counter

from iz4codes import codegen

mfd2 = codegen.build_family("MFD2")
print("MFD2: %d quaternary codes of period %d" % (len(mfd2.codes),
                                                  codegen.PERIOD))
q = mfd2.codes[0]
print("  first code %s starts %s" % (q.label, q.symbols[:11].tolist()))
print("  symbol balance (n0,n1,n2,n3) =", codegen.quaternary_balance(q))

iz4 = codegen.build_family("IZ4_2")
bal = Counter(codegen.balance(c) for c in iz4.codes)
print("\nIZ4_2: %d binary codes; balance histogram:" % len(iz4.codes))
for v in sorted(bal):
    print("  balance %+4d : %d codes" % (v, bal[v]))

kept = codegen.select_balanced_subset(iz4)
print("\nbalance filter at |n0 - n1| <= 2 keeps %d codes" % len(kept.codes))

screened = codegen.build_iz4_2s()
print("\nIZ4_2S after odd-correlation screening: %d codes" %
      len(screened.codes))
print("  caps: odd auto <= %d, odd cross <= %d" %
      (codegen.DEFAULT_ODD_AUTO_CAP, codegen.DEFAULT_ODD_CROSS_CAP))
print("  first members:", [c.label for c in screened.codes[:5]])
final_bal = Counter(codegen.balance(c) for c in screened.codes)
print("  balance histogram:", dict(sorted(final_bal.items())))
