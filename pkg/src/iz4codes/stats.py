"""Family-level statistics: category maxima, RMS, percentiles, CDF curves
in dB, balance histograms, and the paired zero-shift orthogonality check.

Inclusion rules used throughout (they make the sidelobe figures meaningful):
auto-correlation excludes the tau = 0 self peak; cross-correlation includes
tau = 0 and spans each unordered pair once.  RMS and percentiles default to
all included values; the cross-only variant is computed alongside since both
readings of "all correlation values" are defensible.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import codegen, correlation

ODD_CONVENTION = "standard"   # forward minus wrapped segment


def to_db(magnitude, length=codegen.PERIOD):
    """20 log10(magnitude / length).  Zero magnitude maps to -inf."""
    if length <= 0:
        raise ValueError("length must be positive")
    if magnitude < 0:
        raise ValueError("magnitude must be nonnegative")
    if magnitude == 0:
        return float("-inf")
    return 20.0 * math.log10(magnitude / length)


def _nearest_rank(cum, q):
    """Smallest magnitude whose cumulative count reaches ceil(q * total)."""
    tot = int(cum[-1])
    return int(np.searchsorted(cum, math.ceil(q * tot)))


def _top(hist):
    nz = np.nonzero(hist)[0]
    return int(nz.max()) if len(nz) else None


def cdf_points(values, length=codegen.PERIOD):
    """Empirical CDF of correlation magnitudes as (magnitude, percent) points,
    one point per distinct magnitude, nondecreasing, ending at 100."""
    values = np.asarray(values)
    if values.size == 0:
        raise ValueError("no values")
    if values.min() < 0 or values.max() > length:
        raise ValueError("magnitudes out of range 0..%d" % length)
    hist = np.bincount(values)
    cum = np.cumsum(hist)
    tot = int(cum[-1])
    return [(int(m), 100.0 * int(cum[m]) / tot) for m in np.nonzero(hist)[0]]


@dataclass
class FamilyProfile:
    """Correlation profile of a binary family.  Every dB figure keeps its
    underlying magnitude alongside; pair-statistics fields are None when the
    family has a single code, odd fields are None when odd is excluded."""
    family_kind: str
    family_size: int
    length: int
    include_odd: bool
    odd_convention: str
    even_acr: int = 0
    even_acr_db: float = 0.0
    even_ccr: int = None
    even_ccr_db: float = None
    odd_acr: int = None
    odd_acr_db: float = None
    odd_ccr: int = None
    odd_ccr_db: float = None
    max_all: int = 0
    max_all_db: float = 0.0
    rms: float = 0.0
    rms_db: float = 0.0
    p99: int = 0
    p99_db: float = 0.0
    p999: int = 0
    p999_db: float = 0.0
    cross_only: dict = field(default_factory=dict)
    cdf: list = field(default_factory=list)
    balance_histogram: dict = field(default_factory=dict)
    histograms: dict = field(default_factory=dict)

    def summary_lines(self):
        n = self.length
        rows = [("Even ACR", self.even_acr), ("Even CCR", self.even_ccr),
                ("Odd ACR", self.odd_acr), ("Odd CCR", self.odd_ccr),
                ("Max", self.max_all)]
        out = ["%-8s  family of %d codes, length %d"
               % (self.family_kind, self.family_size, n)]
        for name, mag in rows:
            if mag is None:
                continue
            out.append("%-10s %6d   %8.2f dB" % (name, mag, to_db(mag, n)))
        out.append("%-10s %8.1f %8.2f dB" % ("RMS", self.rms, self.rms_db))
        out.append("%-10s %6d   %8.2f dB" % ("99%", self.p99, self.p99_db))
        out.append("%-10s %6d   %8.2f dB" % ("99.9%", self.p999, self.p999_db))
        return out


def _spread(hist_sum, length):
    """RMS and nearest-rank 99 / 99.9 percentiles of a magnitude histogram,
    with exact integer accumulation before the final division."""
    tot = int(hist_sum.sum())
    if tot == 0:
        return None
    mags = np.arange(len(hist_sum), dtype=np.int64)
    sq = int((hist_sum * mags * mags).sum())
    cum = np.cumsum(hist_sum)
    rms = math.sqrt(sq / tot)
    p99 = _nearest_rank(cum, 0.99)
    p999 = _nearest_rank(cum, 0.999)
    return {"rms": rms, "rms_db": to_db(rms, length),
            "p99": p99, "p99_db": to_db(p99, length),
            "p999": p999, "p999_db": to_db(p999, length)}


def family_profile(family, include_odd=True, mode="accelerated",
                   workers=None):
    """Profile a binary FamilySet: category maxima, RMS, percentiles, CDF and
    balance histogram.  Deterministic for any worker count."""
    if len(family) == 0:
        raise ValueError("empty family")
    bits = family.bit_matrix()
    n = bits.shape[1]
    hists = correlation.family_histograms(bits, include_odd=include_odd,
                                          workers=workers, mode=mode)
    keys = ["even_auto", "even_cross"]
    if include_odd:
        keys += ["odd_auto", "odd_cross"]
    included = {k: hists[k] for k in keys}
    total = sum(included.values())
    cum = np.cumsum(total)
    tot = int(cum[-1])

    prof = FamilyProfile(
        family_kind=family.kind, family_size=len(family), length=n,
        include_odd=include_odd, odd_convention=ODD_CONVENTION)
    prof.even_acr = _top(hists["even_auto"])
    prof.even_acr_db = to_db(prof.even_acr, n)
    tops = [prof.even_acr]
    if len(family) > 1:
        prof.even_ccr = _top(hists["even_cross"])
        prof.even_ccr_db = to_db(prof.even_ccr, n)
        tops.append(prof.even_ccr)
    if include_odd:
        prof.odd_acr = _top(hists["odd_auto"])
        prof.odd_acr_db = to_db(prof.odd_acr, n)
        tops.append(prof.odd_acr)
        if len(family) > 1:
            prof.odd_ccr = _top(hists["odd_cross"])
            prof.odd_ccr_db = to_db(prof.odd_ccr, n)
            tops.append(prof.odd_ccr)
    prof.max_all = max(tops)
    prof.max_all_db = to_db(prof.max_all, n)

    spread = _spread(total, n)
    prof.rms, prof.rms_db = spread["rms"], spread["rms_db"]
    prof.p99, prof.p99_db = spread["p99"], spread["p99_db"]
    prof.p999, prof.p999_db = spread["p999"], spread["p999_db"]
    cross = included["even_cross"].copy()
    if include_odd:
        cross += included["odd_cross"]
    prof.cross_only = _spread(cross, n) or {}

    top_mag = _top(total)
    prof.cdf = [(int(m), int(cum[m]) / tot) for m in range(top_mag + 1)]
    bal = {}
    for code in family.codes:
        b = codegen.balance(code)
        bal[b] = bal.get(b, 0) + 1
    prof.balance_histogram = dict(sorted(bal.items()))
    prof.histograms = {k: {int(m): int(v[m]) for m in np.nonzero(v)[0]}
                       for k, v in included.items()}
    return prof


def paired_orthogonality(pilot, data):
    """Zero-shift inner product of a length-10230 pilot code against a
    length-2046 data code held constant for 5 consecutive pilot chips:
    sum of (-1)^pilot(t) (-1)^data(floor(t/5)).  Zero means orthogonal."""
    pilot = np.asarray(getattr(pilot, "bits", pilot))
    data = np.asarray(getattr(data, "bits", data))
    if len(pilot) != 5 * codegen.PERIOD:
        raise ValueError("pilot length must be %d" % (5 * codegen.PERIOD))
    if len(data) != codegen.PERIOD:
        raise ValueError("data length must be %d" % codegen.PERIOD)
    mism = int(np.sum(pilot ^ np.repeat(data, 5)))
    return len(pilot) - 2 * mism
