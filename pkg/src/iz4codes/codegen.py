"""Index sets and code families.

Builds the index sets J (256 elements, dual coordinates h8 = h9 = 0) and H
(512 elements, greedy maximal with the y+theta exclusion), the quaternary
families D and MFD2 of period 2046, their binary components, and the combined
binary family IZ4_2 together with its balanced / correlation-screened subset
IZ4_2S.

Canonical ordering, fixed for reproducible code IDs: QP (v) block before IP
(w) block; within a block, codes sorted by the dual-coordinate integer of y,
then by x.
"""

from dataclasses import dataclass, field

import numpy as np

from . import gf2m, gr4m
from .gf2m import ALOG, LOG, ORDER, THETA, dual_basis, dual_coords, fe_trace, fe_mul

PERIOD = 2 * ORDER        # 2046

# Odd-correlation design caps of the published family profile at length 2046:
# |odd autocorrelation| <= 140 (-23.30 dB), |odd cross| <= 198 (-20.28 dB).
DEFAULT_ODD_AUTO_CAP = 140
DEFAULT_ODD_CROSS_CAP = 198

FORMAT_VERSION = "1"


@dataclass(frozen=True)
class CodeIndex:
    x: int
    y: int

    def __post_init__(self):
        if self.x not in (0, 1):
            raise ValueError("x must be 0 or 1")
        if not 0 <= self.y < 1024:
            raise ValueError("y out of field range")

    @property
    def h(self):
        """Dual-coordinate integer of y (bit i = h_i)."""
        return dual_coords(self.y)

    @property
    def label(self):
        return "x%d-h%03d" % (self.x, self.h)


@dataclass
class QuaternaryCode:
    index: CodeIndex
    symbols: np.ndarray        # int8, values in {0,1,2,3}, length 2046

    @property
    def label(self):
        return self.index.label


@dataclass
class BinaryCode:
    index: CodeIndex
    phase: str                 # "QP" (v component) or "IP" (w component)
    bits: np.ndarray           # int8, values in {0,1}, length 2046

    @property
    def label(self):
        return ("v-" if self.phase == "QP" else "w-") + self.index.label


@dataclass
class FamilySet:
    kind: str
    codes: list
    metadata: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.codes)

    def bit_matrix(self):
        return np.stack([c.bits for c in self.codes])


_TABLES = None


def _tables():
    """(MSEQ, TB): tr(alpha^s) for s < 1023 and T(beta^t) for t < 2046."""
    global _TABLES
    if _TABLES is None:
        mseq = np.array([fe_trace(ALOG[s]) for s in range(ORDER)], dtype=np.int8)
        tb = np.empty(PERIOD, dtype=np.int8)
        bp = gr4m.ONE
        for t in range(PERIOD):
            tb[t] = gr4m.ring_trace(bp)
            bp = gr4m.ring_mul(bp, gr4m.BETA)
        if bp != gr4m.ONE:
            raise RuntimeError("beta does not have period 2046")
        _TABLES = (mseq, tb)
    return _TABLES


def build_J():
    """All 256 field elements with dual coordinates h8 = h9 = 0.

    Ordered by dual-coordinate integer.  Aborts if the closure property
    fails: no y+1, y+theta or y+theta+1 may land back in J.
    """
    delta = dual_basis()
    members = []
    for h in range(256):
        y = 0
        for i in range(8):
            if h >> i & 1:
                y ^= delta[i]
        members.append(y)
    jset = set(members)
    for y in members:
        for bad in (y ^ 1, y ^ THETA, y ^ THETA ^ 1):
            if bad in jset:
                raise RuntimeError("J closure violated at y=%d" % y)
    return tuple(members)


def build_H():
    """Greedy maximal set with the y+theta exclusion, 512 elements.

    Walks field elements in dual-coordinate order and keeps y whenever y+theta
    was not already kept.  Used for the full family D; MFD2 uses J.
    """
    delta = dual_basis()
    kept = []
    taken = set()
    for h in range(1024):
        y = 0
        for i in range(10):
            if h >> i & 1:
                y ^= delta[i]
        if (y ^ THETA) not in taken:
            taken.add(y)
            kept.append(y)
    if len(kept) != 512:
        raise RuntimeError("H is not maximal: %d elements" % len(kept))
    return tuple(kept)


def gen_quaternary(idx):
    """Q(t) = x 3^t + T((1+2y~) beta^t) mod 4 for t = 0..2045.

    Uses the linear split T((1+2y~) beta^t) = T(beta^t) + 2 tr(y alpha^t),
    which reduces generation to two precomputed tables plus an m-sequence
    shift; gen_quaternary_ring is the unoptimized definition.
    """
    mseq, tb = _tables()
    t = np.arange(PERIOD)
    sym = tb.astype(np.int16).copy()
    if idx.x:
        sym += np.where(t & 1, 3, 1)
    if idx.y:
        sym += 2 * mseq[(LOG[idx.y] + t) % ORDER].astype(np.int16)
    return QuaternaryCode(idx, (sym % 4).astype(np.int8))


def gen_quaternary_ring(idx, length=PERIOD):
    """Direct ring evaluation of the code definition (slow oracle path)."""
    gy = gr4m.ring_add(gr4m.ONE,
                       gr4m.ring_scale(2, gr4m.teichmuller_lift(idx.y)))
    out = np.empty(length, dtype=np.int8)
    cur = gy
    for t in range(length):
        v = gr4m.ring_trace(cur)
        if idx.x:
            v += 3 if t & 1 else 1
        out[t] = v % 4
        cur = gr4m.ring_mul(cur, gr4m.BETA)
    return QuaternaryCode(idx, out)


def components(q):
    """Split Q = u + 2v into the QP code (v) and IP code (w = u XOR v)."""
    u = q.symbols & 1
    v = q.symbols >> 1
    return (BinaryCode(q.index, "QP", v.astype(np.int8)),
            BinaryCode(q.index, "IP", (u ^ v).astype(np.int8)))


def family_metadata(kind):
    return {
        "family": kind,
        "version": FORMAT_VERSION,
        "m_alpha": [(gf2m.MOD_POLY >> i) & 1 for i in range(11)],
        "theta_alpha_power": gf2m.discrete_log(THETA),
        "index_set": ("J: dual coordinates h8=h9=0"
                      if kind in ("MFD2", "IZ4_2", "IZ4_2S")
                      else "H: greedy maximal, y+theta excluded"),
        "ordering": "QP block before IP block; within a block, "
                    "(dual-coordinate integer of y, x) ascending",
    }


def build_family(kind):
    """Construct a family: D (1024 quaternary), MFD2 (512 quaternary) or
    IZ4_2 (1024 binary: all v codes then all w codes)."""
    if kind == "D":
        idxs = [CodeIndex(x, y) for y in build_H() for x in (0, 1)]
        codes = [gen_quaternary(i) for i in idxs]
    elif kind == "MFD2":
        idxs = [CodeIndex(x, y) for y in build_J() for x in (0, 1)]
        codes = [gen_quaternary(i) for i in idxs]
    elif kind == "IZ4_2":
        parents = build_family("MFD2").codes
        pairs = [components(q) for q in parents]
        codes = [p[0] for p in pairs] + [p[1] for p in pairs]
    else:
        raise ValueError("unknown family kind %r" % kind)
    return FamilySet(kind, codes, family_metadata(kind))


def balance(code):
    """Count of zeros minus count of ones."""
    bits = code.bits if isinstance(code, BinaryCode) else np.asarray(code)
    return int(len(bits) - 2 * int(bits.sum()))


def quaternary_balance(q):
    """Occurrence counts of the symbols 0,1,2,3."""
    return tuple(int(c) for c in np.bincount(q.symbols, minlength=4))


def _least_rotation(data):
    """Booth's algorithm: index of the lexicographically least rotation."""
    s = data + data
    f = [-1] * len(s)
    k = 0
    for j in range(1, len(s)):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


def select_balanced_subset(fam, threshold=2):
    """Keep codes with |balance| <= threshold, drop cyclic duplicates.

    Order is preserved.  The published subset size (221) is not asserted
    anywhere: the achieved size is recorded in the metadata and compared by
    the caller.
    """
    if fam.kind != "IZ4_2":
        raise ValueError("balance screening applies to IZ4_2")
    kept = []
    seen = set()
    dropped_dup = 0
    for c in fam.codes:
        if abs(balance(c)) > threshold:
            continue
        raw = c.bits.tobytes()
        r = _least_rotation(raw)
        canon = (raw + raw)[r:r + len(raw)]
        if canon in seen:
            dropped_dup += 1
            continue
        seen.add(canon)
        kept.append(c)
    meta = family_metadata("IZ4_2S")
    meta.update(balance_threshold=threshold,
                cyclic_duplicates_removed=dropped_dup,
                balanced_size=len(kept))
    return FamilySet("IZ4_2S", kept, meta)


def screen_odd_correlation(fam, auto_cap=DEFAULT_ODD_AUTO_CAP,
                           cross_cap=DEFAULT_ODD_CROSS_CAP):
    """Deterministic odd-correlation screening.

    Drops every code whose odd autocorrelation exceeds auto_cap, then
    repeatedly removes the code with the most pairwise odd cross-correlation
    violations above cross_cap (ties: larger worst violation, then the code
    later in canonical order) until none remain.
    """
    from . import correlation

    bits = fam.bit_matrix()
    auto = correlation.odd_auto_maxima(bits)
    pool = [i for i in range(len(fam.codes)) if auto[i] <= auto_cap]
    cm = correlation.odd_cross_max_matrix(bits[pool])
    keep = list(range(len(pool)))
    while True:
        sub = cm[np.ix_(keep, keep)]
        viol = sub > cross_cap
        counts = viol.sum(axis=1)
        if counts.max(initial=0) == 0:
            break
        worst = np.where(viol, sub, 0).max(axis=1)
        drop = max(range(len(keep)),
                   key=lambda k: (counts[k], worst[k], k))
        keep.pop(drop)
    codes = [fam.codes[pool[k]] for k in keep]
    meta = dict(fam.metadata)
    meta.update(odd_auto_cap=auto_cap, odd_cross_cap=cross_cap,
                pool_within_auto_cap=len(pool), screened_size=len(codes))
    return FamilySet("IZ4_2S", codes, meta)


def build_iz4_2s(threshold=2, auto_cap=DEFAULT_ODD_AUTO_CAP,
                 cross_cap=DEFAULT_ODD_CROSS_CAP):
    """Full IZ4_2S pipeline: balance filter, cyclic dedup, odd screening."""
    return screen_odd_correlation(
        select_balanced_subset(build_family("IZ4_2"), threshold),
        auto_cap, cross_cap)
