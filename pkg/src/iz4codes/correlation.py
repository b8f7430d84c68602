"""Exact even/odd correlation engine with closed-form evaluators.

Two independent evaluation paths are kept side by side on purpose:

* brute force - integer summation straight from the definitions (the
  authoritative oracle everywhere);
* closed forms - psi/phi/delta expressions driven by field and ring
  arithmetic, valid away from degenerate shifts (tau = 0 mod 1023), which
  fall back to brute force.

Bulk work uses a length-4096 FFT over +-1 floats, rounds to the nearest
integer and verifies the rounding residual on every output; a violation
triggers an exact integer recompute (np.correlate), so published numbers are
bit-exact either way.

Odd correlation follows the single-bit-flip model: the summand over the
wrapped segment of the shifted code changes sign.  The "alternate" convention
flips the other segment instead; the two give pointwise negated values, so
every magnitude statistic is convention-independent (recorded in reports).
"""

import os
from dataclasses import dataclass

import numpy as np

from . import gf2m, gr4m
from .gf2m import THETA, fe_add, fe_mul, fe_pow, fe_sqrt

N = 2 * gf2m.ORDER          # 2046
_FFT_LEN = 4096             # >= 2N - 1, power of two
_WRAP_START = _FFT_LEN - N + 1   # wrapped-segment column for tau = 1


class DegenerateShiftError(ValueError):
    """Closed form undefined: alpha^tau = 1, use direct summation."""


# ---------------------------------------------------------------------------
# scalar exact operations

def _counts_to_gauss(counts):
    return complex(int(counts[0]) - int(counts[2]),
                   int(counts[1]) - int(counts[3]))


def phi_brute(q1, q2, tau):
    """Even quaternary correlation sum(i^(Q1(t+tau)-Q2(t))), cyclic, exact."""
    if len(q1) != len(q2):
        raise ValueError("length mismatch")
    d = (np.roll(q1, -tau).astype(np.int16) - q2) % 4
    return _counts_to_gauss(np.bincount(d, minlength=4))


def delta_brute(q1, q2, tau):
    """Anti-correlation sum(i^(Q1(t+tau)+Q2(t))): phi with q2 negated mod 4."""
    if len(q1) != len(q2):
        raise ValueError("length mismatch")
    s = (np.roll(q1, -tau).astype(np.int16) + q2) % 4
    return _counts_to_gauss(np.bincount(s, minlength=4))


def binary_corr_brute(b1, b2, tau):
    """Even binary correlation sum((-1)^(b1(t+tau)-b2(t))), exact integer."""
    if len(b1) != len(b2):
        raise ValueError("length mismatch")
    return int(len(b1) - 2 * int((np.roll(b1, -tau) ^ b2).sum()))


def binary_corr_via_quaternary(q1, q2, phase1, phase2, tau):
    """Binary correlation from phi and delta of the parent quaternary codes.

    v-v: Re(phi) + Im(delta); w-w: Re(phi) - Im(delta);
    v-w: Re(delta) + Im(phi); w-v is routed through the swapped pair at -tau.
    """
    if (phase1, phase2) == ("IP", "QP"):
        return binary_corr_via_quaternary(q2, q1, "QP", "IP", -tau % len(q1))
    phi = phi_brute(q1, q2, tau)
    dlt = delta_brute(q1, q2, tau)
    if (phase1, phase2) == ("QP", "QP"):
        v = phi.real + dlt.imag
    elif (phase1, phase2) == ("IP", "IP"):
        v = phi.real - dlt.imag
    elif (phase1, phase2) == ("QP", "IP"):
        v = dlt.real + phi.imag
    else:
        raise ValueError("phases must be QP or IP")
    return int(v)


def odd_corr(a, b, tau, convention="standard"):
    """Odd correlation: the wrapped segment enters with inverted sign.

    standard: F(tau) - B(tau); alternate: B(tau) - F(tau) (flip on the other
    segment).  Binary inputs give an integer, quaternary a Gaussian integer.
    """
    if len(a) != len(b):
        raise ValueError("length mismatch")
    n = len(a)
    tau %= n
    quaternary = int(np.max(a, initial=0)) > 1 or int(np.max(b, initial=0)) > 1
    if quaternary:
        s1, s2 = _iq(a), _iq(b)
        fwd = np.sum(s1[tau:] * np.conj(s2[:n - tau]))
        wrap = np.sum(s1[:tau] * np.conj(s2[n - tau:]))
        out = fwd - wrap if convention == "standard" else wrap - fwd
        return complex(round(out.real), round(out.imag))
    s1 = 1 - 2 * a.astype(np.int64)
    s2 = 1 - 2 * b.astype(np.int64)
    fwd = int(np.dot(s1[tau:], s2[:n - tau]))
    wrap = int(np.dot(s1[:tau], s2[n - tau:]))
    return fwd - wrap if convention == "standard" else wrap - fwd


def _iq(q):
    return np.array([1, 1j, -1, -1j], dtype=np.complex128)[np.asarray(q)]


# ---------------------------------------------------------------------------
# closed forms

def psi_closed(y1, y2, tau):
    """psi(y1,y2,tau) = -1 - 32 i^(1-T(e)), e = mu + y1 + (y1+y2) mu^2,
    mu = sqrt(1/(1+alpha^tau)).  Defined only for tau != 0 mod 1023."""
    if tau % gf2m.ORDER == 0:
        raise DegenerateShiftError("alpha^tau = 1 at tau=%d" % tau)
    at = fe_pow(gf2m.ALPHA, tau)
    mu = fe_sqrt(fe_pow(fe_add(1, at), -1))
    e = mu ^ y1 ^ fe_mul(y1 ^ y2, fe_mul(mu, mu))
    te = gr4m.teichmuller_trace_table()[e]
    return -1 - 32 * 1j ** ((1 - te) % 4)


def _closed_combination(x1, y1, x2, y2, tau):
    # x2 may sit anywhere in Z4 (the delta substitution sends x2 to 3*x2)
    y3, y4 = y1 ^ THETA, y2 ^ THETA
    if tau % 2 == 0:
        s1 = psi_closed(y1, y2, tau)
        s2 = psi_closed(y3, y4, tau)
        pref = (x1 - x2) % 4
    else:
        s1 = psi_closed(y3, y2, tau)
        s2 = psi_closed(y1, y4, tau)
        pref = (3 * x1 - x2) % 4
    sgn = 1 if (x1 - x2) % 2 == 0 else -1
    out = 1j ** pref * (s1 + sgn * s2)
    return complex(round(out.real), round(out.imag))


def _fallback_codes(x1, y1, x2, y2, codes):
    if codes is not None:
        return codes
    from . import codegen
    return (codegen.gen_quaternary(codegen.CodeIndex(x1, y1)).symbols,
            codegen.gen_quaternary(codegen.CodeIndex(x2, y2)).symbols)


def phi_closed(x1, y1, x2, y2, tau, codes=None):
    """Closed form for the even correlation of codes (x1,y1), (x2,y2).

    Degenerate shifts (tau = 0 mod 1023) route to phi_brute; pass the two
    symbol arrays in `codes` to skip regenerating them.
    """
    tau %= N
    if tau % gf2m.ORDER == 0:
        q1, q2 = _fallback_codes(x1, y1, x2, y2, codes)
        return phi_brute(q1, q2, tau)
    return _closed_combination(x1, y1, x2, y2, tau)


def delta_closed(x1, y1, x2, y2, tau, codes=None):
    """Closed form for the anti-correlation: substitute x2 -> 3 x2 and
    y2 -> y2 + 1 in the phi expression."""
    tau %= N
    if tau % gf2m.ORDER == 0:
        q1, q2 = _fallback_codes(x1, y1, x2, y2, codes)
        return delta_brute(q1, q2, tau)
    return _closed_combination(x1, y1, (3 * x2) % 4, y2 ^ 1, tau)


# ---------------------------------------------------------------------------
# all-shift exact paths (integer, no transforms)

def _linear_fb(s1, s2):
    # np.correlate(s1, s2, "full")[N-1+d] = sum_t s1(t+d) s2(t); exact int64.
    r = np.correlate(s1, s2, "full")
    fwd = r[len(s1) - 1:]
    wrap = np.concatenate([[0], r[:len(s1) - 1]])
    return fwd, wrap


def binary_all_shifts(b1, b2):
    """Exact even and odd correlations at every shift (integer arithmetic)."""
    s1 = 1 - 2 * b1.astype(np.int64)
    s2 = 1 - 2 * b2.astype(np.int64)
    fwd, wrap = _linear_fb(s1, s2)
    return fwd + wrap, fwd - wrap


def phi_all_shifts(q1, q2):
    """Exact phi at every shift via four integer linear correlations,
    returned as a complex array (entries are exact Gaussian integers)."""
    tab_re = np.array([1, 0, -1, 0], dtype=np.int64)
    tab_im = np.array([0, 1, 0, -1], dtype=np.int64)
    a1, b1 = tab_re[q1], tab_im[q1]
    a2, b2 = tab_re[q2], tab_im[q2]
    fr = _linear_fb(a1, a2)
    fi = _linear_fb(b1, b2)
    gr_ = _linear_fb(b1, a2)
    gi = _linear_fb(a1, b2)
    re = (fr[0] + fr[1]) + (fi[0] + fi[1])
    im = (gr_[0] + gr_[1]) - (gi[0] + gi[1])
    return re + 1j * im


def delta_all_shifts(q1, q2):
    return phi_all_shifts(q1, (-np.asarray(q2)) % 4)


# ---------------------------------------------------------------------------
# accelerated bulk path

def _spectra(bits2d):
    return np.fft.rfft(1.0 - 2.0 * bits2d, n=_FFT_LEN, axis=-1)


def _fb_rows(prod, exact_rows=None):
    """Forward/wrapped integer parts from spectral products, with a rounding
    guard; rows failing the < 0.5 residual check are recomputed exactly."""
    c = np.fft.irfft(prod, _FFT_LEN, axis=-1)
    r = np.rint(c)
    bad = np.abs(c - r).max(axis=-1) >= 0.499
    fwd = r[..., :N].astype(np.int64)
    wrap = np.concatenate(
        [np.zeros(r.shape[:-1] + (1,), dtype=np.int64),
         r[..., _WRAP_START:].astype(np.int64)], axis=-1)
    if bad.any():
        if exact_rows is None:
            raise RuntimeError("rounding residual >= 0.5 and no exact source")
        for k in np.nonzero(np.atleast_1d(bad))[0]:
            s1, s2 = exact_rows(int(k))
            f, w = _linear_fb(s1, s2)
            fwd[k], wrap[k] = f, w
    return fwd, wrap


def accelerated_pair(b1, b2):
    """(even, odd) integer correlation arrays for one binary pair via FFT."""
    R = _spectra(np.stack([b1, b2]).astype(np.float64))
    s1 = 1 - 2 * b1.astype(np.int64)
    s2 = 1 - 2 * b2.astype(np.int64)
    fwd, wrap = _fb_rows((R[0] * np.conj(R[1]))[np.newaxis, :],
                         lambda _k: (s1, s2))
    return (fwd[0] + wrap[0], fwd[0] - wrap[0])


def odd_auto_maxima(bits2d):
    """Per-code max |odd autocorrelation| over tau != 0."""
    R = _spectra(bits2d.astype(np.float64))
    s = 1 - 2 * bits2d.astype(np.int64)
    out = np.empty(len(bits2d), dtype=np.int64)
    for i in range(len(bits2d)):
        fwd, wrap = _fb_rows((R[i] * np.conj(R[i]))[np.newaxis, :],
                             lambda _k: (s[i], s[i]))
        out[i] = np.abs(fwd[0, 1:] - wrap[0, 1:]).max()
    return out


def odd_cross_max_matrix(bits2d):
    """Symmetric matrix of max |odd cross-correlation| over all tau."""
    n = len(bits2d)
    R = _spectra(bits2d.astype(np.float64))
    s = 1 - 2 * bits2d.astype(np.int64)
    out = np.zeros((n, n), dtype=np.int64)
    for i in range(n - 1):
        fwd, wrap = _fb_rows(R[i] * np.conj(R[i + 1:]),
                             lambda k: (s[i], s[i + 1 + k]))
        mx = np.abs(fwd - wrap).max(axis=-1)
        out[i, i + 1:] = mx
        out[i + 1:, i] = mx
    return out


def _hist_rows(bits2d, lo, hi, include_odd, mode="accelerated"):
    R = _spectra(bits2d.astype(np.float64)) if mode == "accelerated" else None
    s = 1 - 2 * bits2d.astype(np.int64)
    hists = {k: np.zeros(N + 1, dtype=np.int64)
             for k in ("even_auto", "even_cross", "odd_auto", "odd_cross")}
    for i in range(lo, hi):
        if mode == "accelerated":
            fwd, wrap = _fb_rows(R[i] * np.conj(R[i:]),
                                 lambda k: (s[i], s[i + k]))
        else:
            rows = [_linear_fb(s[i], s[j]) for j in range(i, len(s))]
            fwd = np.stack([r[0] for r in rows])
            wrap = np.stack([r[1] for r in rows])
        ev = np.abs(fwd + wrap)
        hists["even_auto"] += np.bincount(ev[0, 1:], minlength=N + 1)
        if len(ev) > 1:
            hists["even_cross"] += np.bincount(ev[1:].ravel(), minlength=N + 1)
        if include_odd:
            od = np.abs(fwd - wrap)
            hists["odd_auto"] += np.bincount(od[0, 1:], minlength=N + 1)
            if len(od) > 1:
                hists["odd_cross"] += np.bincount(od[1:].ravel(),
                                                  minlength=N + 1)
    return hists


def worker_count():
    """Worker processes for bulk aggregation; IZ4CODES_WORKERS overrides."""
    try:
        return max(1, int(os.environ.get("IZ4CODES_WORKERS", "1")))
    except ValueError:
        return 1


def family_histograms(bits2d, include_odd=True, workers=None,
                      mode="accelerated"):
    """Magnitude histograms (bincounts over 0..2046) of the four categories:
    even/odd x auto/cross.  Auto excludes tau = 0; cross includes it and
    spans unordered pairs once.  Deterministic for any worker count."""
    if mode not in ("accelerated", "exact"):
        raise ValueError("unknown mode %r" % mode)
    n = len(bits2d)
    w = worker_count() if workers is None else max(1, workers)
    if w == 1 or n < 8:
        return _hist_rows(bits2d, 0, n, include_odd, mode)
    from concurrent.futures import ProcessPoolExecutor
    bounds = np.linspace(0, n, w + 1).astype(int)
    tasks = [(bits2d, int(lo), int(hi), include_odd, mode)
             for lo, hi in zip(bounds[:-1], bounds[1:]) if lo < hi]
    hists = None
    with ProcessPoolExecutor(max_workers=w) as pool:
        for part in pool.map(_hist_rows_star, tasks):
            if hists is None:
                hists = part
            else:
                for k in hists:
                    hists[k] += part[k]
    return hists


def _hist_rows_star(args):
    return _hist_rows(*args)


@dataclass
class PairCorrelation:
    i: int
    j: int
    kind: str                  # "even" or "odd"
    values: np.ndarray         # integer correlation value per tau


def bulk_correlate(bits2d, kinds=("even", "odd"), mode="accelerated"):
    """Stream of per-pair correlation arrays over unordered pairs (i <= j).

    exact mode runs integer linear correlations; accelerated mode uses the
    guarded FFT path.  Both yield identical integers in identical order.
    """
    for kind in kinds:
        if kind not in ("even", "odd"):
            raise ValueError("unknown correlation kind %r" % kind)
    bits2d = np.asarray(bits2d)
    n = len(bits2d)
    R = _spectra(bits2d.astype(np.float64)) if mode == "accelerated" else None
    s = 1 - 2 * bits2d.astype(np.int64)
    for i in range(n):
        for j in range(i, n):
            if mode == "accelerated":
                fwd, wrap = _fb_rows((R[i] * np.conj(R[j]))[np.newaxis, :],
                                     lambda _k: (s[i], s[j]))
                fwd, wrap = fwd[0], wrap[0]
            else:
                fwd, wrap = _linear_fb(s[i], s[j])
            for kind in kinds:
                vals = fwd + wrap if kind == "even" else fwd - wrap
                yield PairCorrelation(i, j, kind, vals)
