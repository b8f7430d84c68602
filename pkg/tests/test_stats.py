import math

import numpy as np
import pytest

from iz4codes import codegen, stats
from iz4codes.codegen import PERIOD
from iz4codes.stats import (cdf_points, family_profile, paired_orthogonality,
                            to_db)


def test_to_db():
    assert to_db(80, 2046) == pytest.approx(-28.16, abs=0.005)
    assert to_db(66, 2046) == pytest.approx(-29.83, abs=0.005)
    assert to_db(2046, 2046) == 0.0
    assert to_db(0, 2046) == float("-inf")
    with pytest.raises(ValueError):
        to_db(-1, 2046)
    with pytest.raises(ValueError):
        to_db(5, 0)


def test_cdf_points():
    pts = cdf_points([4, 4, 4])
    assert pts == [(4, 100.0)]
    pts = cdf_points([0, 2, 2, 6])
    assert pts == [(0, 25.0), (2, 75.0), (6, 100.0)]
    assert [p for m, p in pts] == sorted(p for m, p in pts)
    with pytest.raises(ValueError):
        cdf_points([])
    with pytest.raises(ValueError):
        cdf_points([99999])


def fixture_family(n):
    fam = codegen.build_iz4_2s()
    return codegen.FamilySet(fam.kind, fam.codes[:n], dict(fam.metadata))


def test_profile_published_numbers():
    prof = family_profile(codegen.build_iz4_2s())
    assert (prof.even_acr, prof.even_ccr) == (66, 66)
    assert (prof.odd_acr, prof.odd_ccr) == (140, 198)
    assert prof.even_acr_db == pytest.approx(-29.83, abs=0.005)
    assert prof.odd_acr_db == pytest.approx(-23.30, abs=0.005)
    assert prof.odd_ccr_db == pytest.approx(-20.28, abs=0.005)
    assert prof.rms_db == pytest.approx(-33.11, abs=0.005)
    assert (prof.p99, prof.p999) == (102, 134)
    assert prof.p99_db == pytest.approx(-26.05, abs=0.005)
    assert prof.p999_db == pytest.approx(-23.68, abs=0.005)
    assert prof.max_all == 198
    # both inclusion variants reproduce the published spread figures
    assert prof.cross_only["rms_db"] == pytest.approx(-33.11, abs=0.005)
    assert prof.cross_only["p99"] == 102
    assert prof.cross_only["p999"] == 134
    assert prof.balance_histogram == {-2: 34, 0: 33}
    # CDF spot value at magnitude 80 and termination at 1.0
    cdf = dict(prof.cdf)
    assert cdf[80] * 100 == pytest.approx(96.58, abs=0.3)
    assert prof.cdf[-1] == (prof.max_all, 1.0)
    fracs = [f for _, f in prof.cdf]
    assert fracs == sorted(fracs)


def test_profile_determinism_across_workers():
    fam = fixture_family(10)
    p1 = family_profile(fam, workers=1)
    p2 = family_profile(fam, workers=3)
    assert p1 == p2


def test_profile_rms_against_direct_pass():
    from iz4codes import correlation
    fam = fixture_family(6)
    prof = family_profile(fam)
    total = 0
    count = 0
    bits = fam.bit_matrix()
    for i in range(len(bits)):
        for j in range(i, len(bits)):
            ev, od = correlation.binary_all_shifts(bits[i], bits[j])
            if i == j:
                vals = np.concatenate([ev[1:], od[1:]])
            else:
                vals = np.concatenate([ev, od])
            total += int((vals.astype(np.int64) ** 2).sum())
            count += len(vals)
    assert prof.rms == pytest.approx(math.sqrt(total / count), abs=1e-12)


def test_profile_single_code_and_even_only():
    fam = fixture_family(1)
    prof = family_profile(fam, include_odd=False)
    assert prof.family_size == 1
    assert prof.even_ccr is None and prof.even_ccr_db is None
    assert prof.odd_acr is None and prof.odd_ccr is None
    assert prof.max_all == prof.even_acr
    assert prof.include_odd is False
    with pytest.raises(ValueError):
        family_profile(codegen.FamilySet("IZ4_2S", []))


def test_paired_orthogonality():
    data = codegen.build_iz4_2s().codes[0].bits
    pilot = np.repeat(data, 5)
    assert paired_orthogonality(pilot, data) == 5 * PERIOD
    assert paired_orthogonality(pilot ^ 1, data) == -5 * PERIOD
    # flipping one pilot chip moves the sum by exactly 2
    flipped = pilot.copy()
    flipped[123] ^= 1
    assert paired_orthogonality(flipped, data) == 5 * PERIOD - 2
    with pytest.raises(ValueError):
        paired_orthogonality(pilot[:-1], data)
    with pytest.raises(ValueError):
        paired_orthogonality(pilot, data[:-1])
