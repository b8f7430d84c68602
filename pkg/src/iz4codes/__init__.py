"""Quaternary MFD2 / binary IZ4_2 spreading-code families of period 2046.

Generation from Galois-ring algebra or coupled shift registers, exact even
and odd correlation analysis with closed-form predictions, family statistics
and code-set file handling.
"""

from .codegen import (CodeIndex, QuaternaryCode, BinaryCode, FamilySet,
                      PERIOD, build_family, build_iz4_2s, gen_quaternary,
                      components, balance, quaternary_balance,
                      select_balanced_subset, screen_odd_correlation)
from .correlation import (phi_brute, delta_brute, phi_closed, delta_closed,
                          psi_closed, odd_corr, accelerated_pair,
                          binary_all_shifts, bulk_correlate,
                          family_histograms)
from .stats import FamilyProfile, family_profile, to_db, cdf_points, \
    paired_orthogonality
from .codeset import store_codeset, load_codeset, write_report, write_cdf_csv

__version__ = "0.1.0"

__all__ = [
    "CodeIndex", "QuaternaryCode", "BinaryCode", "FamilySet", "PERIOD",
    "build_family", "build_iz4_2s", "gen_quaternary", "components",
    "balance", "quaternary_balance", "select_balanced_subset",
    "screen_odd_correlation", "phi_brute", "delta_brute", "phi_closed",
    "delta_closed", "psi_closed", "odd_corr", "accelerated_pair",
    "binary_all_shifts", "bulk_correlate", "family_histograms",
    "FamilyProfile", "family_profile", "to_db", "cdf_points",
    "paired_orthogonality", "store_codeset", "load_codeset", "write_report",
    "write_cdf_csv", "__version__",
]
