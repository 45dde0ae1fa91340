"""Enumeration of restricted d-Dyck paths.

A Dyck path is d-Dyck when the levels of any two consecutive valleys differ
by at least d.  The package counts these paths by semi-length, peaks and
area through several independent routes (exhaustive enumeration, exact
generating function solvers, closed forms, recurrences) and provides a
bijective encoding of the d = -1 case.
"""
from .paths import (
    UNRESTRICTED,
    Path,
    PathError,
    area,
    is_d_dyck,
    last_valley_level,
    parse_path,
    peaks,
    pyramid,
    valley_vector,
    valleys,
)
from .enumeration import ExhaustiveBoundExceeded, PathFilter, count_filtered, gen_dyck, iter_filtered
from .series import BivariateSeries, MarkerPoly
from .recurrences import a_seq, A_seq, b_closed, catalan, narayana, q_seq, r_minus1, r_nonneg
from .bijection import Encoding, phi, phi_inverse
from .asymptotics import compute_rho, r_asymptotic

__version__ = "0.1.0"

__all__ = [
    "UNRESTRICTED", "Path", "PathError", "area", "is_d_dyck", "last_valley_level", "parse_path",
    "peaks", "pyramid", "valley_vector", "valleys",
    "ExhaustiveBoundExceeded", "PathFilter", "count_filtered", "gen_dyck", "iter_filtered",
    "BivariateSeries", "MarkerPoly",
    "a_seq", "A_seq", "b_closed", "catalan", "narayana", "q_seq", "r_minus1", "r_nonneg",
    "Encoding", "phi", "phi_inverse",
    "compute_rho", "r_asymptotic",
]
