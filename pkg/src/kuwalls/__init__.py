"""Exact computations around index-2, Picard-rank-1 Fano threefolds.

Everything here is carried out in exact rational arithmetic: cohomology
classes, Euler pairings, tilt-stability charges, wall loci, the rank-2
lattice of the residual (Kuznetsov) category, and the root/line
combinatorics of the del Pezzo surfaces arising as hyperplane sections.
"""

from .chern import ChernVector, FanoContext, chi_pair, dual, hrr_chi, ring_multiply, twist
from .tilt import ChargeValue, Slope, StabilityParams, charge_rotated, charge_tilt, discriminant, slope_tilt
from .walls import DestabilizerCandidate, WallLocus, chamber_report, destabilizer_search, numerical_wall
from .kulattice import ExtTable, KuClass, check_ext_table, class_from_chern, classes_with_self_pairing, euler_form, rotation_matrix
from .delpezzo import DPContext, PicVector, enumerate_lines, enumerate_roots, intersect, nef_position, root_as_line_difference, surface_chi
from .catalog import CatalogEntry, catalog, verify_catalog

__version__ = "0.1.0"

__all__ = [
    "ChernVector", "FanoContext", "ring_multiply", "twist", "dual", "hrr_chi", "chi_pair",
    "StabilityParams", "ChargeValue", "Slope", "charge_tilt", "slope_tilt", "charge_rotated", "discriminant",
    "WallLocus", "DestabilizerCandidate", "numerical_wall", "destabilizer_search", "chamber_report",
    "KuClass", "ExtTable", "euler_form", "class_from_chern", "rotation_matrix",
    "classes_with_self_pairing", "check_ext_table",
    "PicVector", "DPContext", "intersect", "enumerate_roots", "enumerate_lines",
    "root_as_line_difference", "nef_position", "surface_chi",
    "CatalogEntry", "catalog", "verify_catalog",
]
