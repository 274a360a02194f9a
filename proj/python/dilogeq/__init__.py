"""Polygon functional equations of the Rogers dilogarithm.

Thin wrapper around the compiled extension: chord combinatorics, dihedral
coordinates on cyclically ordered point configurations, the dilogarithm
kernel, and the reduction certificates.
"""

from ._core import (
    L1,
    certificate_json,
    chord_relation_residual,
    config_from_star,
    cross_ratio,
    crosses,
    crossing_set,
    degenerate,
    dihedral_coords,
    enumerate_chords,
    forget,
    li2,
    pullback,
    rogers_l,
    sample_cell,
    verify_certificate,
    verify_eqn,
    wedge_sum_is_zero,
)

__all__ = [
    "L1",
    "certificate_json",
    "chord_relation_residual",
    "config_from_star",
    "cross_ratio",
    "crosses",
    "crossing_set",
    "degenerate",
    "dihedral_coords",
    "enumerate_chords",
    "forget",
    "li2",
    "pullback",
    "rogers_l",
    "sample_cell",
    "verify_certificate",
    "verify_eqn",
    "wedge_sum_is_zero",
]

__version__ = "0.1.0"
