"""Exact computations for degree-one covers of a holomorphic disk.

Submodules: :mod:`~opengw.exact` (rationals and power series),
:mod:`~opengw.moduli` (dimensions, indices, Maslov winding),
:mod:`~opengw.partitions` (ghost partitions and cell ranks),
:mod:`~opengw.lattice` (cell intersections and gluing audits),
:mod:`~opengw.contributions` (the contributions themselves) and
:mod:`~opengw.cli`.
"""

from .contributions import (
    DEFAULT_M,
    ContributionTable,
    alpha_coefficients,
    build_table,
    contribution,
    contribution_ordered,
    gf_series,
    special_case_11,
    verify_generating_function,
)
from .exact import PowerSeries, bernoulli, series_exp, series_inv, series_log, series_mul, sin_half_series
from .lattice import Configuration, config_dimension, gluing_audit, lattice_graph
from .moduli import FrameLoop, TopologicalType, double_genus, maslov_index, moduli_dim, riemann_roch_index
from .partitions import GhostPartition, automorphism_order, cell_dimension, cell_summary, enumerate_partitions

__version__ = "0.1.0"
