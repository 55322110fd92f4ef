"""Walls, chambers and Lagrangian fibrations for Hilbert schemes of points on K3 surfaces."""

from .classify import (
    ChamberReport,
    Wall,
    WallKind,
    chamber_report,
    minimal_clear_k,
    svg_plot,
)
from .fmpartner import FmPartnerReport, fm_partner_report
from .mukai import MukaiVector, pairing, square
from .surface import SurfaceParams, SyzFailure, from_triple, normalize
from .walls import WallCandidate, brute_force_oracle, enumerate_candidates

__all__ = [
    "ChamberReport",
    "FmPartnerReport",
    "MukaiVector",
    "SurfaceParams",
    "SyzFailure",
    "Wall",
    "WallCandidate",
    "WallKind",
    "brute_force_oracle",
    "chamber_report",
    "enumerate_candidates",
    "fm_partner_report",
    "from_triple",
    "minimal_clear_k",
    "normalize",
    "pairing",
    "square",
    "svg_plot",
]

__version__ = "0.1.0"
