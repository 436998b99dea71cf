"""Classification of rational 3-tangles through normal Dehn coordinates."""

from .canonical_rep import RepresentativeReport, equivalent, representative
from .surface_model import INFINITY, ArcSystem, DehnCoordinate, realize

__all__ = [
    "ArcSystem",
    "DehnCoordinate",
    "INFINITY",
    "RepresentativeReport",
    "equivalent",
    "realize",
    "representative",
]
