"""Constructive transforms: vertex splitting, strip redrawing, tangency
perturbation, and the recursive decomposition."""

from .splitting import DeltaTooSmall, SplitCertificate, split_vertices
from .strip import (
    DegenerateAfterPerturbation,
    NotBipartite,
    NotYSeparated,
    RedrawnDrawing,
    strip_crossing_formula,
    strip_redraw,
)
from .perturb import PerturbationCollision, perturb_tangencies
from .decompose import DecompositionNode, DecompositionTree, alpha, recursive_decomposition

__all__ = [
    "DeltaTooSmall",
    "SplitCertificate",
    "split_vertices",
    "DegenerateAfterPerturbation",
    "NotBipartite",
    "NotYSeparated",
    "RedrawnDrawing",
    "strip_crossing_formula",
    "strip_redraw",
    "PerturbationCollision",
    "perturb_tangencies",
    "DecompositionNode",
    "DecompositionTree",
    "alpha",
    "recursive_decomposition",
]
