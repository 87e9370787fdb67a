"""Constructive hitting sets for the maximum stable sets of a graph.

A hitting set meets every maximum stable set; ``eta`` is the smallest size of
one. The package computes ``eta`` exactly on small graphs and builds certified
hitting sets for several hereditary classes whose size is bounded by a
function of the clique number.
"""

from .bounders import (
    ClassSpec,
    ft_hitting_set,
    lt_hitting_set,
    perfect_hitting_set,
    proper_p5_dispatch,
    run_class,
    sst_hitting_set,
    star_free_hitting,
)
from .cradle import p5_hitting_set
from .graph import Graph
from .oracle import HittingCertificate, alpha, eta_exact, omega, verify_hitting_set

__all__ = [
    "ClassSpec",
    "Graph",
    "HittingCertificate",
    "alpha",
    "eta_exact",
    "ft_hitting_set",
    "lt_hitting_set",
    "omega",
    "p5_hitting_set",
    "perfect_hitting_set",
    "proper_p5_dispatch",
    "run_class",
    "sst_hitting_set",
    "star_free_hitting",
    "verify_hitting_set",
]
