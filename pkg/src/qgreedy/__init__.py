"""Exact quantum greedy elements in rank-2 quantum cluster algebras."""
from qgreedy.expand import GreedyExpansion, expand_in_greedy
from qgreedy.greedy import ConsistencyError, classical_greedy, closed_form, compute, greedy_element
from qgreedy.laurent import LaurentPoly, NotDivisible
from qgreedy.pointed import NotPointed, PointedElement, check_divisibility, region, to_pointed
from qgreedy.symmetry import NotLaurent, sigma1, sigma2, sigma_apply
from qgreedy.torus import (AlgebraParams, Limits, ResourceLimitError, TorusElement,
                           cluster_monomial, cluster_variable, denominator_vector)

__version__ = "0.1.0"

__all__ = [
    "AlgebraParams", "ConsistencyError", "GreedyExpansion", "LaurentPoly",
    "Limits", "NotDivisible", "NotLaurent", "NotPointed", "PointedElement",
    "ResourceLimitError", "TorusElement", "check_divisibility", "classical_greedy",
    "closed_form", "cluster_monomial", "cluster_variable", "compute", "denominator_vector",
    "expand_in_greedy", "greedy_element", "region", "sigma1", "sigma2",
    "sigma_apply", "to_pointed",
]
