"""Exact invariant-theory spectra and numerical orbit geometry.

Two compact groups acting on the same sphere can share their full Laplace
spectrum on invariant functions while the quotient geometries differ in
finer respects.  This package computes such spectra exactly by Weyl
integration over maximal tori, compares them against round-hemisphere
spectra, and probes the quotient geometry numerically: isotropy strata,
polarity of slice representations, O'Neill curvature, and quotient metric
distances.
"""

__version__ = "0.1.0"

from .laurent import LaurentPoly, TruncatedSeries, constant_term, geometric_factor

__all__ = [
    "LaurentPoly",
    "TruncatedSeries",
    "constant_term",
    "geometric_factor",
    "__version__",
]
