"""Norm balls, Alexander polynomials and fibrations computed from splice diagrams.

Exact integer and rational arithmetic throughout.  Typical use::

    from splicenorm import l_en, norm_report
    norm_report(l_en(), (1, 0, 0))
"""

__version__ = "0.1.0"

from .alexander import alexander_polynomial
from .diagram import (SpliceDiagram, format_diagram, l_en, load_diagram,
                      parse_diagram, random_diagram, splice, trefoil, validate)
from .fibration import characteristic_hyperplanes, classify_facets, is_fibered
from .geometry import (essential_basis, minkowski_sum, unit_ball, width,
                       zonotope_newton)
from .laurent import LaurentPolynomial, canonicalize, divide_exact, support_polytope
from .linking import linking_matrix, linking_number
from .norms import alexander_norm, fiber_genus, norm_report, thurston_norm

__all__ = [
    "SpliceDiagram", "parse_diagram", "format_diagram", "load_diagram", "validate",
    "splice", "random_diagram", "l_en", "trefoil",
    "linking_number", "linking_matrix",
    "LaurentPolynomial", "divide_exact", "canonicalize", "support_polytope",
    "alexander_polynomial",
    "minkowski_sum", "zonotope_newton", "width", "essential_basis", "unit_ball",
    "thurston_norm", "alexander_norm", "norm_report", "fiber_genus",
    "is_fibered", "characteristic_hyperplanes", "classify_facets",
]
