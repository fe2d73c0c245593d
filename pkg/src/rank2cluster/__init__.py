"""Exact symbolic engine for the rank-2 cluster algebras A(b, c).

Laurent polynomials in the two variables of a cluster, the exchange
recursion y_{m-1} y_{m+1} = y_m^b + 1 (m odd) or y_m^c + 1 (m even), root
data, Newton polygons, the canonical basis of the finite and affine types
and the two-parameter deformation of A(2, 2).  All arithmetic is exact.
"""

from .canonical import (
    Decomposition,
    Imaginary,
    PositivityResult,
    Real,
    basis_element,
    decompose,
    is_positive,
    label_of,
    positivity_window_check,
    straighten_fully,
    straighten_pair,
    z_element,
    z_n,
)
from .chebyshev import chebyshev_T
from .cluster import (
    ClusterChart,
    MonomialLabel,
    cluster_monomial,
    cluster_variable,
    denominator_vector_of,
    expand,
    separating_form,
    sigma_on_expr,
    sigma_on_lattice,
)
from .deform import DeformedChart, Y_var, Z_element, Z_n, specialize_14, specialize_22, verify_lemma_relations
from .errors import *  # noqa: F401,F403
from .expr import GeneratorExpr, parse, y, z
from .ring import INT, QPOLY, LatticePolygon, LaurentPoly, QPoly, is_monic, minkowski_sum, newton_polygon
from .roots import (
    INFINITY,
    CartanParams,
    Kind,
    coxeter_number,
    delta,
    denominator_vector,
    norm,
    positive_real_roots,
    reflect,
    triangle,
)

__version__ = "0.1.0"
