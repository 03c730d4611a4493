"""arrlab: exact-arithmetic Shi-Catalan deformations of Weyl arrangements.

Construction of root systems and deformations, intersection-poset chamber
counts with an independent planar oracle, rank-2 multiarrangement
derivation modules, and addition-theorem freeness certificates for coned
rank-2 deformations.
"""

from .arr_core import (
    Arrangement,
    Flat,
    Hyperplane,
    arrangement,
    cone,
    decone,
    deform,
    essentialize,
    flat_at_infinity_correspondence,
    hyperplane,
    infinity_hyperplane,
    is_shi_catalan,
    localization,
    restriction,
    weyl_arrangement,
    ziegler_restriction,
)
from .charpoly import (
    FlatBudgetError,
    IntersectionPoset,
    IntPolynomial,
    chambers,
    chambers_2d_oracle,
    char_poly,
    factorization_check,
    intersection_poset,
    intpoly,
    poincare,
)
from .rootsys import (
    RootSystem,
    UnsupportedTypeError,
    build_root_system,
    compute_orbits,
    h_vector,
    orbit_exponents,
)

__version__ = "0.1.0"
