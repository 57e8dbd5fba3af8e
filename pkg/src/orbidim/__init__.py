"""Dimensions of character varieties of 2- and 3-orbifolds for simple Lie groups."""
from .centralizer import InconsistentDimensions, StabKind, stab_dim_cyclic, stab_dim_dihedral
from .dimension import (
    DimReport,
    GeometryError,
    euclidean_char_dim,
    euclidean_invariant_dim,
    growth_defect,
    hitchin_dim,
    hitchin_dim_pgl_closed_form,
    relative_dim,
    rep_variety_dim_euclidean,
    twisted_euler_2orbifold,
    twisted_euler_cw,
)
from .lie import Family, InvalidLieType, LieType, parse_lie_type, sigma
from .orbifold import (
    BoundaryList,
    EuclideanClass,
    Geometry,
    OrbifoldSignature,
    classify_geometry,
    euler_char,
    orientation_double,
    parse_signature,
    render_signature,
)
from .three_orbifold import canonical_dim, fig8_component_dims, lower_bound_dim, whitehead_component_dims

__version__ = "0.1.0"
