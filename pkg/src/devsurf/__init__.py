"""Exact classification and parametrization of rational developable surfaces.

The package decides whether an algebraic surface, given implicitly by a
polynomial F(x, y, z) or by a rational parametrization P(s, t), is
developable; classifies it as a plane, cone, cylinder or tangent surface;
and produces a verified rational parametrization in standard ruled form
P0(t) + s*P1(t) whenever the surface is rational of a supported kind.

All arithmetic is exact over the rationals.
"""

from .poly import (
    MultiPoly,
    Q,
    det3,
    det4,
    divides,
    exact_div,
    gcd_multi,
    partial_derivative,
    rational_roots,
    resultant,
    squarefree_part,
)
from .ratfunc import RatFunc, RationalMap3, cross3, dot3, substitute, substitute_map
from .exprs import (
    ParseError,
    SurfaceInput,
    parse_map,
    parse_poly,
    parse_ratfunc,
    print_map,
    print_poly,
    print_ratfunc,
)
from .errors import (
    DegenerateInputError,
    DevsurfError,
    NotRationalError,
    PointSearchExhaustedError,
    UnsupportedCurveError,
)
from .curves import (
    CurveParam,
    EdgeFrame,
    PlaneCurve,
    PlaneFrame,
    is_proper_curve,
    lift_to_space,
    parametrize_conic,
    parametrize_monomial_like,
    parametrize_plane_curve,
    parametrize_quartic_adjoint,
    section_implicit,
)
from .implicit import (
    SurfaceClass,
    analyze_implicit,
    classify_implicit,
    detect_apex,
    detect_ruling_direction,
    gaussian_form_implicit,
    singular_locus_curve,
    vanishes_on_surface,
)
from .builder import (
    ParamResult,
    build_conical,
    build_cylindrical,
    build_tangential,
    implicitize_ruled,
    reduce_directrix,
    ruling_triple_product,
    verify_on_surface,
)
from .parametric import (
    NormalData,
    analyze_parametric,
    detect_apex_parametric,
    detect_direction_parametric,
    gaussian_form_parametric,
    rebuild_and_verify,
    singular_parameter_locus,
    surface_normal,
)

__version__ = "0.1.0"
