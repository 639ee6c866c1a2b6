"""Shared reference surfaces and maps used across the test suite.

Everything here was verified by exact substitution: curves lie on their
surfaces, directions annihilate the gradient, and so on.  The test modules
recompute those facts rather than trusting the constants.
"""

# quadric cone with apex (1/2, 1/3, 0)
ELLIPTIC_CONE_F = "4*x^2 + 9*y^2 - 4*x - 6*y - z^2 + 2"
ELLIPTIC_CONE_APEX = ("1/2", "1/3", "0")
# section by the plane x - z = 0, projected to (x, y)
ELLIPTIC_CONE_SECTION_2D = "3*x^2 + 9*y^2 - 4*x - 6*y + 2"
ELLIPTIC_CONE_SECTION_MAP_2D = "( (9+t^2)/(27+t^2), (t^2-6*t+27)/(3*t^2+81) )"
ELLIPTIC_CONE_CURVE_3D = "( (9+t^2)/(27+t^2), (t^2-6*t+27)/(3*t^2+81), (9+t^2)/(27+t^2) )"
ELLIPTIC_CONE_FULL_MAP = (
    "( (1-s)*(1/2) + s*(9+t^2)/(27+t^2), "
    "(1-s)*(1/3) + s*(t^2-6*t+27)/(3*t^2+81), "
    "s*(9+t^2)/(27+t^2) )"
)

# quartic cylinder with ruling direction (1, -1, -1)
QUARTIC_CYLINDER_F = (
    "x^4+4*x^3*y+6*x^2*y^2+4*x*y^3+y^4-10*x^3-27*x^2*y-3*x^2*z-18*x*y^2"
    "-18*x*y*z+6*x*z^2-2*y^3-12*y^2*z+3*y*z^2+z^3+16*x^2+8*x*y+24*x*z"
    "+16*y^2-24*y*z+24*z^2+64*x-32*y+96*z"
)
QUARTIC_CYLINDER_DIRECTION = (1, -1, -1)
QUARTIC_CYLINDER_DIRECTRIX = (
    "( -554752*t^2+439520*t+311296*t^3-65536*t^4-130606, "
    "65536*t^4-307200*t^3+540160*t^2-422240*t+123804, "
    "14592*t^2-17280*t-4096*t^3+6802 )"
)

# tangent developable of a twisted cubic-like edge
TANGENT_QUARTIC_F = (
    "11+16*z-12*y-36*x-4*z^2-48*y*z+12*y^2-36*x*z+36*x*y+42*x^2+48*y^2*z"
    "+72*x*y*z-24*x*y^2+24*x^2*z-36*x^2*y-20*x^3-32*z*y^3-48*y^2*z*x"
    "-24*z*y*x^2+12*x^2*y^2-4*z*x^3+12*x^3*y+3*x^4"
)
TANGENT_EDGE_SYSTEM = (
    "2*x*y + 2*y*z - 2*y - 3*z + x*z",
    "4*y^3 - 2*z + 6*y*z + z^2",
)
# published with a typo in the z-component ((t+3)^3); the value consistent
# with the curve, the x-component and the surface itself is (t+2)^3
TANGENT_EDGE_MAP = (
    "( 3*(t^2+2)/(2*(t-1)^2), (t+2)*(t-4)/(4*(t-1)^2), (t+2)^3/(4*(t-1)^3) )"
)
TANGENT_EDGE_PLANAR_CUBIC = "4*y^3 - 2*z + 6*y*z + z^2"
TANGENT_EDGE_CUBIC_MAP_2D = "( (t+2)*(t-4)/(4*(t-1)^2), (t+2)^3/(4*(t-1)^3) )"
TANGENT_REFINED_P0 = (
    "( -(5*t-8)/(2*(t^2-2*t+1)), (t^2+7*t-11)/(4*(t^2-2*t+1)), "
    "-7*(t^2+4*t+4)/(8*(t^2-2*t+1)) )"
)
TANGENT_REFINED_P1 = "( 2*t^2+2*t-4, -3*t+3, 3*t^2/2+6*t+6 )"

# improper rational cone, apex (1, 1, 0)
IMPROPER_CONE_MAP = (
    "( (4*s^2+t+1-2*s+t^2+2*t*s)/(1-2*t-2*s+t^2+2*t*s+s^2), "
    "(6*t*s^2+7*t^2+6*s^3+8*t*s-s^2-4*t+1-2*s)/(1-2*t-2*s+t^2+2*t*s+s^2), "
    "(t^2*s^2+2*t*s^3+6*t*s^2+t^3+2*t^2*s+5*t^2+s^4+5*s^3+5*t*s)"
    "/(1-2*t-2*s+t^2+2*t*s+s^2) )"
)
IMPROPER_CONE_APEX = ("1", "1", "0")
IMPROPER_CONE_SECTION_CONIC = "283 - 338*x + 64*x^2 - 120*y + 102*x*y + 9*y^2"

# improper tangent developable with a cubic cuspidal edge
TANGENT_DEV_MAP = (
    "( (-1+2*t+2*s+3*t^2*s^2-2*t*s-t*s^2+2*t*s^3+4*s^5-t^6+4*s^4*t^2"
    "-3*t^4*s^2-2*t^2*s^3-2*t^4*s+4*s^4*t-2*t^3*s^2-2*t^3*s-s^3-s^4"
    "-2*t^5-s^2)/(t^2+s+t-1)^2, "
    "(-3*t^4*s-2*t^2*s^2+3*t^2*s+4*t*s^3-5*t^5-t*s^2-t^2+3*t^3+2*s^4-s^3"
    "-3*s^4*t-6*t^3*s+2*t^4*s^2-6*t^3*s^3+6*t^3*s^2+2*t^2*s^3+6*t^5*s"
    "-s^5-2*s^6-3*t^4*s^4+3*t^2*s^6+3*s^7+3*t^6*s-3*t^5*s^2-t^6*s^2"
    "+3*s^6*t-3*s^4*t^3+t^8-3*t^4*s^3+3*t^7-3*t^2*s^5)/(t^2+s+t-1)^3, "
    "2*s^4*(3*t^2*s^2+3*s^3+3*t*s^2-2*s^2-3*t^4-3*t^2*s-3*t^3+3*t^2)"
    "/(t^2+s+t-1)^3 )"
)
TANGENT_DEV_EDGE = "( 2*t^2-3*t, -t^3+3/2*t^2+1/4*t-3/8, -2*t^3+3*t^2-3/2*t+1/4 )"
TANGENT_DEV_IMPLICIT = (
    "32+96*y+96*x-48*z+96*x^2+32*x^3+48*y^2-64*y^3-48*y^4-48*y^2*x^2"
    "+96*x^2*y+192*x*y-96*x*y^3-20*z^2+32*z^3+13*z^4+48*z*y+12*z^3*x"
    "-12*z^2*x^2-48*z^2*x-144*z^2*y+120*z^2*y^2-72*z^3*y-32*z*y^3"
    "+192*z*y^2-48*z*x^2-72*z^2*x*y+144*y^2*x*z+96*z*y*x+48*z*x^2*y-96*z*x"
)

SPHERE_F = "x^2 + y^2 + z^2 - 1"
HYPERBOLOID_F = "x^2 + y^2 - z^2 - 1"
HYPERBOLIC_PARABOLOID_MAP = "(s, t, s*t)"
PARABOLOID_MAP = "(s, t, s^2 + t^2)"
PLANE_MAP = "(s, t, 0)"
TWISTED_CUBIC = "(t, t^2, t^3)"
UNIT_CIRCLE_CONE_MAP = "( s*(1-t^2)/(1+t^2), s*2*t/(1+t^2), s )"
