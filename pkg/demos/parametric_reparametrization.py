#!/usr/bin/env python3
"""Proper reparametrization of improper rational surface maps.

Two inputs: an improper parametrization of a cone, and an improper
parametrization of a tangent developable.  In both cases the K(s,t)
form decides developability, the classification comes from the normal
vector, and the rebuilt standard-form map is certified by substituting
the ORIGINAL map into the implicit equation of the rebuilt surface.
"""

from devsurf import (
    analyze_parametric,
    gaussian_form_parametric,
    parse_map,
    print_map,
    print_poly,
)

CONE = (
    "( (4*s^2+t+1-2*s+t^2+2*t*s)/(1-2*t-2*s+t^2+2*t*s+s^2), "
    "(6*t*s^2+7*t^2+6*s^3+8*t*s-s^2-4*t+1-2*s)/(1-2*t-2*s+t^2+2*t*s+s^2), "
    "(t^2*s^2+2*t*s^3+6*t*s^2+t^3+2*t^2*s+5*t^2+s^4+5*s^3+5*t*s)"
    "/(1-2*t-2*s+t^2+2*t*s+s^2) )"
)

TANGENT = (
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

for label, text in (("cone", CONE), ("tangent developable", TANGENT)):
    P = parse_map(text, params=("s", "t"))
    print(f"--- improper {label} ---")
    K = gaussian_form_parametric(P)
    print("K(s,t) identically zero:", K.is_zero())
    analysis = analyze_parametric(P)
    cls = analysis.classification
    extra = cls.apex if cls.apex is not None else cls.direction
    detail = "(%s)" % ", ".join(str(v) for v in extra) if extra else ""
    print("classification:", cls.tag, detail)
    result = analysis.parametrization
    print("rebuilt P0(t) =", print_map(result.p0))
    print("rebuilt P1(t) =", print_map(result.p1))
    print("implicit equation of the rebuilt surface:")
    print("   ", print_poly(analysis.implicit_equation), "= 0")
    print("original map satisfies it:", result.verified)
    print()
