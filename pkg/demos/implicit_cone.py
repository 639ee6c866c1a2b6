#!/usr/bin/env python3
"""Classify an implicit quadric and rebuild a rational parametrization.

The surface 4x^2 + 9y^2 - 4x - 6y - z^2 + 2 = 0 is an elliptic cone.
The script walks the implicit pipeline: the bordered-Hessian form K,
the divisibility test K = 0 on the surface, apex extraction by the
homogeneity criterion, a plane section, and the assembled cone.
"""

from devsurf import (
    analyze_implicit,
    detect_apex,
    gaussian_form_implicit,
    parse_poly,
    print_map,
    print_poly,
    vanishes_on_surface,
    verify_on_surface,
)

F = parse_poly("4*x^2 + 9*y^2 - 4*x - 6*y - z^2 + 2", ("x", "y", "z"))
print("surface F =", print_poly(F))

K = gaussian_form_implicit(F)
print("bordered-Hessian form K =", print_poly(K))
print("K is exactly 576 * F:", K == F * 576)
print("K vanishes on the surface:", vanishes_on_surface(K, F))

status, apex = detect_apex(F)
print("tangent planes share the fixed point: (%s)" % ", ".join(str(a) for a in apex))

analysis = analyze_implicit(F)
result = analysis.parametrization
print()
print("classification:", analysis.classification.tag)
print("P0(t) =", print_map(result.p0))
print("P1(t) =", print_map(result.p1))
print("P(s,t) =", print_map(result.full_map()))
print("exact verification:", verify_on_surface(result, F))
