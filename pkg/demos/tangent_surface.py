#!/usr/bin/env python3
"""A tangent developable: cuspidal edge from the singular locus, tangent
assembly, and directrix refinement.

The surface is the tangent surface of a space cubic.  Its cuspidal edge is
recovered as a triangular system (one polynomial linear in x plus a plane
cubic), the plane cubic is parametrized through its double point, and the
surface is rebuilt as edge(t) + s * edge'(t).
"""

from devsurf import (
    analyze_implicit,
    classify_implicit,
    parse_poly,
    print_map,
    print_poly,
    reduce_directrix,
    verify_on_surface,
)

F = parse_poly(
    "11+16*z-12*y-36*x-4*z^2-48*y*z+12*y^2-36*x*z+36*x*y+42*x^2+48*y^2*z"
    "+72*x*y*z-24*x*y^2+24*x^2*z-36*x^2*y-20*x^3-32*z*y^3-48*y^2*z*x"
    "-24*z*y*x^2+12*x^2*y^2-4*z*x^3+12*x^3*y+3*x^4",
    ("x", "y", "z"),
)

cls, K, Fs = classify_implicit(F)
print("classification:", cls.tag)
print("cuspidal edge system:")
for poly in cls.edge_system:
    print("   ", print_poly(poly), "= 0")

plain = analyze_implicit(F, refine=False)
print()
print("cuspidal edge P0(t) =", print_map(plain.parametrization.p0))
print("tangent assembly verifies:", verify_on_surface(plain.parametrization, F))

refined = reduce_directrix(plain.parametrization)
print()
print("refined directrix:", print_map(refined.p0))
print("ruling field:     ", print_map(refined.p1))
print("same surface after refinement:", verify_on_surface(refined, F))
