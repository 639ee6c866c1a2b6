"""Parametric pipeline: K(s,t), tangent-plane fixed point, ruling kernel,
singular parameter loci, rebuild with verification."""

import random

import pytest

from devsurf.poly import MultiPoly, Q, divides
from devsurf.ratfunc import RatFunc, RationalMap3, substitute_map_is_zero
from devsurf.exprs import parse_map, parse_poly
from devsurf.errors import DegenerateInputError, DevsurfError
from devsurf.builder import build_conical, build_cylindrical, build_tangential, ruling_triple_product
from devsurf.parametric import (
    analyze_parametric,
    detect_apex_parametric,
    detect_direction_parametric,
    gaussian_form_parametric,
    section_parametric,
    singular_parameter_locus,
    surface_normal,
)
from devsurf.curves import is_proper_curve, plane_frame

from conftest import random_space_curve
import cases

X, Y, Z = (MultiPoly.var(v) for v in "xyz")


def k_oracle(P: RationalMap3) -> bool:
    """Independent developability form: naive RatFunc cross products and a
    cofactor determinant written out by hand."""
    Ps = P.derivative("s")
    Pt = P.derivative("t")
    l = Ps[1] * Pt[2] - Ps[2] * Pt[1]
    m = Ps[2] * Pt[0] - Ps[0] * Pt[2]
    n = Ps[0] * Pt[1] - Ps[1] * Pt[0]
    rows = [
        (l.derivative("s"), l.derivative("t"), l),
        (m.derivative("s"), m.derivative("t"), m),
        (n.derivative("s"), n.derivative("t"), n),
    ]
    det = (
        rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
        - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
        + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0])
    )
    return det.is_zero()


class TestGaussianForm:
    def test_reference_cone_map_is_developable(self, improper_cone_map):
        assert gaussian_form_parametric(improper_cone_map).is_zero()

    def test_plane_is_developable(self):
        P = parse_map(cases.PLANE_MAP, params=("s", "t"))
        assert gaussian_form_parametric(P).is_zero()

    def test_paraboloid_is_not(self):
        P = parse_map(cases.PARABOLOID_MAP, params=("s", "t"))
        K = gaussian_form_parametric(P)
        assert not K.is_zero()
        assert k_oracle(P) is False

    def test_hyperbolic_paraboloid_is_not(self):
        P = parse_map(cases.HYPERBOLIC_PARABOLOID_MAP, params=("s", "t"))
        assert not gaussian_form_parametric(P).is_zero()
        assert k_oracle(P) is False

    def test_matches_oracle_on_reference(self, improper_cone_map):
        assert k_oracle(improper_cone_map) is True


class TestApexDetection:
    def test_reference_apex(self, improper_cone_map):
        nd = surface_normal(improper_cone_map)
        status, apex = detect_apex_parametric(nd, improper_cone_map)
        assert status == "point" and apex == (Q(1), Q(1), Q(0))

    def test_round_trip_through_build(self, elliptic_cone):
        curve = parse_map(cases.ELLIPTIC_CONE_CURVE_3D, params=("t",))
        built = build_conical((Q(1, 2), Q(1, 3), 0), curve)
        nd = surface_normal(built.full_map())
        status, apex = detect_apex_parametric(nd, built.full_map())
        assert status == "point" and apex == (Q(1, 2), Q(1, 3), Q(0))

    def test_plane_degenerate(self):
        P = parse_map(cases.PLANE_MAP, params=("s", "t"))
        nd = surface_normal(P)
        status, _ = detect_apex_parametric(nd, P)
        assert status == "degenerate"


class TestDirectionDetection:
    def test_round_trip_through_build(self, quartic_cylinder):
        directrix = parse_map(cases.QUARTIC_CYLINDER_DIRECTRIX, params=("t",))
        built = build_cylindrical(cases.QUARTIC_CYLINDER_DIRECTION, directrix)
        nd = surface_normal(built.full_map())
        status, d = detect_direction_parametric(nd)
        assert status == "vector" and d == (1, -1, -1)

    def test_circular_cylinder(self):
        circle = parse_map("( (1-t^2)/(1+t^2), 2*t/(1+t^2), 0 )", params=("t",))
        built = build_cylindrical((0, 0, 1), circle)
        nd = surface_normal(built.full_map())
        status, d = detect_direction_parametric(nd)
        assert status == "vector" and d == (0, 0, 1)

    def test_cone_has_no_direction(self, improper_cone_map):
        nd = surface_normal(improper_cone_map)
        status, _ = detect_direction_parametric(nd)
        assert status == "none"


class TestSingularLocus:
    def test_tangent_standard_form_locus_is_base_line(self):
        edge = parse_map(cases.TWISTED_CUBIC, params=("t",))
        built = build_tangential(edge)
        loci = singular_parameter_locus(built.full_map())
        assert any(l == MultiPoly.var("s") for l in loci)

    def test_plane_rejected(self):
        P = parse_map(cases.PLANE_MAP, params=("s", "t"))
        with pytest.raises(DevsurfError):
            singular_parameter_locus(P)


class TestRebuild:
    def test_cone_rebuild_with_projection(self, improper_cone_map):
        a = analyze_parametric(improper_cone_map)
        assert a.classification.tag == "Conical"
        assert a.classification.apex == (Q(1), Q(1), Q(0))
        assert a.parametrization is not None and a.parametrization.verified
        # rebuilt directrix is proper even though the input is improper
        proper, idx = is_proper_curve(a.parametrization.p0, "t")
        p1_proper, _ = is_proper_curve(a.parametrization.p1, "t")
        assert proper or a.parametrization.p0.is_constant()
        assert substitute_map_is_zero(a.implicit_equation, improper_cone_map)

    def test_plane_z1_projection_divisible_by_reference_conic(self, improper_cone_map):
        plane = Z - 1
        sec = section_parametric(improper_cone_map, plane, plane_frame(plane))
        conic = parse_poly(cases.IMPROPER_CONE_SECTION_CONIC, ("x", "y"))
        ok, _ = divides(conic, sec.poly)
        assert ok

    def test_tangent_rebuild_matches_reference_implicit(self, tangent_dev_map):
        a = analyze_parametric(tangent_dev_map)
        assert a.classification.tag == "Tangential"
        assert a.parametrization is not None and a.parametrization.verified
        target = parse_poly(cases.TANGENT_DEV_IMPLICIT, ("x", "y", "z"))
        assert a.implicit_equation == target.normalized()
        assert substitute_map_is_zero(a.implicit_equation, tangent_dev_map)

    def test_plane_input_canonical_rebuild(self):
        P = parse_map(cases.PLANE_MAP, params=("s", "t"))
        a = analyze_parametric(P)
        assert a.classification.tag == "Plane"
        assert a.parametrization is not None
        assert a.parametrization.full_map() == P

    def test_degenerate_curve_image(self):
        P = parse_map("(t, t^2, t^3)", params=("s", "t"))
        with pytest.raises(DegenerateInputError):
            analyze_parametric(P)

    def test_improper_cylinder_map(self):
        circle = parse_map("( (1-t^2)/(1+t^2), 2*t/(1+t^2), 0 )", params=("t",))
        cyl = build_cylindrical((0, 0, 1), circle)
        doubled = cyl.full_map().subs({"t": RatFunc(MultiPoly.var("t") ** 2)}, ("s", "t"))
        a = analyze_parametric(doubled)
        assert a.classification.tag == "Cylindrical"
        assert a.classification.direction == (0, 0, 1)
        assert a.parametrization is not None and a.parametrization.verified
        proper, _ = is_proper_curve(a.parametrization.p0, "t")
        assert proper

    def test_improper_tangent_map_reparametrized_edge(self):
        tw = parse_map(cases.TWISTED_CUBIC, params=("t",))
        tan = build_tangential(tw)
        doubled = tan.full_map().subs({"t": RatFunc(MultiPoly.var("t") ** 2)}, ("s", "t"))
        a = analyze_parametric(doubled)
        assert a.classification.tag == "Tangential"
        assert a.parametrization is not None and a.parametrization.verified

    def test_warped_improper_cylinder(self):
        # compose with the 2:1 plane map (s, t) -> (s + t^2, t^2)
        circle = parse_map("( (1-t^2)/(1+t^2), 2*t/(1+t^2), 0 )", params=("t",))
        cyl = build_cylindrical((1, 1, 2), circle)
        s, t = RatFunc(MultiPoly.var("s")), RatFunc(MultiPoly.var("t"))
        warped = cyl.full_map().subs({"s": s + t * t, "t": t * t}, ("s", "t"))
        a = analyze_parametric(warped)
        assert a.classification.tag == "Cylindrical"
        assert a.classification.direction == (1, 1, 2)
        assert a.parametrization is not None and a.parametrization.verified

    def test_improper_scaling_of_parameters(self):
        # the same cone traced twice: K still vanishes, rebuild still proper
        curve = parse_map("( (1-t^2)/(1+t^2), 2*t/(1+t^2), 1 )", params=("t",))
        built = build_conical((0, 0, 0), curve)
        full = built.full_map()
        doubled = full.subs({"t": RatFunc(MultiPoly.var("t") ** 2)}, ("s", "t"))
        a = analyze_parametric(doubled)
        assert a.classification.tag == "Conical"
        assert a.classification.apex == (Q(0), Q(0), Q(0))
        assert a.parametrization is not None and a.parametrization.verified


class TestTripleProductEquivalence:
    def test_k_iff_triple_product_on_constructions(self):
        rng = random.Random(99)
        agreements = 0
        for i in range(8):
            curve = random_space_curve(rng, 2)
            p1 = random_space_curve(rng, 1)
            try:
                p0 = curve
                full = RationalMap3(
                    [a + RatFunc(MultiPoly.var("s")) * b for a, b in zip(p0.components, p1.components)],
                    ("s", "t"),
                )
                K_zero = gaussian_form_parametric(full).is_zero()
                tp_zero = ruling_triple_product(p0, p1).is_zero()
                assert K_zero == tp_zero
                agreements += 1
            except DegenerateInputError:
                continue
        assert agreements >= 5
