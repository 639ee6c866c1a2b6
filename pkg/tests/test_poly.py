"""Kernel arithmetic: exactness of derivatives, determinants, resultants,
gcds, squarefree parts and division, checked against independent oracles."""

import random

import pytest

from devsurf.poly import (
    MultiPoly,
    Q,
    det4,
    det_bareiss,
    divides,
    gcd_multi,
    partial_derivative,
    poly_divmod_univar,
    rational_roots,
    resultant,
    squarefree_part,
    subresultant_linear,
)
from devsurf.exprs import parse_poly

from conftest import bordered_hessian_oracle, perm_det, random_small_multipoly, sylvester_oracle

X, Y, Z, T = (MultiPoly.var(v) for v in "xyzt")


def P(text, vars_=("x", "y", "z", "t")):
    return parse_poly(text, vars_)


class TestDerivative:
    def test_quadric_cone_partial(self, elliptic_cone):
        assert partial_derivative(elliptic_cone, "x") == 8 * X - 4

    def test_constant_derivative_is_zero(self):
        assert partial_derivative(MultiPoly.const(5), "x").is_zero()

    def test_sphere_partial(self, sphere):
        assert partial_derivative(sphere, "z") == 2 * Z

    def test_linearity_and_product_rule_randomized(self):
        rng = random.Random(101)
        for _ in range(25):
            p = random_small_multipoly(rng, ("x", "y"), 3)
            q = random_small_multipoly(rng, ("x", "y"), 3)
            a, b = rng.randint(-5, 5), rng.randint(-5, 5)
            lin = partial_derivative(p * a + q * b, "x")
            assert lin == a * partial_derivative(p, "x") + b * partial_derivative(q, "x")
            prod = partial_derivative(p * q, "y")
            assert prod == partial_derivative(p, "y") * q + p * partial_derivative(q, "y")


class TestDeterminants:
    def test_identity(self):
        one, zero = MultiPoly.const(1), MultiPoly.zero()
        rows = [[one if i == j else zero for j in range(4)] for i in range(4)]
        assert det4(rows) == 1

    def test_repeated_row_vanishes(self):
        row = [X, Y, Z, X * Y]
        rows = [row, [Y, Z, X, X], row, [X + Y, Z, Z, Y]]
        assert det4(rows).is_zero()

    def test_sphere_bordered_hessian_matches_oracle(self, sphere):
        expected = bordered_hessian_oracle(sphere)
        assert expected == -16 * (X**2 + Y**2 + Z**2)
        coords = ("x", "y", "z")
        grad = [sphere.derivative(v) for v in coords]
        hess = [[sphere.derivative(a).derivative(b) for b in coords] for a in coords]
        rows = [hess[i] + [grad[i]] for i in range(3)] + [grad + [MultiPoly.zero()]]
        assert det4(rows) == expected

    def test_bareiss_equals_permutation_oracle_randomized(self):
        rng = random.Random(77)
        for _ in range(30):
            n = rng.choice((3, 4))
            rows = [
                [random_small_multipoly(rng, ("x", "y"), 1, density=0.8, lo=-3, hi=3) for _ in range(n)]
                for _ in range(n)
            ]
            assert det_bareiss([list(r) for r in rows]) == perm_det(rows)


class TestResultant:
    def test_substitution_case(self):
        assert resultant(X - T, X**2 - Y, "x") == T**2 - Y

    def test_constant_resultant_matches_root_product_oracle(self):
        p = X**2 + 1
        q = X**2 - 1
        assert sylvester_oracle(p, q, "x") == MultiPoly.const(4)
        assert resultant(p, q, "x") == 4

    def test_common_factor_forces_zero(self):
        rng = random.Random(5)
        for _ in range(20):
            g = random_small_multipoly(rng, ("x", "y"), 2)
            if g.degree_in("x") == 0:
                continue
            a = random_small_multipoly(rng, ("x", "y"), 2)
            b = random_small_multipoly(rng, ("x", "y"), 2)
            if (g * a).degree_in("x") == 0 or (g * b).degree_in("x") == 0:
                continue
            assert resultant(g * a, g * b, "x").is_zero()

    def test_coprime_nonzero(self):
        assert not resultant(X * Y + 1, X + Y, "x").is_zero()

    def test_both_constant_in_var_rejected(self):
        with pytest.raises(ValueError):
            resultant(Y + 1, Y**2, "x")


class TestGcd:
    def test_simple(self):
        assert gcd_multi(X**2 - 1, X - 1) == X - 1

    def test_self_gcd_is_normalized_self(self):
        p = 4 * X**2 - 4
        assert gcd_multi(p, p) == X**2 - 1

    def test_gcd_with_zero(self):
        assert gcd_multi(MultiPoly.zero(), 3 * X - 3) == X - 1

    def test_two_sided_division_oracle(self):
        p = (X + Y) ** 2 * (X - Y)
        q = (X + Y) * (X - Y) ** 2
        g = gcd_multi(p, q)
        ok_p, hp = divides(g, p)
        ok_q, hq = divides(g, q)
        assert ok_p and ok_q
        # greatest: the cofactors are coprime
        assert gcd_multi(hp, hq).is_constant()
        assert g == (X + Y) * (X - Y) * Q(1)

    def test_randomized_constructed_gcds(self):
        rng = random.Random(9)
        for _ in range(25):
            g = random_small_multipoly(rng, ("x", "y"), 2)
            a = random_small_multipoly(rng, ("x", "y"), 2)
            b = random_small_multipoly(rng, ("x", "y"), 2)
            d = gcd_multi(g * a, g * b)
            ok1, c1 = divides(d, g * a)
            ok2, c2 = divides(d, g * b)
            assert ok1 and ok2
            okg, _ = divides(gcd_multi(d, g), g)
            assert okg
            assert gcd_multi(c1, c2).is_constant()


class TestSquarefree:
    def test_square_drops(self):
        assert squarefree_part((X - 1) ** 2) == X - 1

    def test_squarefree_unchanged(self):
        p = X**2 + Y - 1
        assert squarefree_part(p) == p

    def test_cube_factor_division_oracle(self):
        base = X**2 + Y**2 - 1
        p = base**3 * Z
        sf = squarefree_part(p)
        assert sf == (base * Z).normalized()
        ok, _ = divides(sf**3, p * sf * sf)
        assert ok

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            squarefree_part(MultiPoly.zero())


class TestDivision:
    def test_constant_multiple(self, elliptic_cone):
        ok, h = divides(elliptic_cone, elliptic_cone * 576)
        assert ok and h == MultiPoly.const(576)

    def test_non_divisor(self, elliptic_cone):
        ok, h = divides(elliptic_cone, elliptic_cone + 1)
        assert not ok and h is None

    def test_product(self):
        ok, h = divides(X + Y, (X + Y) * (X**2 - 3))
        assert ok and h == X**2 - 3

    def test_division_matches_evaluation_at_random_points(self):
        rng = random.Random(31)
        p = X**2 + 3 * Y - 1
        q = p * (X * Y - 2)
        ok, h = divides(p, q)
        assert ok
        for _ in range(50):
            pt = {"x": Q(rng.randint(-40, 40)), "y": Q(rng.randint(-40, 40))}
            assert q.eval_all(pt) == p.eval_all(pt) * h.eval_all(pt)


class TestRingAxioms:
    def test_distributivity_randomized(self):
        rng = random.Random(13)
        for _ in range(30):
            p = random_small_multipoly(rng, ("x", "y", "z"), 2)
            q = random_small_multipoly(rng, ("x", "y", "z"), 2)
            r = random_small_multipoly(rng, ("x", "y", "z"), 2)
            assert (p + q) * r == p * r + q * r
            assert p * q == q * p
            assert (p - p).is_zero()


class TestUnivariateHelpers:
    def test_divmod(self):
        p = P("t^3 - 2*t + 5", ("t",))
        q = P("t - 1", ("t",))
        quo, rem = poly_divmod_univar(p, q, "t")
        assert quo * q + rem == p
        assert rem.total_degree() == 0

    def test_rational_roots_exact(self):
        wanted = [Q(1), Q(1, 2), Q(-1, 3)]
        p = MultiPoly.const(6)
        for r in wanted:
            p = p * (T - r)
        roots = rational_roots(p, "t")
        assert roots == sorted(wanted)

    def test_rational_roots_ignores_irrational(self):
        assert rational_roots(P("t^2 - 2", ("t",)), "t") == []

    def test_rational_roots_large_root(self):
        p = (T - 37) * (2 * T + 91)
        roots = rational_roots(p, "t")
        assert roots == sorted([Q(37), Q(-91, 2)])

    def test_subresultant_linear_tracks_shared_root(self):
        p = (T - 1) * (T - 2)
        q = (T - 1) * (T - 3)
        s1 = subresultant_linear(p, q, "t")
        assert s1 is not None
        a, b = s1
        val = a * T + b
        assert val.eval_partial({"t": Q(1)}).is_zero() or val.eval_all({"t": Q(1)}) == 0
