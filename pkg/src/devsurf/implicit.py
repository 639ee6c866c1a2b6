"""Developability analysis of implicit algebraic surfaces F(x, y, z) = 0.

The pipeline: a bordered-Hessian determinant K(x, y, z) vanishes on the
surface exactly when the surface is developable; a developable surface is
then a plane, a cone (all tangent planes share a fixed point), a cylinder
(the gradient is orthogonal to a fixed direction), or the tangent surface
of a space curve, whose cuspidal edge sits inside the singular locus.
Each decision here is exact linear algebra or exact divisibility; nothing
is sampled to decide anything.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import (
    DegenerateInputError,
    DevsurfError,
    NotRationalError,
    PointSearchExhaustedError,
    UnsupportedCurveError,
)
from .linalg import nullspace, primitive_integer_vector, solve_exact
from .poly import (
    MultiPoly,
    Q,
    det4,
    divides,
    gcd_many,
    resultant,
    squarefree_part,
    subresultant_linear,
)
from .ratfunc import RatFunc, RationalMap3, substitute, substitute_map_is_zero
from .curves import (
    COORDS,
    EdgeFrame,
    PlaneCurve,
    lift_to_space,
    parametrize_plane_curve,
    plane_candidates,
    section_implicit,
)

NOT_DEVELOPABLE = "NotDevelopable"
PLANE = "Plane"
CONICAL = "Conical"
CYLINDRICAL = "Cylindrical"
TANGENTIAL = "Tangential"
UNRESOLVED = "DevelopableUnresolved"


@dataclass(frozen=True)
class SurfaceClass:
    """Classification verdict for a surface."""

    tag: str
    apex: Optional[tuple[Q, Q, Q]] = None
    direction: Optional[tuple[int, ...]] = None
    edge_system: Optional[tuple[MultiPoly, ...]] = None
    note: str = ""

    def is_developable(self) -> bool:
        return self.tag not in (NOT_DEVELOPABLE,)


def gaussian_form_implicit(F: MultiPoly) -> MultiPoly:
    """Bordered-Hessian determinant K(x, y, z) of F; K = 0 on the surface
    characterizes developability."""
    if F.is_constant():
        raise ValueError("surface polynomial is constant")
    grad = [F.derivative(v) for v in COORDS]
    hess = [[F.derivative(a).derivative(b) for b in COORDS] for a in COORDS]
    rows = [
        hess[0] + [grad[0]],
        hess[1] + [grad[1]],
        hess[2] + [grad[2]],
        grad + [MultiPoly.zero()],
    ]
    return det4(rows)


def vanishes_on_surface(K: MultiPoly, F: MultiPoly) -> bool:
    """True when K vanishes identically on V(F): the squarefree part of F
    divides K."""
    if F.is_constant():
        raise ValueError("surface polynomial is constant")
    if K.is_zero():
        return True
    ok, _ = divides(squarefree_part(F), K)
    return ok


def detect_apex(F: MultiPoly) -> tuple[str, Optional[tuple[Q, Q, Q]]]:
    """Fixed point of all tangent planes, by the homogeneity criterion.

    F defines a cone with apex P0 exactly when translating P0 to the
    origin makes F homogeneous, i.e. when
    x0*Fx + y0*Fy + z0*Fz = x*Fx + y*Fy + z*Fz - d*F holds identically.
    Returns ("point", p), ("none", None) or ("degenerate", None).
    """
    d = F.total_degree()
    if d < 1:
        raise ValueError("surface polynomial is constant")
    grads = [F.derivative(v) for v in COORDS]
    rhs_poly = sum(
        (MultiPoly.var(v) * g for v, g in zip(COORDS, grads)), MultiPoly.zero()
    ) - F * d
    gmaps = [_coeff_map3(g) for g in grads]
    rmap = _coeff_map3(rhs_poly)
    support = set(rmap)
    for m in gmaps:
        support |= set(m)
    rows = []
    rhs = []
    for key in sorted(support):
        rows.append([m.get(key, Q(0)) for m in gmaps])
        rhs.append(rmap.get(key, Q(0)))
    status, sol = solve_exact(rows, rhs)
    if status == "unique":
        return "point", tuple(sol)
    if status == "underdetermined":
        return "degenerate", None
    return "none", None


def _coeff_map3(p: MultiPoly) -> dict:
    """Monomial-to-coefficient map over the full (x, y, z) exponent keys."""
    out = {}
    for exps, c in p.terms.items():
        key = tuple(exps[p.vars.index(v)] if v in p.vars else 0 for v in COORDS)
        out[key] = c
    return out


def detect_ruling_direction(F: MultiPoly) -> tuple[str, Optional[tuple[int, ...]]]:
    """Common ruling direction: exact kernel of the coefficient matrix of
    the three gradient components."""
    grads = [F.derivative(v) for v in COORDS]
    gmaps = [_coeff_map3(g) for g in grads]
    support = set()
    for m in gmaps:
        support |= set(m)
    rows = [[m.get(key, Q(0)) for m in gmaps] for key in sorted(support)]
    basis = nullspace(rows, 3)
    if len(basis) == 0:
        return "none", None
    if len(basis) > 1:
        return "degenerate", None
    return "vector", primitive_integer_vector(basis[0])


def singular_locus_curve(F: MultiPoly) -> list[tuple[MultiPoly, MultiPoly]]:
    """Candidate triangular systems (h, g) for the one-dimensional part of
    the singular locus of a tangential surface.

    g is the squarefree eliminant of the singular system in the two
    non-eliminated coordinates; h is a linear subresultant carrying the
    eliminated coordinate.  The precondition is a surface already known to
    be neither conical nor cylindrical.
    """
    status, _ = detect_apex(F)
    if status == "point":
        raise ValueError("surface is conical; it has no cuspidal edge to extract")
    status, _ = detect_ruling_direction(F)
    if status == "vector":
        raise ValueError("surface is cylindrical; it has no cuspidal edge to extract")
    return list(_iter_singular_systems(F))


def _iter_singular_systems(F: MultiPoly):
    seen = set()
    base = [F.derivative(v) for v in COORDS] + [F]
    base = [p for p in base if not p.is_zero()]
    for elim in COORDS:
        if F.degree_in(elim) == 0:
            continue
        eliminants = []
        positive = [p for p in base if p.degree_in(elim) > 0]
        free = [p for p in base if p.degree_in(elim) == 0]
        for p in free:
            eliminants.append(squarefree_part(p))
        for i in range(len(positive)):
            for j in range(i + 1, len(positive)):
                r = resultant(positive[i], positive[j], elim)
                if not r.is_zero():
                    eliminants.append(squarefree_part(r))
        if not eliminants:
            continue
        g = gcd_many(eliminants)
        if g.is_constant():
            continue
        g = squarefree_part(g)
        for i in range(len(positive)):
            for j in range(i + 1, len(positive)):
                s1 = subresultant_linear(positive[i], positive[j], elim)
                if s1 is None:
                    continue
                lead, rest = s1
                if lead.is_zero():
                    continue
                h = (lead * MultiPoly.var(elim) + rest).normalized()
                if (h, g) in seen:
                    continue
                seen.add((h, g))
                yield (h, g)


def classify_implicit(F: MultiPoly) -> tuple[SurfaceClass, MultiPoly, MultiPoly]:
    """Classify the surface; returns (classification, K, squarefree F)."""
    if F.is_zero() or F.is_constant():
        raise DegenerateInputError("input polynomial does not define a surface")
    Fs = squarefree_part(F)
    K = gaussian_form_implicit(Fs)
    if Fs.total_degree() == 1:
        return SurfaceClass(tag=PLANE), K, Fs
    if not vanishes_on_surface(K, Fs):
        return SurfaceClass(tag=NOT_DEVELOPABLE), K, Fs
    status, apex = detect_apex(Fs)
    if status == "point":
        return SurfaceClass(tag=CONICAL, apex=apex), K, Fs
    apex_note = "apex system underdetermined; " if status == "degenerate" else ""
    status, direction = detect_ruling_direction(Fs)
    if status == "vector":
        return SurfaceClass(tag=CYLINDRICAL, direction=direction), K, Fs
    if status == "degenerate":
        return (
            SurfaceClass(tag=UNRESOLVED, note=apex_note + "gradient coefficient kernel is 2-dimensional"),
            K,
            Fs,
        )
    first = next(_iter_singular_systems(Fs), None)
    if first is None:
        return (
            SurfaceClass(tag=UNRESOLVED, note=apex_note + "no one-dimensional singular component found"),
            K,
            Fs,
        )
    return SurfaceClass(tag=TANGENTIAL, edge_system=first, note=apex_note), K, Fs


# ---------------------------------------------------------------------------
# full pipeline: classify, then rebuild a parametrization
# ---------------------------------------------------------------------------


@dataclass
class ImplicitAnalysis:
    classification: SurfaceClass
    k_poly: MultiPoly
    surface: MultiPoly           # squarefree normalized input
    parametrization: object = None   # ParamResult | None
    failure: str = ""


def _plane_param(Fs: MultiPoly):
    """Canonical ruled parametrization of a plane."""
    from .builder import build_cylindrical

    frame_data = {v: Fs.derivative(v).constant_value() for v in COORDS if v in Fs.vars}
    solved = next(v for v in ("z", "y", "x") if frame_data.get(v))
    kept = [v for v in COORDS if v != solved]
    const = Fs.eval_partial({v: 0 for v in Fs.vars}).constant_value()
    tpoly = MultiPoly.var("t")
    values = {kept[0]: RatFunc(MultiPoly.zero()), kept[1]: RatFunc(tpoly)}
    coeff_solved = frame_data[solved]
    rest = Fs - Fs.coeffs_in(solved)[1] * MultiPoly.var(solved) if Fs.degree_in(solved) else Fs
    expr = rest * (-1 / coeff_solved)
    values[solved] = substitute(expr, {k: values[k] for k in expr.vars if k in values}) if not expr.is_constant() else RatFunc(expr)
    directrix = RationalMap3([values[n] for n in COORDS], ("t",))
    # ruling direction inside the plane (slanted when the plane is slanted)
    dvec = [Q(0)] * 3
    dvec[COORDS.index(kept[0])] = Q(1)
    if not expr.is_constant() and kept[0] in expr.vars:
        dvec[COORDS.index(solved)] = expr.derivative(kept[0]).constant_value()
    return build_cylindrical(tuple(dvec), directrix)


def analyze_implicit(
    F: MultiPoly,
    plane_budget: int = 35,
    point_budget: int = 200,
    refine: bool = True,
) -> ImplicitAnalysis:
    """Run the implicit pipeline end to end, verification included."""
    from .builder import build_conical, build_cylindrical, build_tangential, reduce_directrix, verify_on_surface

    cls, K, Fs = classify_implicit(F)
    out = ImplicitAnalysis(classification=cls, k_poly=K, surface=Fs)
    if cls.tag == NOT_DEVELOPABLE:
        return out
    if cls.tag == UNRESOLVED:
        out.failure = cls.note
        return out

    try:
        if cls.tag == PLANE:
            result = _plane_param(Fs)
            if not verify_on_surface(result, Fs):
                raise DevsurfError("plane parametrization failed verification")
            out.parametrization = result.with_verification(
                "substitution into the defining polynomial reduced to zero"
            )
            return out

        if cls.tag in (CONICAL, CYLINDRICAL):
            last = "no usable section plane within budget"
            sections = []
            for plane in plane_candidates(plane_budget):
                if cls.tag == CONICAL:
                    apex_val = plane.eval_all(dict(zip(COORDS, cls.apex)))
                    if apex_val == 0:
                        continue
                else:
                    normal = [plane.derivative(v).constant_value() if v in plane.vars else Q(0) for v in COORDS]
                    if sum(n * d for n, d in zip(normal, cls.direction)) == 0:
                        continue
                sec = section_implicit(Fs, plane)
                if sec is None:
                    continue
                sections.append(sec)
            sections.sort(key=lambda s: s.poly.total_degree())
            for sec in sections:
                try:
                    cp = parametrize_plane_curve(sec, budget=point_budget, param="t")
                    curve3 = lift_to_space(cp, sec.frame)
                    if cls.tag == CONICAL:
                        result = build_conical(cls.apex, curve3)
                    else:
                        result = build_cylindrical(cls.direction, curve3)
                    if not verify_on_surface(result, Fs):
                        last = "section rebuild failed exact verification"
                        continue
                    if refine:
                        reduced = reduce_directrix(result)
                        if verify_on_surface(reduced, Fs):
                            result = reduced
                    out.parametrization = result.with_verification(
                        "substitution into the defining polynomial reduced to zero"
                    )
                    return out
                except (UnsupportedCurveError, PointSearchExhaustedError, NotRationalError, DevsurfError, ValueError, ArithmeticError) as err:
                    last = str(err)
                    continue
            out.failure = last
            return out

        # tangential
        last = "no cuspidal edge candidate could be parametrized"
        for h, g in _iter_singular_systems(Fs):
            try:
                kept = tuple(n for n in COORDS if n not in (_elim_var(h, g),))
                frame = EdgeFrame(relation=h, kept=kept, solved=_elim_var(h, g))
                curve = PlaneCurve(g, frame)
                cp = parametrize_plane_curve(curve, budget=point_budget, param="t")
                edge = lift_to_space(cp, frame)
                if not substitute_map_is_zero(Fs, edge):
                    last = "candidate edge does not lie on the surface"
                    continue
                result = build_tangential(edge)
                if not verify_on_surface(result, Fs):
                    last = "tangent surface of the candidate edge failed verification"
                    continue
                if refine:
                    reduced = reduce_directrix(result)
                    if verify_on_surface(reduced, Fs):
                        result = reduced
                out.parametrization = result.with_verification(
                    "substitution into the defining polynomial reduced to zero"
                )
                return out
            except (UnsupportedCurveError, PointSearchExhaustedError, NotRationalError, DevsurfError, ValueError, ArithmeticError) as err:
                last = str(err)
                continue
        out.failure = last
        return out
    except (PointSearchExhaustedError, NotRationalError, UnsupportedCurveError, DevsurfError) as err:
        out.failure = str(err)
        return out


def _elim_var(h: MultiPoly, g: MultiPoly) -> str:
    for v in COORDS:
        if v in h.vars and v not in g.vars:
            return v
    for v in COORDS:
        if v not in g.vars:
            return v
    raise ValueError("edge system has no lift coordinate")
