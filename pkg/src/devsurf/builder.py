"""Assembly, verification and implicitization of standard-form ruled
parametrizations P(s, t) = P0(t) + s * P1(t)."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Sequence

from .errors import DevsurfError
from .linalg import nullspace
from .poly import MultiPoly, Q, exact_div, gcd_many, gcd_multi, resultant, squarefree_part
from .ratfunc import RatFunc, RationalMap3, cross3, dot3, substitute_map_is_zero
from .curves import COORDS, is_proper_curve

CONICAL = "Conical"
CYLINDRICAL = "Cylindrical"
TANGENTIAL = "Tangential"


@dataclass(frozen=True)
class ParamResult:
    """Standard-form ruled parametrization with its verification state."""

    p0: RationalMap3            # directrix, parameter t
    p1: RationalMap3            # ruling direction field, parameter t
    kind: str
    verified: bool = False
    certificate: str = ""
    refined: bool = False       # after refinement p1 need not be p0' for tangential

    def full_map(self) -> RationalMap3:
        s = RatFunc(MultiPoly.var("s"))
        comps = [a + s * b for a, b in zip(self.p0.components, self.p1.components)]
        return RationalMap3(comps, ("s", "t"))

    def with_verification(self, certificate: str) -> "ParamResult":
        return replace(self, verified=True, certificate=certificate)


def _as_constant_map(point: Sequence) -> RationalMap3:
    return RationalMap3.constant([Q(p) for p in point], ("t",))


def ruling_triple_product(p0: RationalMap3, p1: RationalMap3) -> RatFunc:
    """Developability form of a ruled surface P0 + s*P1: the triple product
    of P0', P1 and P1'.  Identically zero exactly for developable ruled
    surfaces."""
    d0 = p0.derivative("t")
    d1 = p1.derivative("t")
    return dot3(cross3(d0.components, p1.components), d1.components)


def _curve_hits_point(curve: RationalMap3, point: Sequence[Q]) -> bool:
    """Does some parameter value (over the complex numbers) map to point?"""
    diffs = []
    all_zero = True
    for comp, val in zip(curve.components, point):
        delta = comp - RatFunc(MultiPoly.const(Q(val)))
        if delta.is_zero():
            continue
        all_zero = False
        diffs.append(delta.num)
    if all_zero:
        return True
    g = gcd_many(diffs)
    return g.degree_in("t") > 0


def build_conical(apex: Sequence, curve: RationalMap3, check_proper: bool = True) -> ParamResult:
    """Cone over a directrix: P(s,t) = (1-s)*apex + s*curve(t)."""
    apex = tuple(Q(a) for a in apex)
    if check_proper:
        proper, idx = is_proper_curve(curve, curve.params[0])
        if not proper:
            raise DevsurfError(f"directrix is improper (tracing index {idx})")
    if _curve_hits_point(curve, apex):
        raise DevsurfError("directrix passes through the apex")
    apex_map = _as_constant_map(apex)
    p1 = curve.sub(apex_map)
    dcurve = curve.derivative("t")
    if all(c.is_zero() for c in cross3(p1.components, dcurve.components)):
        raise DevsurfError("cone degenerates: directrix runs along a single ruling")
    return ParamResult(p0=apex_map, p1=p1, kind=CONICAL)


def build_cylindrical(direction: Sequence, curve: RationalMap3, check_proper: bool = True) -> ParamResult:
    """Cylinder over a directrix: P(s,t) = curve(t) + s*direction."""
    dvec = tuple(Q(d) for d in direction)
    if all(d == 0 for d in dvec):
        raise DevsurfError("ruling direction is zero")
    if check_proper:
        proper, idx = is_proper_curve(curve, curve.params[0])
        if not proper:
            raise DevsurfError(f"directrix is improper (tracing index {idx})")
    dmap = _as_constant_map(dvec)
    dcurve = curve.derivative("t")
    cr = cross3(dcurve.components, dmap.components)
    if all(c.is_zero() for c in cr):
        raise DevsurfError("cylinder degenerates: directrix is parallel to the rulings")
    return ParamResult(p0=curve, p1=dmap, kind=CYLINDRICAL)


def _is_planar_curve(curve: RationalMap3) -> bool:
    """Exact test for affine dependence of the three components."""
    dens = [c.den for c in curve.components]
    D = MultiPoly.const(1)
    for d in dens:
        D = exact_div(D * d, gcd_multi(D, d)) or D * d
    cols = []
    for c in curve.components:
        q = exact_div(D, c.den)
        cols.append(c.num * q)
    cols.append(D)
    support = set()
    maps = []
    for p in cols:
        m = {}
        for exps, cf in p.terms.items():
            key = exps[p.vars.index("t")] if "t" in p.vars else 0
            m[key] = cf
        maps.append(m)
        support |= set(m)
    rows = [[m.get(k, Q(0)) for m in maps] for k in sorted(support)]
    for vec in nullspace(rows, 4):
        if any(v != 0 for v in vec[:3]):
            return True
    return False


def build_tangential(edge: RationalMap3, check_proper: bool = True) -> ParamResult:
    """Tangent developable of a space curve: P(s,t) = edge(t) + s*edge'(t)."""
    if check_proper:
        proper, idx = is_proper_curve(edge, edge.params[0])
        if not proper:
            raise DevsurfError(f"cuspidal edge parametrization is improper (tracing index {idx})")
    dedge = edge.derivative("t")
    if all(c.is_zero() for c in dedge.components):
        raise DevsurfError("edge curve is constant")
    if _is_planar_curve(edge):
        raise DevsurfError("edge curve is planar; its tangent surface is just that plane")
    return ParamResult(p0=edge, p1=dedge, kind=TANGENTIAL)


# ---------------------------------------------------------------------------
# implicitization
# ---------------------------------------------------------------------------


def _eliminant_for_route(p0, p1, route: int, reparam: Optional[RatFunc]) -> Optional[MultiPoly]:
    """Eliminate s by solving it from component `route`, then eliminate t
    by a resultant of the two remaining numerators."""
    comps0 = list(p0.components)
    comps1 = list(p1.components)
    if reparam is not None:
        comps0 = [c.subs({"t": reparam}) for c in comps0]
        comps1 = [c.subs({"t": reparam}) for c in comps1]
    if comps1[route].is_zero():
        return None
    others = [i for i in range(3) if i != route]
    eqs = []
    Xr = RatFunc(MultiPoly.var(COORDS[route]))
    for i in others:
        Xi = RatFunc(MultiPoly.var(COORDS[i]))
        eq = (Xi - comps0[i]) * comps1[route] - (Xr - comps0[route]) * comps1[i]
        if eq.is_zero():
            return None
        eqs.append(eq.num)
    a, b = eqs
    da, db = a.degree_in("t"), b.degree_in("t")
    if da == 0 and db == 0:
        return None
    if da == 0:
        r = a
    elif db == 0:
        r = b
    else:
        g = gcd_multi(a, b)
        if g.degree_in("t") > 0:
            a = exact_div(a, g)
            b = exact_div(b, g)
            if a.degree_in("t") == 0 and b.degree_in("t") == 0:
                return None
        if a.degree_in("t") == 0:
            r = a
        elif b.degree_in("t") == 0:
            r = b
        else:
            r = resultant(a, b, "t")
    if r.is_zero():
        return None
    r = MultiPoly((), {}) if r.is_constant() else squarefree_part(r)
    return None if r.is_zero() or r.is_constant() else r


def _surface_samples(full: RationalMap3, count: int = 20):
    samples = []
    k = 0
    sval = 2
    while len(samples) < count and k < 200:
        k += 1
        tval = Q(k, 7) + 3
        pt = full.eval_all({"s": Q(sval), "t": tval})
        if pt is None:
            continue
        samples.append(pt)
        sval += 1
    return samples


def implicitize_ruled(p: ParamResult) -> MultiPoly:
    """Implicit equation of a standard-form ruled surface.

    s is eliminated linearly, t by a univariate resultant; extraneous
    factors are stripped by gcds across elimination routes and parameter
    changes, then by exact vanishing at sampled surface points.
    """
    t = MultiPoly.var("t")
    reparams = [None, RatFunc(t + 1), RatFunc(t - 2, t + 3)]
    candidates = []
    for route in range(3):
        for rp in reparams:
            r = _eliminant_for_route(p.p0, p.p1, route, rp)
            if r is not None:
                candidates.append(r)
                if len(candidates) >= 4:
                    break
        if len(candidates) >= 4:
            break
    if not candidates:
        raise DevsurfError("all eliminations degenerate; the map may not define a surface")
    g = candidates[0]
    for c in candidates[1:]:
        g2 = gcd_multi(g, c)
        if not g2.is_constant():
            g = g2
    g = squarefree_part(g)

    # split off any factor that fails to vanish on sampled surface points
    samples = _surface_samples(p.full_map())
    if not samples:
        raise DevsurfError("could not sample the surface away from its poles")
    pieces = [g]
    for c in candidates:
        new_pieces = []
        for piece in pieces:
            shared = gcd_multi(piece, c)
            if shared.is_constant() or shared == piece:
                new_pieces.append(piece)
                continue
            rest = exact_div(piece, shared)
            new_pieces.extend([shared, rest])
        pieces = new_pieces
    kept = []
    for piece in pieces:
        if piece.is_constant():
            continue
        if all(piece.eval_all(dict(zip(COORDS, pt))) == 0 for pt in samples):
            kept.append(piece)
    if not kept:
        raise DevsurfError("implicitization lost the surface factor")
    result = kept[0]
    for piece in kept[1:]:
        result = result * piece
    return squarefree_part(result)


def verify_on_surface(p: ParamResult, F: MultiPoly) -> bool:
    """Exact substitution check: P(s, t) satisfies F identically."""
    return substitute_map_is_zero(F, p.full_map())


# ---------------------------------------------------------------------------
# directrix degree reduction
# ---------------------------------------------------------------------------


def _map_degree(m: RationalMap3) -> int:
    d = 0
    for c in m.components:
        d = max(d, c.num.degree_in("t"), c.den.degree_in("t"))
    return d


def reduce_directrix(p: ParamResult) -> ParamResult:
    """Slide the directrix along the rulings, p0 -> p0 + q(t)*p1, choosing
    q by polynomial division to shrink component degrees.  The surface is
    unchanged; only the base curve moves."""
    best = p.p0
    best_deg = _map_degree(p.p0)
    changed = True
    while changed:
        changed = False
        for i in range(3):
            c0 = best.components[i]
            c1 = p.p1.components[i]
            if c1.is_zero() or c0.is_zero():
                continue
            ratio = c0 / c1
            if ratio.is_constant():
                q = ratio
            else:
                qpoly = ratio.polynomial_part("t")
                if qpoly.is_zero():
                    continue
                q = RatFunc(qpoly)
            cand = RationalMap3(
                [a - q * b for a, b in zip(best.components, p.p1.components)], best.params
            )
            d = _map_degree(cand)
            if d < best_deg:
                best, best_deg, changed = cand, d, True
    if best == p.p0:
        return p
    refined = ParamResult(p0=best, p1=p.p1, kind=p.kind, refined=True)
    return refined
