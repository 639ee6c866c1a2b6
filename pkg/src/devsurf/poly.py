"""Exact multivariate polynomial arithmetic over the rationals.

A :class:`MultiPoly` stores a mapping from exponent vectors to exact
rational coefficients, together with the tuple of variable names the
exponents refer to.  The representation is canonical:

* no zero coefficients are stored,
* the variable tuple is sorted in the fixed global order
  ``x, y, z, s, t, u, v, w`` (further names alphabetically), and
* variables that do not actually occur are dropped.

Canonical storage makes structural equality and hashing coincide with
mathematical equality, which the rest of the package relies on: every
geometric decision reduces to "is this polynomial identically zero".
Coefficients are gmpy2.mpq when available, fractions.Fraction otherwise;
there is no floating point anywhere in a decision path.

Besides the arithmetic operators, the module provides the elimination
toolkit used by the analyzers: formal derivatives, cofactor determinants,
Sylvester resultants (fraction-free Bareiss elimination), multivariate
gcd (certified coprimality probe, then evaluation-interpolation verified
by exact division, with a primitive-PRS fallback), squarefree parts,
exact division, and linear subresultants.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

try:  # gmpy2's mpq is a drop-in exact rational, several times faster
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover - slower but fully equivalent
    Q = Fraction

_COEFF_TYPES = (int, Q, Fraction)

_CANONICAL = ("x", "y", "z", "s", "t", "u", "v", "w")
_CANON_RANK = {name: i for i, name in enumerate(_CANONICAL)}

# Deterministic source of evaluation points for the gcd fast path.
_PROBE_RNG = random.Random(0x5EED)


def var_sort_key(name: str) -> tuple[int, str]:
    return (_CANON_RANK.get(name, len(_CANONICAL)), name)


def canonical_vars(names: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(set(names), key=var_sort_key))


def _grlex_key(exps: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    return (sum(exps), exps)


class MultiPoly:
    """Immutable multivariate polynomial with exact rational coefficients."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple[int, ...], object]):
        nvars = len(variables)
        cleaned: dict[tuple[int, ...], Q] = {}
        for exps, coeff in terms.items():
            if isinstance(coeff, float):
                raise TypeError("coefficients must be exact rationals, not floats")
            c = coeff if isinstance(coeff, Q) else Q(coeff)
            if c == 0:
                continue
            if len(exps) != nvars:
                raise ValueError("exponent vector length does not match variable count")
            cleaned[tuple(exps)] = cleaned.get(tuple(exps), Q(0)) + c
        cleaned = {e: c for e, c in cleaned.items() if c != 0}

        # Drop unused variables, then sort the remainder canonically.
        used = [i for i in range(nvars) if any(e[i] for e in cleaned)]
        names = [variables[i] for i in used]
        order = sorted(range(len(names)), key=lambda k: var_sort_key(names[k]))
        object.__setattr__(self, "vars", tuple(names[k] for k in order))
        remap = {}
        for exps, c in cleaned.items():
            key = tuple(exps[used[k]] for k in order)
            remap[key] = c
        object.__setattr__(self, "terms", remap)

    def __setattr__(self, *_):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "MultiPoly":
        return MultiPoly((), {})

    @staticmethod
    def const(value) -> "MultiPoly":
        return MultiPoly((), {(): Q(value)})

    @staticmethod
    def var(name: str) -> "MultiPoly":
        return MultiPoly((name,), {(1,): Q(1)})

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.vars

    def constant_value(self) -> Q:
        if self.vars:
            raise ValueError("polynomial is not constant")
        return self.terms.get((), Q(0))

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def degree_in(self, var: str) -> int:
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def leading(self) -> tuple[tuple[int, ...], Q]:
        """Leading (exponents, coefficient) under graded lexicographic order."""
        key = max(self.terms, key=_grlex_key)
        return key, self.terms[key]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, _COEFF_TYPES):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_text()})"

    # -- textual form ----------------------------------------------------

    def to_text(self) -> str:
        """Deterministic text form: graded-lex descending, explicit '*'."""
        if not self.terms:
            return "0"
        pieces = []
        for exps in sorted(self.terms, key=_grlex_key, reverse=True):
            coeff = self.terms[exps]
            factors = []
            for name, e in zip(self.vars, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = str(mag) + "*" + "*".join(factors)
            pieces.append(("-" if coeff < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    # -- alignment helpers ---------------------------------------------

    def _aligned(self, other: "MultiPoly"):
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        unified = canonical_vars(self.vars + other.vars)
        return unified, _reindex(self.terms, self.vars, unified), _reindex(other.terms, other.vars, unified)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, _COEFF_TYPES):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        vars_, a, b = self._aligned(other)
        out = dict(a)
        for e, c in b.items():
            out[e] = out.get(e, Q(0)) + c
        return MultiPoly(vars_, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, _COEFF_TYPES):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _COEFF_TYPES):
            c = Q(other)
            if c == 0:
                return MultiPoly.zero()
            return MultiPoly(self.vars, {e: co * c for e, co in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        vars_, a, b = self._aligned(other)
        out: dict[tuple[int, ...], Q] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                key = tuple(i + j for i, j in zip(ea, eb))
                prev = out.get(key)
                out[key] = ca * cb if prev is None else prev + ca * cb
        return MultiPoly(vars_, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __truediv__(self, other):
        from .ratfunc import RatFunc

        if isinstance(other, _COEFF_TYPES):
            c = Q(other)
            if c == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / c)
        if isinstance(other, MultiPoly):
            return RatFunc(self, other)
        return NotImplemented

    # -- evaluation and substitution ---------------------------------------

    def eval_all(self, bindings: Mapping[str, object]) -> Q:
        """Evaluate at a rational point; every variable must be bound."""
        vals = []
        for name in self.vars:
            if name not in bindings:
                raise KeyError(f"unbound variable {name!r}")
            vals.append(Q(bindings[name]))
        total = Q(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for v, e in zip(vals, exps):
                if e:
                    term *= v**e
            total += term
        return total

    def eval_partial(self, bindings: Mapping[str, object]) -> "MultiPoly":
        """Substitute rational values for a subset of the variables."""
        keep = [i for i, name in enumerate(self.vars) if name not in bindings]
        vals = {i: Q(bindings[name]) for i, name in enumerate(self.vars) if name in bindings}
        out: dict[tuple[int, ...], Q] = {}
        for exps, coeff in self.terms.items():
            c = coeff
            for i, v in vals.items():
                if exps[i]:
                    c *= v ** exps[i]
            key = tuple(exps[i] for i in keep)
            out[key] = out.get(key, Q(0)) + c
        return MultiPoly(tuple(self.vars[i] for i in keep), out)

    def subs_poly(self, bindings: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        """Substitute polynomials for variables (pure polynomial composition)."""
        caches: dict[str, list[MultiPoly]] = {}
        for name in self.vars:
            if name in bindings:
                caches[name] = [MultiPoly.const(1)]
        result = MultiPoly.zero()
        for exps, coeff in self.terms.items():
            term = MultiPoly.const(coeff)
            for name, e in zip(self.vars, exps):
                if e == 0:
                    continue
                if name in caches:
                    cache = caches[name]
                    while len(cache) <= e:
                        cache.append(cache[-1] * bindings[name])
                    term = term * cache[e]
                else:
                    term = term * MultiPoly((name,), {(e,): Q(1)})
            result = result + term
        return result

    def rename_vars(self, mapping: Mapping[str, str]) -> "MultiPoly":
        new_names = [mapping.get(n, n) for n in self.vars]
        if len(set(new_names)) != len(new_names):
            raise ValueError("variable rename collides")
        return MultiPoly(tuple(new_names), dict(self.terms))

    # -- calculus ----------------------------------------------------------

    def derivative(self, var: str) -> "MultiPoly":
        if var not in self.vars:
            return MultiPoly.zero()
        i = self.vars.index(var)
        out: dict[tuple[int, ...], Q] = {}
        for exps, coeff in self.terms.items():
            e = exps[i]
            if e == 0:
                continue
            key = exps[:i] + (e - 1,) + exps[i + 1 :]
            out[key] = out.get(key, Q(0)) + coeff * e
        return MultiPoly(self.vars, out)

    # -- views as a univariate polynomial -----------------------------------

    def coeffs_in(self, var: str) -> dict[int, "MultiPoly"]:
        """Coefficients of powers of ``var``, each a polynomial in the rest."""
        if var not in self.vars:
            return {0: self} if self.terms else {}
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1 :]
        buckets: dict[int, dict[tuple[int, ...], Q]] = {}
        for exps, coeff in self.terms.items():
            k = exps[i]
            key = exps[:i] + exps[i + 1 :]
            buckets.setdefault(k, {})[key] = coeff
        return {k: MultiPoly(rest, t) for k, t in buckets.items()}

    def lead_coeff_in(self, var: str) -> "MultiPoly":
        coeffs = self.coeffs_in(var)
        if not coeffs:
            return MultiPoly.zero()
        return coeffs[max(coeffs)]

    # -- normalization -------------------------------------------------------

    def content_unit(self) -> Q:
        """Positive rational c such that self/c has primitive integer
        coefficients; the sign of the graded-lex leading coefficient moves
        into c as well."""
        if not self.terms:
            return Q(1)
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            num_gcd = math.gcd(num_gcd, abs(c.numerator))
            den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
        unit = Q(num_gcd, den_lcm)
        _, lead = self.leading()
        if lead < 0:
            unit = -unit
        return unit

    def normalized(self) -> "MultiPoly":
        """Integer-primitive representative with positive leading coefficient."""
        if not self.terms:
            return self
        return self * (1 / self.content_unit())


def _reindex(terms, old_vars, new_vars):
    pos = [new_vars.index(v) for v in old_vars]
    n = len(new_vars)
    out = {}
    for exps, c in terms.items():
        key = [0] * n
        for p, e in zip(pos, exps):
            key[p] = e
        out[tuple(key)] = c
    return out


def poly_from_var_power(var: str, k: int, coeff=1) -> MultiPoly:
    return MultiPoly((var,), {(k,): Q(coeff)})


def from_coeffs_in(var: str, coeffs: Mapping[int, MultiPoly]) -> MultiPoly:
    total = MultiPoly.zero()
    for k, p in coeffs.items():
        total = total + p * poly_from_var_power(var, k)
    return total


# ---------------------------------------------------------------------------
# kernel operations
# ---------------------------------------------------------------------------


def partial_derivative(p: MultiPoly, var: str) -> MultiPoly:
    """Exact formal derivative; variables absent from p differentiate to 0."""
    return p.derivative(var)


def _det_cofactor(rows: list[list[MultiPoly]]) -> MultiPoly:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = MultiPoly.zero()
    for j in range(n):
        minor = [[row[k] for k in range(n) if k != j] for row in rows[1:]]
        term = rows[0][j] * _det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def det3(rows: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """3x3 determinant by cofactor expansion."""
    if len(rows) != 3 or any(len(r) != 3 for r in rows):
        raise ValueError("det3 expects a 3x3 grid")
    return _det_cofactor([list(r) for r in rows])


def det4(rows: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """4x4 determinant by cofactor expansion."""
    if len(rows) != 4 or any(len(r) != 4 for r in rows):
        raise ValueError("det4 expects a 4x4 grid")
    return _det_cofactor([list(r) for r in rows])


def det_bareiss(rows: list[list[MultiPoly]]) -> MultiPoly:
    """Determinant of a square polynomial matrix by fraction-free elimination."""
    n = len(rows)
    if n == 0:
        return MultiPoly.const(1)
    m = [list(r) for r in rows]
    sign = 1
    prev = MultiPoly.const(1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            pivot_row = None
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    pivot_row = i
                    break
            if pivot_row is None:
                return MultiPoly.zero()
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                q = exact_div(num, prev)
                if q is None:
                    raise ArithmeticError("fraction-free elimination lost exactness")
                m[i][j] = q
            m[i][k] = MultiPoly.zero()
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def sylvester_matrix(p: MultiPoly, q: MultiPoly, var: str) -> list[list[MultiPoly]]:
    m = p.degree_in(var)
    n = q.degree_in(var)
    pc = p.coeffs_in(var)
    qc = q.coeffs_in(var)
    size = m + n
    zero = MultiPoly.zero()
    rows = []
    for shift in range(n):
        row = [zero] * size
        for k in range(m + 1):
            row[shift + k] = pc.get(m - k, zero)
        rows.append(row)
    for shift in range(m):
        row = [zero] * size
        for k in range(n + 1):
            row[shift + k] = qc.get(n - k, zero)
        rows.append(row)
    return rows


def resultant(p: MultiPoly, q: MultiPoly, var: str) -> MultiPoly:
    """Sylvester resultant eliminating ``var``; exact.

    Equals the determinant of the Sylvester matrix with p's coefficient
    rows on top, i.e. lc(p)^deg(q) * prod q(alpha) over the roots of p.
    Swapping the arguments flips the sign when deg(p)*deg(q) is odd;
    some systems use that opposite convention.
    """
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of a zero polynomial")
    m = p.degree_in(var)
    n = q.degree_in(var)
    if m == 0 and n == 0:
        raise ValueError(f"neither argument involves {var!r}")
    if m == 0:
        return p**n
    if n == 0:
        return q**m
    return det_bareiss(sylvester_matrix(p, q, var))


def exact_div(q: MultiPoly, p: MultiPoly) -> Optional[MultiPoly]:
    """Quotient h with q = p*h, or None when p does not divide q exactly."""
    if p.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if q.is_zero():
        return MultiPoly.zero()
    if p.is_constant():
        return q * (1 / p.constant_value())
    if not set(p.vars) <= set(q.vars):
        return None
    vars_, qt, pt = q._aligned(p)
    lead_p = max(pt, key=_grlex_key)
    lc_p = pt[lead_p]
    rem = dict(qt)
    quot: dict[tuple[int, ...], Q] = {}
    while rem:
        lead_r = max(rem, key=_grlex_key)
        diff = tuple(a - b for a, b in zip(lead_r, lead_p))
        if any(d < 0 for d in diff):
            return None
        c = rem[lead_r] / lc_p
        quot[diff] = quot.get(diff, Q(0)) + c
        for e, pc in pt.items():
            key = tuple(a + b for a, b in zip(e, diff))
            val = rem.get(key, Q(0)) - c * pc
            if val == 0:
                rem.pop(key, None)
            else:
                rem[key] = val
    return MultiPoly(vars_, quot)


def divides(p: MultiPoly, q: MultiPoly) -> tuple[bool, Optional[MultiPoly]]:
    """True (with the quotient h, q = p*h) when p divides q exactly."""
    h = exact_div(q, p)
    return (h is not None), h


# -- gcd machinery -----------------------------------------------------------


def _int_coeff_list(p: MultiPoly, var: str) -> list[int]:
    """Dense integer coefficient list (ascending), content removed."""
    coeffs = {k: v.constant_value() for k, v in p.coeffs_in(var).items()}
    deg = max(coeffs)
    den_lcm = 1
    for c in coeffs.values():
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    ints = [0] * (deg + 1)
    for k, c in coeffs.items():
        ints[k] = int(c * den_lcm)
    g = 0
    for v in ints:
        g = math.gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def _gcd_univar(p: MultiPoly, q: MultiPoly, var: str) -> MultiPoly:
    """Primitive-PRS gcd of two univariate polynomials, over integers."""
    if p.is_zero():
        return q.normalized()
    if q.is_zero():
        return p.normalized()
    if p.is_constant() or q.is_constant():
        return MultiPoly.const(1)
    a = _int_coeff_list(p, var)
    b = _int_coeff_list(q, var)
    if len(a) < len(b):
        a, b = b, a

    def strip(v):
        while v and v[-1] == 0:
            v.pop()
        return v

    def primitive(v):
        g = 0
        for c in v:
            g = math.gcd(g, abs(c))
        if g > 1:
            v = [c // g for c in v]
        return v

    while b:
        da, db = len(a) - 1, len(b) - 1
        if da < db:
            a, b = b, a
            continue
        lc = b[-1]
        r = list(a)
        while len(r) - 1 >= db and r:
            dr = len(r) - 1
            cr = r[-1]
            r = [lc * c for c in r]
            shift = dr - db
            for k, c in enumerate(b):
                r[k + shift] -= cr * c
            r = strip(r)
        a, b = b, primitive(strip(r))
    if not a:
        return MultiPoly.zero()
    if len(a) == 1:
        return MultiPoly.const(1)
    out = MultiPoly((var,), {(k,): Q(c) for k, c in enumerate(a)})
    return out.normalized()


def _strip_monomial(p: MultiPoly) -> tuple[tuple[int, ...], MultiPoly]:
    """Split off the largest monomial dividing every term."""
    if not p.terms:
        return (), p
    mins = None
    for e in p.terms:
        mins = list(e) if mins is None else [min(a, b) for a, b in zip(mins, e)]
    if not any(mins):
        return tuple(0 for _ in p.vars), p
    stripped = {tuple(a - b for a, b in zip(e, mins)): c for e, c in p.terms.items()}
    return tuple(mins), MultiPoly(p.vars, stripped)


def _random_point(names, avoid_zero=True):
    point = {}
    for n in names:
        v = _PROBE_RNG.randint(-3559, 3559)
        while avoid_zero and v == 0:
            v = _PROBE_RNG.randint(-3559, 3559)
        point[n] = Q(v)
    return point


def _certified_coprime(p: MultiPoly, q: MultiPoly, common: Sequence[str]) -> bool:
    """Certified test that gcd(p, q) is constant.

    For each shared variable v, evaluate all other variables at a random
    point under which p keeps its v-degree.  Any common divisor g satisfies
    lc_v(g) | lc_v(p), so g keeps its v-degree too; a constant univariate
    gcd then certifies deg_v(gcd) = 0.  Succeeding for every shared
    variable proves the gcd constant.
    """
    for v in common:
        ok = False
        others = [n for n in set(p.vars) | set(q.vars) if n != v]
        for _ in range(4):
            point = _random_point(others)
            lcp = p.lead_coeff_in(v)
            if lcp.eval_all(point) == 0:
                continue
            pu = p.eval_partial(point)
            qu = q.eval_partial(point)
            if pu.is_zero() or qu.is_zero():
                continue
            if pu.is_constant() or qu.is_constant():
                ok = True
                break
            g = _gcd_univar(pu, qu, v)
            if g.is_constant():
                ok = True
                break
        if not ok:
            return False
    return True


def _prem(a: MultiPoly, b: MultiPoly, var: str) -> MultiPoly:
    """Pseudo-remainder of a by b with respect to var."""
    db = b.degree_in(var)
    lcb = b.lead_coeff_in(var)
    r = a
    while not r.is_zero():
        dr = r.degree_in(var)
        if dr < db:
            break
        lcr = r.lead_coeff_in(var)
        r = r * lcb - b * lcr * poly_from_var_power(var, dr - db)
    return r


def _content_wrt(p: MultiPoly, var: str) -> MultiPoly:
    coeffs = list(p.coeffs_in(var).values())
    g = MultiPoly.zero()
    for c in coeffs:
        g = gcd_multi(g, c)
        if g.is_constant() and not g.is_zero():
            return MultiPoly.const(1)
    return g


def _interp_newton(xs: list[int], ys: list[MultiPoly], var: str) -> MultiPoly:
    """Newton interpolation with polynomial values at integer nodes."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) * Q(1, xs[i] - xs[i - j])
    result = MultiPoly.zero()
    basis = MultiPoly.const(1)
    vpoly = MultiPoly.var(var)
    for i in range(n):
        result = result + coef[i] * basis
        if i < n - 1:
            basis = basis * (vpoly - xs[i])
    return result


def _gcd_eval_rec(p: MultiPoly, q: MultiPoly, v: str, others: list[str]) -> Optional[MultiPoly]:
    """gcd of p, q (as polynomials in v over the other variables) by
    evaluation and interpolation.  Returns a polynomial proportional to
    (gamma / lc(G)) * G where gamma = gcd of the leading coefficients, or
    None on failure; the caller strips content and verifies."""
    if not others:
        return _gcd_univar(p, q, v)
    w = others[-1]
    lcp = p.lead_coeff_in(v)
    lcq = q.lead_coeff_in(v)
    gamma = gcd_multi(lcp, lcq)
    bound = gamma.degree_in(w) + min(p.degree_in(w), q.degree_in(w)) + 1
    xs: list[int] = []
    ys: list[MultiPoly] = []
    best: Optional[int] = None
    c = 0
    tried = 0
    while len(xs) < bound and tried < 4 * bound + 24:
        point = c
        c = -c if c > 0 else -c + 1  # 0, 1, -1, 2, -2, ...
        tried += 1
        ev = {w: Q(point)}
        gev = gamma.eval_partial(ev) if w in gamma.vars else gamma
        if gev.is_zero():
            continue
        if (lcp.eval_partial(ev) if w in lcp.vars else lcp).is_zero():
            continue
        if (lcq.eval_partial(ev) if w in lcq.vars else lcq).is_zero():
            continue
        pe = p.eval_partial(ev)
        qe = q.eval_partial(ev)
        ge = gcd_multi(pe, qe)
        dg = ge.degree_in(v)
        if dg == 0:
            return MultiPoly.const(1)
        if best is None or dg < best:
            best = dg
            xs, ys = [], []
        elif dg > best:
            continue
        rho = exact_div(gev, ge.lead_coeff_in(v))
        if rho is None:
            continue
        xs.append(point)
        ys.append(ge * rho)
    if len(xs) < bound:
        return None
    return _interp_newton(xs, ys, w)


def _gcd_eval_primitive(p: MultiPoly, q: MultiPoly, v: str) -> Optional[MultiPoly]:
    """Verified evaluation-interpolation gcd of polynomials primitive in v."""
    others = [n for n in canonical_vars(p.vars + q.vars) if n != v]
    if not others:
        return _gcd_univar(p, q, v)
    h = _gcd_eval_rec(p, q, v, others)
    if h is None or h.is_zero():
        return None
    if h.is_constant():
        return MultiPoly.const(1)
    cont = _content_wrt(h, v)
    h = exact_div(h, cont)
    if h is None:
        return None
    h = h.normalized()
    if exact_div(p, h) is None or exact_div(q, h) is None:
        return None
    return h


def gcd_multi(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """A greatest common divisor, primitive with positive leading coefficient."""
    if p.is_zero():
        return q.normalized()
    if q.is_zero():
        return p.normalized()
    if p.is_constant() or q.is_constant():
        return MultiPoly.const(1)

    mp, p1 = _strip_monomial(p)
    mq, q1 = _strip_monomial(q)
    mono = {}
    for name, e in zip(p.vars, mp):
        if e:
            mono[name] = e
    shared_mono = MultiPoly.const(1)
    for name, e in zip(q.vars, mq):
        if name in mono and e:
            shared_mono = shared_mono * poly_from_var_power(name, min(e, mono[name]))

    common = [v for v in p1.vars if v in q1.vars]
    if not common:
        return shared_mono.normalized()
    if p1.is_constant() or q1.is_constant():
        return shared_mono.normalized()
    if _certified_coprime(p1, q1, common):
        return shared_mono.normalized()

    # Main variable: smallest worst-case degree keeps the PRS short.
    var = min(common, key=lambda v: min(p1.degree_in(v), q1.degree_in(v)))

    cp = _content_wrt(p1, var)
    cq = _content_wrt(q1, var)
    cont = gcd_multi(cp, cq)
    a = exact_div(p1, cp)
    b = exact_div(q1, cq)
    assert a is not None and b is not None
    g = _gcd_eval_primitive(a, b, var)
    if g is None:
        # primitive PRS fallback for cases the evaluation route rejects
        if a.degree_in(var) < b.degree_in(var):
            a, b = b, a
        while not b.is_zero():
            r = _prem(a, b, var)
            a = b
            if r.is_zero():
                b = r
            else:
                rc = _content_wrt(r, var)
                b = exact_div(r, rc)
                assert b is not None
        g = a
    return (shared_mono * cont * g).normalized()


def gcd_many(polys: Iterable[MultiPoly]) -> MultiPoly:
    g = MultiPoly.zero()
    for p in polys:
        g = gcd_multi(g, p)
        if g.is_constant() and not g.is_zero():
            return g
    return g


def squarefree_part(p: MultiPoly) -> MultiPoly:
    """Product of the distinct irreducible factors of p, normalized."""
    if p.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    if p.is_constant():
        return MultiPoly.const(1)
    g = p
    for v in p.vars:
        g = gcd_multi(g, p.derivative(v))
        if g.is_constant():
            return p.normalized()
    h = exact_div(p, g)
    assert h is not None
    return h.normalized()


# -- substitution of rational functions is provided by ratfunc.substitute --


def subresultant_linear(p: MultiPoly, q: MultiPoly, var: str) -> Optional[tuple[MultiPoly, MultiPoly]]:
    """First subresultant S1 = a*var + b of p, q with respect to var.

    S1 is proportional to the common root whenever the gcd of the two
    polynomials specialises to degree exactly one.  Returns None when the
    construction degenerates (for example matching degrees below 1).
    """
    m = p.degree_in(var)
    n = q.degree_in(var)
    if m < n:
        p, q, m, n = q, p, n, m
    if n < 1:
        return None
    if n == 1:
        qc = q.coeffs_in(var)
        return qc.get(1, MultiPoly.zero()), qc.get(0, MultiPoly.zero())
    pc = p.coeffs_in(var)
    qc = q.coeffs_in(var)
    zero = MultiPoly.zero()
    ncols = m + n - 1
    rows = []
    for shift in range(n - 1):
        row = [zero] * ncols
        for k in range(m + 1):
            row[shift + k] = pc.get(m - k, zero)
        rows.append(row)
    for shift in range(m - 1):
        row = [zero] * ncols
        for k in range(n + 1):
            row[shift + k] = qc.get(n - k, zero)
        rows.append(row)
    r = len(rows)  # = ncols - 1
    base = [row[: r - 1] for row in rows]
    a = det_bareiss([base[i] + [rows[i][r - 1]] for i in range(r)])
    b = det_bareiss([base[i] + [rows[i][r]] for i in range(r)])
    return a, b


# -- univariate helpers ------------------------------------------------------


def poly_divmod_univar(p: MultiPoly, q: MultiPoly, var: str) -> tuple[MultiPoly, MultiPoly]:
    """Division with remainder for univariate polynomials over the rationals."""
    if q.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    for poly in (p, q):
        if any(v != var for v in poly.vars):
            raise ValueError("poly_divmod_univar expects univariate input")
    a = {k: v.constant_value() for k, v in p.coeffs_in(var).items()} if not p.is_zero() else {}
    b = {k: v.constant_value() for k, v in q.coeffs_in(var).items()}
    db = max(b) if b else 0
    lc = b[db]
    quo: dict[int, Q] = {}
    while a and max(a) >= db:
        da = max(a)
        c = a[da] / lc
        quo[da - db] = c
        for k, v in b.items():
            key = k + da - db
            nv = a.get(key, Q(0)) - c * v
            if nv == 0:
                a.pop(key, None)
            else:
                a[key] = nv
    to_poly = lambda d: MultiPoly((var,), {(k,): v for k, v in d.items()})
    return to_poly(quo), to_poly(a)


def _univar_fracs(p: MultiPoly, var: str) -> dict[int, Q]:
    return {k: v.constant_value() for k, v in p.coeffs_in(var).items()}


def _eval_univar(coeffs: dict[int, Q], x: Q) -> Q:
    total = Q(0)
    for k, c in coeffs.items():
        total += c * x**k
    return total


def _convergents(value: Q, max_den: int) -> list[Q]:
    """Continued-fraction convergents of a rational value."""
    out = []
    a, b = value.numerator, value.denominator
    h0, h1 = 1, 0
    k0, k1 = 0, 1
    while b:
        q, r = divmod(a, b)
        h0, h1 = q * h0 + h1, h0
        k0, k1 = q * k0 + k1, k0
        if k0 > max_den:
            break
        out.append(Q(h0, k0))
        a, b = b, r
    return out


def rational_roots(p: MultiPoly, var: str, max_den: int = 10**7) -> list[Q]:
    """All rational roots of a univariate polynomial, exactly.

    Real roots are isolated by exact sign changes on a fine grid of
    [-1, 1] for the polynomial and its reversal (covering |root| >= 1);
    candidates come from continued-fraction convergents of the bisected
    approximations and are verified by exact evaluation.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has every root")
    if any(v != var for v in p.vars):
        if p.is_constant():
            return []
        raise ValueError("rational_roots expects univariate input")
    coeffs = _univar_fracs(p, var)
    roots: set[Q] = set()
    low = min(coeffs)
    if low > 0:
        roots.add(Q(0))
        coeffs = {k - low: v for k, v in coeffs.items()}
    # squarefree reduction keeps sign changes at every real root
    poly = MultiPoly((var,), {(k,): v for k, v in coeffs.items()})
    if poly.is_constant():
        return sorted(roots)
    der = poly.derivative(var)
    g = _gcd_univar(poly, der, var)
    if not g.is_constant():
        poly, _ = poly_divmod_univar(poly, g, var)
    coeffs = _univar_fracs(poly, var)

    def direct(x: Q):
        if _eval_univar(coeffs, x) == 0:
            roots.add(x)

    for k in range(-8, 9):
        direct(Q(k))
        if k != 0:
            direct(Q(1, k))

    rev = {max(coeffs) - k: v for k, v in coeffs.items()}

    def scan(cdict, invert):
        steps = 256
        prev_x = Q(-1)
        prev_v = _eval_univar(cdict, prev_x)
        for i in range(1, steps + 1):
            x = Q(-1) + Q(2 * i, steps)
            v = _eval_univar(cdict, x)
            if v == 0:
                if not invert:
                    roots.add(x)
                elif x != 0:
                    roots.add(1 / x)
            elif prev_v != 0 and (v < 0) != (prev_v < 0):
                lo, hi = prev_x, x
                flo = prev_v
                for _ in range(60):
                    mid = (lo + hi) / 2
                    fm = _eval_univar(cdict, mid)
                    if fm == 0:
                        lo = hi = mid
                        break
                    if (fm < 0) == (flo < 0):
                        lo, flo = mid, fm
                    else:
                        hi = mid
                approx = (lo + hi) / 2
                for cand in _convergents(approx, max_den):
                    target = cand if not invert else (1 / cand if cand != 0 else None)
                    if target is not None and _eval_univar(coeffs, target) == 0:
                        roots.add(target)
                        break
            prev_x, prev_v = x, v

    scan(coeffs, invert=False)
    scan(rev, invert=True)
    return sorted(roots)
