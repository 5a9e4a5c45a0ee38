"""Characters (one-dimensional representations) of catalog algebras.

A character factors through the abelianization, so emptiness of the
spectrum is decided by a commutative Groebner basis over the q-rational
scalar field: the spectrum is empty exactly when 1 lies in the
abelianized ideal.  q is transcendental here, so coefficients such as
1 + q are units.
"""

from __future__ import annotations

import os

from .report import Report, timed
from .scalars import S_ONE, S_ZERO, ScalarQ

DEFAULT_DEGREE_CAP = 12


class GroebnerError(Exception):
    pass


class DegreeCapError(GroebnerError):
    """Completion produced a polynomial above the degree cap."""


def _degree_cap(default=DEFAULT_DEGREE_CAP):
    env = os.environ.get("QGAL_DEGREE_CAP")
    return int(env) if env else default


# Polynomials are dicts: exponent tuple -> scalar.  Grevlex throughout.


def grevlex_key(expo):
    return (sum(expo), tuple(-e for e in reversed(expo)))


def leading_monomial(poly):
    return max(poly, key=grevlex_key)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def poly_sub_scaled(p, c, mono, g):
    """p - c * x^mono * g, in place on a fresh dict."""
    out = dict(p)
    for e, v in g.items():
        key = _mono_mul(mono, e)
        s = out.get(key)
        s = -(c * v) if s is None else s - c * v
        if s.is_zero():
            out.pop(key, None)
        else:
            out[key] = s
    return out


def reduce_poly(p, basis):
    """Full remainder of p modulo the basis (every term reduced)."""
    p = dict(p)
    out = {}
    while p:
        lm = leading_monomial(p)
        lc = p[lm]
        hit = None
        for g in basis:
            glm = leading_monomial(g)
            if _divides(glm, lm):
                hit = (g, glm)
                break
        if hit is None:
            out[lm] = lc
            del p[lm]
            continue
        g, glm = hit
        c = lc * g[glm].inv()
        p = poly_sub_scaled(p, c, _mono_div(lm, glm), g)
    return out


def _monic(p):
    lm = leading_monomial(p)
    inv = p[lm].inv()
    return {e: inv * c for e, c in p.items()}


def s_poly(f, g):
    lf, lg = leading_monomial(f), leading_monomial(g)
    l = _mono_lcm(lf, lg)
    a = poly_sub_scaled({}, -S_ONE * f[lf].inv(), _mono_div(l, lf), f)
    b = poly_sub_scaled({}, -S_ONE * g[lg].inv(), _mono_div(l, lg), g)
    out = dict(a)
    for e, v in b.items():
        s = out.get(e, None)
        s = -v if s is None else s - v
        if s.is_zero():
            out.pop(e, None)
        else:
            out[e] = s
    return out


class CommutativePresentation:
    """Commutative polynomial presentation: variable names plus ideal
    generators as exponent-vector polynomials."""

    def __init__(self, variables, ideal_generators):
        self.variables = list(variables)
        self.ideal_generators = [dict(g) for g in ideal_generators if g]

    def __repr__(self):
        return (f"CommutativePresentation({self.variables!r}, "
                f"{len(self.ideal_generators)} generators)")


def groebner(cp: CommutativePresentation, degree_cap: int | None = None):
    """Reduced grevlex Groebner basis by Buchberger completion.

    Raises DegreeCapError when an S-polynomial remainder exceeds the
    degree cap, so runaway user inputs fail loudly instead of spinning.
    """
    cap = degree_cap if degree_cap is not None else _degree_cap()
    basis = []
    for g in cp.ideal_generators:
        r = reduce_poly(g, basis)
        if r:
            basis.append(_monic(r))
    pairs = [(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))]
    while pairs:
        i, j = pairs.pop()
        f, g = basis[i], basis[j]
        lf, lg = leading_monomial(f), leading_monomial(g)
        if _mono_lcm(lf, lg) == _mono_mul(lf, lg):
            continue  # coprime leading monomials reduce to zero
        r = reduce_poly(s_poly(f, g), basis)
        if not r:
            continue
        lm = leading_monomial(r)
        if sum(lm) > cap:
            raise DegreeCapError(
                f"Groebner completion passed degree cap {cap}"
            )
        r = _monic(r)
        # trivial ideal short-circuit
        if lm == tuple(0 for _ in lm):
            return [{lm: S_ONE}]
        basis.append(r)
        pairs.extend((k, len(basis) - 1) for k in range(len(basis) - 1))
    return _reduce_basis(basis)


def _reduce_basis(basis):
    # drop generators whose leading monomial is divisible by another's
    keep = []
    lms = [leading_monomial(g) for g in basis]
    for i, g in enumerate(basis):
        if any(j != i and _divides(lms[j], lms[i])
               and (lms[j] != lms[i] or j < i) for j in range(len(basis))):
            continue
        keep.append(g)
    out = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1 :]
        r = reduce_poly(g, others) if others else g
        if r:
            out.append(_monic(r))
    out.sort(key=lambda g: grevlex_key(leading_monomial(g)))
    return out


def contains_one(basis) -> bool:
    return any(leading_monomial(g) == tuple(0 for _ in leading_monomial(g))
               for g in basis if g)


def spectrum_empty(p, degree_cap: int | None = None) -> bool:
    """True iff the algebra has no characters over the generic-q field."""
    from .presentations import abelianization

    cp = abelianization(p)
    basis = groebner(cp, degree_cap)
    return contains_one(basis)


def spectrum_witness(p):
    """A character as {generator name: scalar}, when one is exhibited.

    For Hopf presentations the counit is the canonical character.  For
    others, tries triangular back-substitution on the reduced basis;
    returns None when no point is enumerated.
    """
    from .presentations import abelianization

    if getattr(p, "hopf", None) is not None:
        point = {p.alphabet.names[i]: c for i, c in p.hopf.counit.items()}
        if _point_kills(abelianization(p), point):
            return point
    cp = abelianization(p)
    basis = groebner(cp)
    if contains_one(basis):
        return None
    point = _back_substitute(cp.variables, basis)
    if point is not None and _point_kills(cp, point):
        return point
    # cheap probes for non-zero-dimensional quotients
    for val in (S_ONE, S_ZERO):
        probe = {v: val for v in cp.variables}
        if _point_kills(cp, probe):
            return probe
    return None


def _point_kills(cp: CommutativePresentation, point):
    vals = [point[v] for v in cp.variables]
    for g in cp.ideal_generators:
        total = S_ZERO
        for expo, c in g.items():
            term = c
            for var, e in enumerate(expo):
                for _ in range(e):
                    term = term * vals[var]
            total = total + term
        if not total.is_zero():
            return False
    return True


def _back_substitute(variables, basis):
    """Solve a triangular system by repeated univariate-linear steps."""
    values = {}
    remaining = list(basis)
    progress = True
    while remaining and progress:
        progress = False
        for g in list(remaining):
            subbed = _substitute(g, values)
            if not subbed:
                remaining.remove(g)
                progress = True
                continue
            vars_left = {v for e in subbed for v, k in enumerate(e) if k}
            if len(vars_left) != 1:
                continue
            (v,) = vars_left
            if max(e[v] for e in subbed) != 1:
                continue
            lin = next(c for e, c in subbed.items() if e[v] == 1)
            const = S_ZERO
            for e, c in subbed.items():
                if e[v] == 0:
                    const = const + c
            values[v] = -(const * lin.inv())
            remaining.remove(g)
            progress = True
    if remaining:
        return None
    n = len(variables)
    return {variables[v]: values.get(v, S_ZERO) for v in range(n)}


def _substitute(g, values):
    out = {}
    for expo, c in g.items():
        term = c
        new_expo = list(expo)
        for v, k in enumerate(expo):
            if k and v in values:
                val = values[v]
                for _ in range(k):
                    term = term * val
                new_expo[v] = 0
        if term.is_zero():
            continue
        key = tuple(new_expo)
        s = out.get(key, S_ZERO) + term
        if s.is_zero():
            out.pop(key, None)
        else:
            out[key] = s
    return out


def spectrum_report(p, degree_cap: int | None = None) -> Report:
    report = Report(f"spectrum({p.name})")
    with timed(report):
        try:
            empty = spectrum_empty(p, degree_cap)
        except DegreeCapError as e:
            report.add_undecided("spectrum emptiness", witness=str(e))
            return report
        if empty:
            report.add("spectrum is empty (1 lies in the abelianized ideal)",
                       True, witness="empty")
        else:
            w = spectrum_witness(p)
            if w is not None:
                desc = ", ".join(f"{k} -> {_fmt(v)}" for k, v in w.items())
                report.add("spectrum is nonempty", True,
                           witness=f"character: {desc}")
            else:
                report.add("spectrum is nonempty", True,
                           witness="nonempty, not enumerated")
    return report


def star_spectrum_note(p, q0: float) -> Report:
    """*-characters form a subset of characters, so emptiness is
    inherited; no independent *-character search happens here."""
    report = Report(f"star-spectrum({p.name})")
    report.params = {"q0": q0}
    with timed(report):
        if getattr(p, "star", None) is None:
            raise GroebnerError(f"{p.name} carries no star structure")
        if abs(q0) < 1e-12 or abs(q0 + 1.0) < 1e-12:
            report.add_undecided(
                "specialization guard", witness=f"q0 = {q0} excluded (generic-q only)")
            return report
        try:
            empty = spectrum_empty(p)
        except DegreeCapError:
            report.add_undecided("*-spectrum: undecided (degree cap)")
            return report
        if empty:
            report.add("*-spectrum empty (inherited)", True,
                       witness="Hom_* is a subset of Hom")
        else:
            w = spectrum_witness(p)
            if w is not None and getattr(p, "hopf", None) is not None:
                report.add("*-spectrum nonempty: the counit is a *-character",
                           True)
            else:
                report.add("algebra spectrum nonempty; *-spectrum not decided",
                           True, witness="no *-search performed")
    return report


def _fmt(c):
    return repr(c)
