"""Catalog of the q-deformed algebras with their Hopf structure, star
structure and coaction data, plus the structural verification operations
(star well-definedness, Hopf axioms, comodule-algebra axioms).

Catalog names: GLq2, GLq2m2, GLqm22, Uq2, Uq2m2, Onp, AuFG.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .characters import CommutativePresentation
from .linalg import mat_inv
from .ncpoly import (
    AlgebraError,
    Alphabet,
    NCPoly,
    StarMap,
    TensorPoly,
    extend_anti,
    extend_to_words,
    parse_expr,
)
from .report import Report, timed
from .rewrite import MonomialOrder, RewriteSystem, build_system, complete
from .scalars import Q, QINV, S_ONE, S_ZERO, ScalarC, ScalarQ


class CatalogError(AlgebraError):
    pass


@dataclass
class Presentation:
    name: str
    alphabet: Alphabet
    relations: list
    rewrite: RewriteSystem
    star: StarMap | None = None
    hopf: "HopfData | None" = None
    meta: dict = field(default_factory=dict)

    def nf(self, poly):
        return self.rewrite.normal_form(poly)

    def ensure_degree(self, d: int):
        """Recomplete the rewrite system so normal forms are certified
        unique for all words of degree <= d."""
        if d > self.rewrite.completion_degree:
            self.rewrite = complete(self.rewrite, d)
        return self

    def parse(self, src) -> NCPoly:
        return parse_expr(src, self.alphabet)

    def gen(self, name) -> NCPoly:
        return self.alphabet.gen(name)


@dataclass
class HopfData:
    delta: dict       # generator index -> TensorPoly (A, A)
    counit: dict      # generator index -> scalar
    antipode: dict    # generator index -> NCPoly


@dataclass
class CoactionData:
    base: Presentation
    total: Presentation
    alpha: dict       # generator index of Z -> TensorPoly (A, Z)


# ---------------------------------------------------------------------------
# extension helpers
# ---------------------------------------------------------------------------


def delta_ext(p: Presentation):
    """Delta extended to words of A, both legs reduced."""
    ext = extend_to_words(p.hopf.delta, (p.alphabet, p.alphabet))

    def fn(word):
        return reduce_legs(ext(word), (p.rewrite, p.rewrite))

    return fn


def alpha_ext(c: CoactionData):
    """Coaction extended to words of Z, both legs reduced."""
    ext = extend_to_words(c.alpha, (c.base.alphabet, c.total.alphabet))

    def fn(word):
        return reduce_legs(ext(word), (c.base.rewrite, c.total.rewrite))

    return fn


def reduce_legs(t: TensorPoly, systems) -> TensorPoly:
    for leg, rs in enumerate(systems):
        if rs is not None:
            t = t.map_leg(leg, lambda w, rs=rs: _word_poly(rs, w))
    return t


def _word_poly(rs: RewriteSystem, word) -> NCPoly:
    return NCPoly(rs.alphabet, dict(rs._nf_word(word)))


def expand_leg(t: TensorPoly, leg, fn, inner_alphabets) -> TensorPoly:
    """Replace one leg by the multi-leg image of each of its words."""
    alphabets = t.alphabets[:leg] + tuple(inner_alphabets) + t.alphabets[leg + 1 :]
    out = {}
    for k, c in t.terms.items():
        img = fn(k[leg])
        for ik, ic in img.terms.items():
            key = k[:leg] + ik + k[leg + 1 :]
            v = out.get(key)
            v = c * ic if v is None else v + c * ic
            if v.is_zero():
                out.pop(key, None)
            else:
                out[key] = v
    return TensorPoly(alphabets, out)


def counit_of_word(h: HopfData):
    def fn(word):
        c = S_ONE
        for letter in word:
            c = c * h.counit[letter]
            if c.is_zero():
                break
        return c

    return fn


# ---------------------------------------------------------------------------
# catalog construction
# ---------------------------------------------------------------------------

_CACHE = {}


def catalog(name, **params):
    """Build (and cache) a catalog presentation by name.

    Returns the Presentation; Hopf data rides on presentation.hopf and
    the associated coaction, when one exists, is available through
    `coaction(name, **params)`.
    """
    key = (name, _freeze(params))
    if key not in _CACHE:
        _CACHE[key] = _build(name, params)
    return _CACHE[key]


def coaction(name, **params) -> CoactionData:
    """Coaction data for the extensions in the catalog."""
    if name == "GLq2m2":
        return _coaction_glq_family(catalog("GLq2"), catalog("GLq2m2"))
    if name == "Uq2m2":
        return _coaction_glq_family(catalog("Uq2"), catalog("Uq2m2"))
    if name == "AuFG":
        F = params.get("F") or matrix_fq(1)
        G = params.get("G") or matrix_fq(-1)
        base = catalog("AuFG", F=F, G=F)
        total = catalog("AuFG", F=F, G=G)
        return _coaction_aufg(base, total)
    raise CatalogError(f"no coaction data for {name!r}")


def _freeze(params):
    out = []
    for k in sorted(params):
        v = params[k]
        if isinstance(v, list):
            v = tuple(tuple(_to_scalar(x) for x in row) for row in v)
        out.append((k, v))
    return tuple(out)


def _to_scalar(x):
    if isinstance(x, (ScalarQ, ScalarC)):
        return x
    return ScalarQ.from_fraction(Fraction(x))


def _build(name, params):
    if name == "GLq2":
        return _build_glq2(star=False)
    if name == "Uq2":
        return _build_glq2(star=True)
    if name == "GLq2m2":
        return _build_glq2m2(star=False)
    if name == "Uq2m2":
        return _build_glq2m2(star=True)
    if name == "GLqm22":
        return _build_glqm22()
    if name == "Onp":
        return _build_onp(int(params["n"]), int(params["p"]))
    if name == "AuFG":
        F = params.get("F") or matrix_fq(1)
        G = params.get("G") or matrix_fq(-1)
        return _build_aufg(F, G)
    raise CatalogError(f"unknown catalog name {name!r}")


def matrix_fq(sign=1):
    """The 3x3 twist matrix with q replaced by sign*q."""
    qq = Q if sign > 0 else -Q
    z, o = S_ZERO, S_ONE
    return [[z, o, z], [-qq, z, z], [z, z, o]]


def _finish(name, alphabet, relations, order, star=None, hopf=None,
            completion_degree=4, relations_from_rules=False):
    rs = build_system(alphabet, relations, order,
                      completion_degree=completion_degree)
    rs = complete(rs, completion_degree)
    for rel in relations:
        if not rs.normal_form(rel).is_zero():
            raise CatalogError(f"{name}: defining relation does not reduce to 0")
    # snapshot of the confluent rule set at build time; later degree
    # escalation may grow the live rule list, this one stays fixed
    snapshot = [rule.as_poly(alphabet) for rule in rs.rules]
    rels = snapshot if relations_from_rules else list(relations)
    pres = Presentation(name, alphabet, rels, rs, star=star, hopf=hopf)
    pres.meta["rule_relations"] = snapshot
    return pres


def _build_glq2(star: bool):
    A = Alphabet(["x11", "x12", "x21", "x22", "t"])
    P = lambda s: parse_expr(s, A)
    relations = [
        P("x12*x11 - q*x11*x12"),
        P("x21*x11 - q*x11*x21"),
        P("x22*x12 - q*x12*x22"),
        P("x22*x21 - q*x21*x22"),
        P("x12*x21 - x21*x12"),
        P("x11*x22 - x22*x11 - (q^-1 - q)*x12*x21"),
        P("x11*t - t*x11"),
        P("x22*t - t*x22"),
        P("x12*t - t*x12"),
        P("x21*t - t*x21"),
        P("(x11*x22 - q^-1*x12*x21)*t - 1"),
    ]
    smap = None
    if star:
        smap = StarMap(A, {
            A.index["x11"]: P("x22*t"),
            A.index["x12"]: P("-q^-1*x21*t"),
            A.index["x21"]: P("-q*x12*t"),
            A.index["x22"]: P("x11*t"),
            A.index["t"]: P("x11*x22 - q^-1*x12*x21"),
        })
    idx = A.index
    one = S_ONE
    zero = S_ZERO
    delta = {}
    for i in (1, 2):
        for j in (1, 2):
            g = lambda a, b: A.gen(f"x{a}{b}")
            delta[idx[f"x{i}{j}"]] = (
                TensorPoly.of(g(i, 1), g(1, j)) + TensorPoly.of(g(i, 2), g(2, j))
            )
    delta[idx["t"]] = TensorPoly.of(A.gen("t"), A.gen("t"))
    counit = {
        idx["x11"]: one, idx["x12"]: zero, idx["x21"]: zero, idx["x22"]: one,
        idx["t"]: one,
    }
    antipode = {
        idx["x11"]: P("x22*t"),
        idx["x12"]: P("-q*x12*t"),
        idx["x21"]: P("-q^-1*x21*t"),
        idx["x22"]: P("x11*t"),
        idx["t"]: P("x11*x22 - q^-1*x12*x21"),
    }
    hopf = HopfData(delta, counit, antipode)
    return _finish("Uq2" if star else "GLq2", A, relations, MonomialOrder(A),
                   star=smap, hopf=hopf, relations_from_rules=True)


def _build_glq2m2(star: bool):
    # tau first so tau is smallest: z_ij * tau rewrites toward tau-left words
    A = Alphabet(["tau", "z11", "z12", "z21", "z22"])
    P = lambda s: parse_expr(s, A)
    relations = [
        P("z12*z11 + q*z11*z12"),
        P("z21*z11 - q*z11*z21"),
        P("z22*z12 - q*z12*z22"),
        P("z22*z21 + q*z21*z22"),
        P("z12*z21 + z21*z12"),
        P("z11*z22 + z22*z11 - (q - q^-1)*z12*z21"),
        P("z11*tau + tau*z11"),
        P("z22*tau + tau*z22"),
        P("z12*tau + tau*z12"),
        P("z21*tau + tau*z21"),
        P("(z11*z22 + q^-1*z12*z21)*tau - 1"),
    ]
    smap = None
    if star:
        smap = StarMap(A, {
            A.index["z11"]: P("z22*tau"),
            A.index["z12"]: P("q^-1*z21*tau"),
            A.index["z21"]: P("q*tau*z12"),
            A.index["z22"]: P("tau*z11"),
            A.index["tau"]: P("z11*z22 + q^-1*z12*z21"),
        })
    return _finish("Uq2m2" if star else "GLq2m2", A, relations,
                   MonomialOrder(A), star=smap, relations_from_rules=True)


def _build_glqm22():
    A = Alphabet(["xi", "t11", "t12", "t21", "t22"])
    P = lambda s: parse_expr(s, A)
    relations = [
        P("t12*t11 - q*t11*t12"),
        P("t21*t11 + q*t11*t21"),
        P("t22*t12 + q*t12*t22"),
        P("t22*t21 - q*t21*t22"),
        P("t12*t21 + t21*t12"),
        P("t11*t22 + t22*t11 - (q^-1 - q)*t12*t21"),
        P("t11*xi + xi*t11"),
        P("t12*xi + xi*t12"),
        P("t21*xi + xi*t21"),
        P("t22*xi + xi*t22"),
        P("(t11*t22 - q^-1*t12*t21)*xi - 1"),
    ]
    return _finish("GLqm22", A, relations, MonomialOrder(A),
                   relations_from_rules=True)


def _coaction_glq_family(base: Presentation, total: Presentation) -> CoactionData:
    alpha = {}
    Ai, Zi = base.alphabet, total.alphabet
    for i in (1, 2):
        for j in (1, 2):
            alpha[Zi.index[f"z{i}{j}"]] = (
                TensorPoly.of(Ai.gen(f"x{i}1"), Zi.gen(f"z1{j}"))
                + TensorPoly.of(Ai.gen(f"x{i}2"), Zi.gen(f"z2{j}"))
            )
    alpha[Zi.index["tau"]] = TensorPoly.of(Ai.gen("t"), Zi.gen("tau"))
    return CoactionData(base, total, alpha)


def _star_alphabet(prefix, n, p):
    names = [f"{prefix}{i}{j}" for i in range(1, n + 1) for j in range(1, p + 1)]
    names += [f"{prefix}{i}{j}s" for i in range(1, n + 1) for j in range(1, p + 1)]
    return Alphabet(names)


def _unitary_relations(alphabet, mat, mat_star_t, n, p):
    """Relations saying mat (n x p, entries NCPoly) is unitary:
    mat mat* = I_n and mat* mat = I_p, with mat* = conjugate transpose."""
    rels = []
    one = NCPoly.one(alphabet)
    for i in range(n):
        for j in range(n):
            s = NCPoly.zero(alphabet)
            for k in range(p):
                s = s + mat[i][k] * mat_star_t[k][j]
            if i == j:
                s = s - one
            rels.append(s)
    for i in range(p):
        for j in range(p):
            s = NCPoly.zero(alphabet)
            for k in range(n):
                s = s + mat_star_t[i][k] * mat[k][j]
            if i == j:
                s = s - one
            rels.append(s)
    return rels


def _build_onp(n, p):
    if n < 1 or p < 1:
        raise CatalogError("Onp requires n, p >= 1")
    A = _star_alphabet("a", n, p)
    star_images = {}
    for i in range(1, n + 1):
        for j in range(1, p + 1):
            star_images[A.index[f"a{i}{j}"]] = A.gen(f"a{i}{j}s")
            star_images[A.index[f"a{i}{j}s"]] = A.gen(f"a{i}{j}")
    smap = StarMap(A, star_images)
    a = [[A.gen(f"a{i}{j}") for j in range(1, p + 1)] for i in range(1, n + 1)]
    a_star_t = [[A.gen(f"a{i}{j}s") for i in range(1, n + 1)] for j in range(1, p + 1)]
    relations = _unitary_relations(A, a, a_star_t, n, p)
    return _finish(f"Onp({n},{p})", A, relations, MonomialOrder(A), star=smap,
                   completion_degree=3)


def _build_aufg(F, G):
    F = [[_to_scalar(x) for x in row] for row in F]
    G = [[_to_scalar(x) for x in row] for row in G]
    n, p = len(F), len(G)
    Finv = mat_inv(F)   # also validates invertibility
    Ginv = mat_inv(G)
    A = _star_alphabet("z", n, p)
    star_images = {}
    for i in range(1, n + 1):
        for j in range(1, p + 1):
            star_images[A.index[f"z{i}{j}"]] = A.gen(f"z{i}{j}s")
            star_images[A.index[f"z{i}{j}s"]] = A.gen(f"z{i}{j}")
    smap = StarMap(A, star_images)
    z = [[A.gen(f"z{i}{j}") for j in range(1, p + 1)] for i in range(1, n + 1)]
    z_star_t = [[A.gen(f"z{i}{j}s") for i in range(1, n + 1)] for j in range(1, p + 1)]
    relations = _unitary_relations(A, z, z_star_t, n, p)
    # F zbar G^-1 unitary; zbar is the entrywise star (no transpose)
    zbar = [[A.gen(f"z{i}{j}s") for j in range(1, p + 1)] for i in range(1, n + 1)]
    B = _scalar_sandwich(F, zbar, Ginv)
    Bst = [[smap.apply(B[j][i]) for j in range(n)] for i in range(p)]
    relations += _unitary_relations(A, B, Bst, n, p)
    hopf = None
    if F == G:
        hopf = _auf_hopf(A, F, Finv, smap, n)
    name = "AuF" if F == G else "AuFG"
    pres = _finish(name, A, relations, MonomialOrder(A), star=smap, hopf=hopf,
                   completion_degree=3)
    pres.meta["FG"] = (F, G)
    return pres


def _scalar_sandwich(F, mat, Ginv):
    """F * mat * Ginv with scalar matrices F, Ginv and NCPoly mat."""
    n, p = len(F), len(Ginv)
    inner = len(mat)
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            s = None
            for k in range(inner):
                for l in range(len(mat[0])):
                    term = mat[k][l].scale(F[i][k] * Ginv[l][j])
                    s = term if s is None else s + term
            row.append(s)
        out.append(row)
    return out


def _auf_hopf(A: Alphabet, F, Finv, smap: StarMap, n):
    idx = A.index
    delta, counit, antipode = {}, {}, {}
    one, zero = S_ONE, S_ZERO
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            d = None
            ds = None
            for k in range(1, n + 1):
                t = TensorPoly.of(A.gen(f"z{i}{k}"), A.gen(f"z{k}{j}"))
                ts = TensorPoly.of(A.gen(f"z{i}{k}s"), A.gen(f"z{k}{j}s"))
                d = t if d is None else d + t
                ds = ts if ds is None else ds + ts
            delta[idx[f"z{i}{j}"]] = d
            delta[idx[f"z{i}{j}s"]] = ds
            counit[idx[f"z{i}{j}"]] = one if i == j else zero
            counit[idx[f"z{i}{j}s"]] = one if i == j else zero
            antipode[idx[f"z{i}{j}"]] = A.gen(f"z{j}{i}s")
    # S(zbar) = F^-1 (F zbar F^-1)^* F, the inverse of the conjugate matrix
    zbar = [[A.gen(f"z{i}{j}s") for j in range(1, n + 1)] for i in range(1, n + 1)]
    B = _scalar_sandwich(F, zbar, Finv)
    Bst = [[smap.apply(B[j][i]) for j in range(n)] for i in range(n)]
    S_zbar = _scalar_sandwich(Finv, Bst, F)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            antipode[idx[f"z{i}{j}s"]] = S_zbar[i - 1][j - 1]
    return HopfData(delta, counit, antipode)


def _coaction_aufg(base: Presentation, total: Presentation) -> CoactionData:
    Ai, Zi = base.alphabet, total.alphabet
    n = max(int(nm[1]) for nm in Ai.names if not nm.endswith("s"))
    p = max(int(nm[2]) for nm in Zi.names if not nm.endswith("s"))
    alpha = {}
    for i in range(1, n + 1):
        for j in range(1, p + 1):
            d = None
            ds = None
            for k in range(1, n + 1):
                t = TensorPoly.of(Ai.gen(f"z{i}{k}"), Zi.gen(f"z{k}{j}"))
                ts = TensorPoly.of(Ai.gen(f"z{i}{k}s"), Zi.gen(f"z{k}{j}s"))
                d = t if d is None else d + t
                ds = ts if ds is None else ds + ts
            alpha[Zi.index[f"z{i}{j}"]] = d
            alpha[Zi.index[f"z{i}{j}s"]] = ds
    return CoactionData(base, total, alpha)


# ---------------------------------------------------------------------------
# verification operations
# ---------------------------------------------------------------------------


def verify_star(p: Presentation) -> Report:
    """Star well-definedness: starred relations vanish modulo the ideal,
    and star is involutive on every generator.

    The checked relation set is the completed rule list, which generates
    the same ideal as the input relations and reduces each of them to 0.
    """
    if p.star is None:
        raise CatalogError(f"{p.name} carries no star structure")
    report = Report(f"star({p.name})")
    with timed(report):
        checked = p.meta.get("rule_relations") or [
            rule.as_poly(p.alphabet) for rule in p.rewrite.rules]
        for k, rel in enumerate(checked):
            img = p.nf(p.star.apply(rel))
            report.add(f"star(relation {k + 1}) reduces to 0", img.is_zero(),
                       witness=img.pretty() if not img.is_zero() else "")
        for i, name in enumerate(p.alphabet.names):
            g = p.alphabet.gen(name)
            back = p.nf(p.star.apply(p.star.apply(g)) - g)
            report.add(f"star involutive on {name}", back.is_zero(),
                       witness=back.pretty() if not back.is_zero() else "")
    return report


def verify_hopf(p: Presentation, h: HopfData | None = None) -> Report:
    h = h or p.hopf
    if h is None:
        raise CatalogError(f"{p.name} carries no Hopf data")
    report = Report(f"hopf({p.name})")
    A = p.alphabet
    rs = p.rewrite
    with timed(report):
        dext_raw = extend_to_words(h.delta, (A, A))
        dext = lambda w: reduce_legs(dext_raw(w), (rs, rs))
        eps = counit_of_word(h)
        sext = extend_anti(h.antipode, A)
        for rel in p.relations:
            t = _apply_tensor_map(rel, dext, (A, A))
            report.add("Delta kills relation " + _short(rel), t.is_zero(),
                       witness=t.pretty() if not t.is_zero() else "")
            c = _apply_scalar_map(rel, eps)
            report.add("epsilon kills relation " + _short(rel), c.is_zero())
        for gi, name in enumerate(A.names):
            d = h.delta[gi]
            left = expand_leg(d, 0, dext, (A, A))
            right = expand_leg(d, 1, dext, (A, A))
            left = reduce_legs(left, (rs, rs, rs))
            right = reduce_legs(right, (rs, rs, rs))
            report.add(f"coassociativity on {name}", left == right)
            ce_l = d.collapse_leg(0, lambda w: eps(w))
            ce_r = d.collapse_leg(1, lambda w: eps(w))
            g_nf = rs.normal_form(A.gen(name))
            lhs = rs.normal_form(_tensor1_to_poly(ce_l, A))
            rhs = rs.normal_form(_tensor1_to_poly(ce_r, A))
            report.add(f"counit law on {name}", lhs == g_nf and rhs == g_nf)
            m_s1 = NCPoly.zero(A)
            m_1s = NCPoly.zero(A)
            for (w1, w2), c in d.terms.items():
                m_s1 = m_s1 + (sext(w1) * NCPoly(A, {w2: S_ONE})).scale(c)
                m_1s = m_1s + (NCPoly(A, {w1: S_ONE}) * sext(w2)).scale(c)
            target = NCPoly.scalar(A, h.counit[gi])
            ok = rs.normal_form(m_s1 - target).is_zero() and \
                rs.normal_form(m_1s - target).is_zero()
            report.add(f"antipode law on {name}", ok)
    return report


def verify_coaction(c: CoactionData) -> Report:
    report = Report(f"coaction({c.total.name} over {c.base.name})")
    A, Z = c.base.alphabet, c.total.alphabet
    rsA, rsZ = c.base.rewrite, c.total.rewrite
    with timed(report):
        aext_raw = extend_to_words(c.alpha, (A, Z))
        aext = lambda w: reduce_legs(aext_raw(w), (rsA, rsZ))
        for rel in c.total.relations:
            t = _apply_tensor_map(rel, aext, (A, Z))
            report.add("alpha kills relation " + _short(rel), t.is_zero(),
                       witness=t.pretty() if not t.is_zero() else "")
        if c.base.hopf is None:
            report.add_undecided("coassociativity (base has no Hopf data)")
        else:
            dext_raw = extend_to_words(c.base.hopf.delta, (A, A))
            dext = lambda w: reduce_legs(dext_raw(w), (rsA, rsA))
            eps = counit_of_word(c.base.hopf)
            for gi, name in enumerate(Z.names):
                a = c.alpha[gi]
                left = reduce_legs(expand_leg(a, 0, dext, (A, A)), (rsA, rsA, rsZ))
                right = reduce_legs(expand_leg(a, 1, aext, (A, Z)), (rsA, rsA, rsZ))
                report.add(f"coassociativity on {name}", left == right)
                ce = a.collapse_leg(0, lambda w: eps(w))
                lhs = rsZ.normal_form(_tensor1_to_poly(ce, Z))
                report.add(f"counit law on {name}",
                           lhs == rsZ.normal_form(Z.gen(name)))
        if c.base.star is not None and c.total.star is not None:
            for gi, name in enumerate(Z.names):
                lhs = _apply_tensor_map(c.total.star.apply(Z.gen(name)), aext, (A, Z))
                rhs = c.alpha[gi].map_leg(0, lambda w: c.base.star.apply(
                    NCPoly(A, {w: S_ONE})))
                rhs = rhs.map_leg(1, lambda w: c.total.star.apply(
                    NCPoly(Z, {w: S_ONE})))
                rhs = reduce_legs(rhs, (rsA, rsZ))
                report.add(f"alpha is a *-map on {name}", lhs == rhs)
    return report


def _apply_tensor_map(poly: NCPoly, ext, alphabets) -> TensorPoly:
    out = TensorPoly(alphabets)
    for w, c in poly.terms.items():
        out = out + ext(w).scale(c)
    return out


def _apply_scalar_map(poly: NCPoly, eps):
    c_total = S_ZERO
    for w, c in poly.terms.items():
        c_total = c_total + c * eps(w)
    return c_total


def _tensor1_to_poly(t: TensorPoly, alphabet) -> NCPoly:
    return NCPoly(alphabet, {k[0]: c for k, c in t.terms.items()})


def _short(poly: NCPoly, limit=40) -> str:
    s = poly.pretty()
    return s if len(s) <= limit else s[: limit - 3] + "..."


def findim_rep_obstruction(n: int, p: int) -> bool:
    """Whether a finite-dimensional *-representation of the universal
    unitary (n,p)-matrix algebra can exist.

    On a d-dimensional space, tr(aa*) = tr(a*a) forces n*d = p*d, so the
    answer is simply n == p.
    """
    if n < 1 or p < 1:
        raise CatalogError("n, p must be >= 1")
    return n == p


def abelianization(p: Presentation) -> CommutativePresentation:
    """Commutative image: same variables, relation words become sorted
    exponent vectors (characters of the algebra factor through this)."""
    nvars = len(p.alphabet)
    gens = []
    for rel in p.relations:
        poly = {}
        for word, c in rel.terms.items():
            expo = [0] * nvars
            for letter in word:
                expo[letter] += 1
            key = tuple(expo)
            v = poly.get(key, S_ZERO) + c
            if v.is_zero():
                poly.pop(key, None)
            else:
                poly[key] = v
        if poly:
            gens.append(poly)
    return CommutativePresentation(list(p.alphabet.names), gens)


# ---------------------------------------------------------------------------
# presentation / coaction file DSL
# ---------------------------------------------------------------------------


def parse_presentation_text(text: str, completion_degree: int = 3) -> Presentation:
    """Parse the presentation DSL:

        algebra NAME
        generators g1 g2 ...
        order g1 < g2 < ...           (optional; defaults to listed order)
        star g -> expr                (optional, one per generator)
        relation expr                 (one per line; expr = 0)
    """
    name = None
    gen_names = None
    order_names = None
    star_lines = []
    relation_srcs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "algebra":
            name = rest
        elif head == "generators":
            gen_names = rest.split()
        elif head == "order":
            order_names = [t.strip() for t in rest.split("<")]
        elif head == "star":
            gname, _, expr = rest.partition("->")
            star_lines.append((lineno, gname.strip(), expr.strip()))
        elif head == "relation":
            relation_srcs.append((lineno, rest))
        else:
            raise CatalogError(f"line {lineno}: unknown directive {head!r}")
    if not name or not gen_names:
        raise CatalogError("presentation file needs 'algebra' and 'generators'")
    A = Alphabet(gen_names)
    if order_names:
        if sorted(order_names) != sorted(gen_names):
            raise CatalogError("order line must list every generator once")
        order = MonomialOrder(A, [A.index[n] for n in order_names])
    else:
        order = MonomialOrder(A)
    relations = [parse_expr(src, A) for _, src in relation_srcs]
    smap = None
    if star_lines:
        images = {}
        for lineno, gname, expr in star_lines:
            if gname not in A.index:
                raise CatalogError(f"line {lineno}: unknown generator {gname!r}")
            images[A.index[gname]] = parse_expr(expr, A)
        smap = StarMap(A, images)
    return _finish(name, A, relations, order, star=smap,
                   completion_degree=completion_degree)


def parse_coaction_text(text: str, resolve) -> CoactionData:
    """Parse the coaction DSL:

        coaction ZNAME over ANAME
        alpha g -> exprA (x) exprZ + exprA (x) exprZ ...

    `resolve` maps a name to a Presentation (catalog or parsed file).
    """
    total = base = None
    alpha_lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "coaction":
            zname, _, aname = rest.partition(" over ")
            total = resolve(zname.strip())
            base = resolve(aname.strip())
        elif head == "alpha":
            gname, _, expr = rest.partition("->")
            alpha_lines.append((lineno, gname.strip(), expr.strip()))
        else:
            raise CatalogError(f"line {lineno}: unknown directive {head!r}")
    if total is None or base is None:
        raise CatalogError("coaction file needs a 'coaction Z over A' line")
    alpha = {}
    for lineno, gname, expr in alpha_lines:
        if gname not in total.alphabet.index:
            raise CatalogError(f"line {lineno}: unknown generator {gname!r}")
        alpha[total.alphabet.index[gname]] = _parse_tensor_sum(
            expr, base.alphabet, total.alphabet)
    missing = [n for n in total.alphabet.names
               if total.alphabet.index[n] not in alpha]
    if missing:
        raise CatalogError(f"alpha missing for generators: {missing}")
    return CoactionData(base, total, alpha)


def _parse_tensor_sum(src, alph1, alph2) -> TensorPoly:
    out = TensorPoly((alph1, alph2))
    for sign, summand in _split_top_level(src):
        left, sep, right = summand.partition("(x)")
        if not sep:
            raise CatalogError(f"tensor summand without '(x)': {summand!r}")
        t = TensorPoly.of(parse_expr(left.strip(), alph1),
                          parse_expr(right.strip(), alph2))
        out = out + t if sign > 0 else out - t
    return out


def _split_top_level(src):
    """Split 'a (x) b + c (x) d - ...' into signed summands at depth 0."""
    parts = []
    depth = 0
    current = []
    sign = 1
    for ch in src:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and current and current[-1] not in "*^(/+-":
            parts.append((sign, "".join(current)))
            sign = 1 if ch == "+" else -1
            current = []
        else:
            current.append(ch)
    if "".join(current).strip():
        parts.append((sign, "".join(current)))
    return parts
