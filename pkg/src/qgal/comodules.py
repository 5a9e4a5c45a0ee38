"""Finite-dimensional corepresentations of a Hopf presentation.

A comodule is carried purely by its corepresentation matrix: an n x n
array of algebra elements v_ij with Delta(v_ij) = sum_k v_ik (x) v_kj
and epsilon(v_ij) = delta_ij modulo relations.  Conjugates, tensor
products, unitarity data and exact duality (snake) maps live here.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .linalg import LinearSolveError, mat_inv
from .ncpoly import AlgebraError, NCPoly, TensorPoly
from .presentations import (
    CatalogError,
    Presentation,
    counit_of_word,
    delta_ext,
    reduce_legs,
)
from .report import Report, timed
from .scalars import Q, S_ONE, S_ZERO, ScalarC, ScalarQ


class ComoduleError(AlgebraError):
    pass


class NonPositiveGramError(ComoduleError):
    pass


@dataclass
class Corep:
    pres: Presentation
    matrix: list  # n x n nested list of NCPoly, kept in normal form

    def __post_init__(self):
        self.matrix = [[self.pres.nf(e) for e in row] for row in self.matrix]

    @property
    def dim(self):
        return len(self.matrix)


def trivial(p: Presentation) -> Corep:
    return Corep(p, [[NCPoly.one(p.alphabet)]])


def one_dim(p: Presentation, poly: NCPoly) -> Corep:
    return Corep(p, [[poly]])


def fundamental(p: Presentation) -> Corep:
    """The generator block v_ij read off the naming scheme: the largest
    family of generators named <prefix><i><j> forming a square matrix."""
    groups = {}
    for name in p.alphabet.names:
        m = re.fullmatch(r"([a-z]+)([1-9])([1-9])", name)
        if m:
            groups.setdefault(m.group(1), {})[
                (int(m.group(2)), int(m.group(3)))
            ] = name
    best = None
    for prefix, cells in groups.items():
        n = max(i for i, _ in cells)
        if all((i, j) in cells for i in range(1, n + 1) for j in range(1, n + 1)):
            if best is None or n > best[0]:
                best = (n, prefix, cells)
    if best is None:
        raise ComoduleError(f"{p.name}: no square generator block found")
    n, _, cells = best
    return Corep(p, [[p.gen(cells[(i, j)]) for j in range(1, n + 1)]
                     for i in range(1, n + 1)])


def conjugate(v: Corep) -> Corep:
    if v.pres.star is None:
        raise ComoduleError(f"{v.pres.name} carries no star structure")
    star = v.pres.star
    return Corep(v.pres, [[star.apply(e) for e in row] for row in v.matrix])


def tensor(v: Corep, w: Corep) -> Corep:
    if v.pres is not w.pres and v.pres.name != w.pres.name:
        raise ComoduleError("tensor factors live over different presentations")
    n, m = v.dim, w.dim
    out = []
    for i in range(n):
        for j in range(m):
            row = []
            for k in range(n):
                for l in range(m):
                    row.append(v.matrix[i][k] * w.matrix[j][l])
            out.append(row)
    return Corep(v.pres, out)


def verify_corep(v: Corep) -> Report:
    """The two matrix comodule axioms modulo relations."""
    p = v.pres
    if p.hopf is None:
        raise ComoduleError(f"{p.name} carries no Hopf data")
    report = Report(f"corep({p.name}, dim {v.dim})")
    with timed(report):
        dext = delta_ext(p)
        eps = counit_of_word(p.hopf)
        n = v.dim
        for i in range(n):
            for j in range(n):
                lhs = TensorPoly((p.alphabet, p.alphabet))
                for w, c in v.matrix[i][j].terms.items():
                    lhs = lhs + dext(w).scale(c)
                rhs = TensorPoly((p.alphabet, p.alphabet))
                for k in range(n):
                    rhs = rhs + TensorPoly.of(v.matrix[i][k], v.matrix[k][j])
                rhs = reduce_legs(rhs, (p.rewrite, p.rewrite))
                report.add(f"coassociativity entry ({i + 1},{j + 1})",
                           lhs == rhs,
                           witness=(lhs - rhs).pretty()[:120] if lhs != rhs else "")
                val = S_ZERO
                for w, c in v.matrix[i][j].terms.items():
                    val = val + c * eps(w)
                want = S_ONE if i == j else S_ZERO
                report.add(f"counit entry ({i + 1},{j + 1})", val == want)
    return report


def unitarity_conjugator(v: Corep, F) -> Report:
    """Whether w = F vbar F^-1 is unitary modulo relations."""
    p = v.pres
    if p.star is None:
        raise ComoduleError(f"{p.name} carries no star structure")
    F = [[_scal(x) for x in row] for row in F]
    Finv = mat_inv(F)  # raises LinearSolveError when F is singular
    vbar = conjugate(v).matrix
    n = v.dim
    w = _sandwich(F, vbar, Finv)
    wst = [[p.nf(p.star.apply(w[j][i])) for j in range(n)] for i in range(n)]
    report = Report(f"unitarity-conjugator({p.name}, dim {n})")
    with timed(report):
        _unitary_items(report, p, w, wst, n)
    return report


def _unitary_items(report, p, w, wst, n, label=""):
    one = NCPoly.one(p.alphabet)
    for i in range(n):
        for j in range(n):
            s = NCPoly.zero(p.alphabet)
            for k in range(n):
                s = s + w[i][k] * wst[k][j]
            s = p.nf(s - (one if i == j else NCPoly.zero(p.alphabet)))
            report.add(f"{label}(w w*)_{i + 1}{j + 1} = delta", s.is_zero(),
                       witness=s.pretty()[:120] if not s.is_zero() else "")
            s = NCPoly.zero(p.alphabet)
            for k in range(n):
                s = s + wst[i][k] * w[k][j]
            s = p.nf(s - (one if i == j else NCPoly.zero(p.alphabet)))
            report.add(f"{label}(w* w)_{i + 1}{j + 1} = delta", s.is_zero(),
                       witness=s.pretty()[:120] if not s.is_zero() else "")


def _sandwich(F, mat, Ginv):
    n = len(F)
    p = len(Ginv)
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            s = None
            for k in range(len(mat)):
                for l in range(len(mat[0])):
                    term = mat[k][l].scale(F[i][k] * Ginv[l][j])
                    s = term if s is None else s + term
            row.append(s)
        out.append(row)
    return out


def _scal(x):
    if isinstance(x, (ScalarQ, ScalarC)):
        return x
    return ScalarQ.from_fraction(x)


@dataclass
class UnitaryStructure:
    corep: Corep
    gram: list  # n x n scalar matrix, conjugate-symmetric and invertible


def verify_unitary_structure(u: UnitaryStructure,
                             q_samples=(0.5, 0.9, 2.0)) -> Report:
    """Conjugate symmetry, invertibility, comodule invariance of the
    scalar product, and numerical positivity at sample q."""
    v, g = u.corep, u.gram
    p = v.pres
    n = v.dim
    report = Report(f"unitary-structure({p.name}, dim {n})")
    with timed(report):
        sym = all(g[i][j] == g[j][i].conj() for i in range(n) for j in range(n))
        report.add("gram is conjugate-symmetric", sym)
        try:
            mat_inv([list(r) for r in g])
            report.add("gram is invertible", True)
        except LinearSolveError:
            report.add("gram is invertible", False)
        if p.star is None:
            report.add_undecided("invariance (no star structure)")
        else:
            vst = [[p.nf(p.star.apply(v.matrix[k][i])) for k in range(n)]
                   for i in range(n)]  # vst[i][k] = (v_ki)*
            ok_all = True
            for i in range(n):
                for j in range(n):
                    s = NCPoly.zero(p.alphabet)
                    for k in range(n):
                        for l in range(n):
                            s = s + (vst[i][k] * v.matrix[l][j]).scale(_q_part(g[k][l]))
                    s = p.nf(s - NCPoly.scalar(p.alphabet, _q_part(g[i][j])))
                    if not s.is_zero():
                        ok_all = False
                        report.add(f"invariance entry ({i + 1},{j + 1})", False,
                                   witness=s.pretty()[:120])
            report.add("invariance sum_kl v*_ki g_kl v_lj = g_ij", ok_all)
        for q0 in q_samples:
            evs = _gram_eigs(g, q0)
            report.add(f"gram positive at q = {q0}", min(evs) > 0.0,
                       witness=f"min eigenvalue {min(evs):.6g}")
    return report


def _q_part(c):
    """Scalar usable inside an NCPoly over Q(q); complex entries only make
    sense here when their imaginary part vanishes."""
    if isinstance(c, ScalarC):
        if not c.im.is_zero():
            raise ComoduleError("invariance check needs a real-over-Q(q) gram")
        return c.re
    return c


def _gram_eigs(g, q0):
    import numpy as np

    n = len(g)
    m = np.zeros((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            v = g[i][j].eval(q0)
            m[i, j] = v
    return sorted(np.linalg.eigvalsh(m).tolist())


def search_diagonal_gram(v: Corep, exp_range=4, q_samples=(0.5,)) -> UnitaryStructure:
    """Search diagonal grams diag(q^{e_i}) (e_1 = 0) for one satisfying
    the comodule-invariance identity."""
    p = v.pres
    if p.star is None:
        raise ComoduleError(f"{p.name} carries no star structure")
    n = v.dim
    vst = [[p.nf(p.star.apply(v.matrix[k][i])) for k in range(n)]
           for i in range(n)]

    def works(exps):
        g = [[ScalarQ.q_power(exps[i]) if i == j else S_ZERO
              for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(n):
                s = NCPoly.zero(p.alphabet)
                for k in range(n):
                    s = s + (vst[i][k] * v.matrix[k][j]).scale(g[k][k])
                s = p.nf(s - NCPoly.scalar(p.alphabet, g[i][j]))
                if not s.is_zero():
                    return None
        return g

    def enumerate_exps(pos):
        if pos == n:
            yield []
            return
        for rest in enumerate_exps(pos + 1):
            for e in range(-2 * exp_range, 2 * exp_range + 1, 2):
                yield [e] + rest

    for exps in enumerate_exps(1):
        g = works([0] + exps)
        if g is not None:
            return UnitaryStructure(v, g)
    raise ComoduleError(
        f"{p.name}: no diagonal gram q^(2k) found in range {exp_range}")


def duality_maps(u: UnitaryStructure, q_samples=(0.5, 0.9, 2.0)):
    """Evaluation and coevaluation matrices of the duality pair.

    eval acts by (e-bar_i, e_j) -> gram_ij; coeval inserts
    sum_kl c_kl e_k (x) e-bar_l with c = gram^{-1}, which is exactly what
    the snake identities force.
    """
    g = u.gram
    for q0 in q_samples:
        evs = _gram_eigs(g, q0)
        if min(evs) <= 0.0:
            raise NonPositiveGramError(
                f"gram not positive at q = {q0} (min eigenvalue {min(evs):.3g})")
    c = mat_inv([list(r) for r in g])
    return g, c


def snake_check(ev, coev) -> Report:
    """Exact snake identities for a duality pair given as matrices."""
    n = len(ev)
    report = Report(f"snake(dim {n})")
    with timed(report):
        ok1 = ok2 = True
        for i in range(n):
            for j in range(n):
                s1 = ev[0][0] - ev[0][0]
                s2 = ev[0][0] - ev[0][0]
                for k in range(n):
                    s1 = s1 + coev[i][k] * ev[k][j]
                    s2 = s2 + ev[i][k] * coev[k][j]
                want = S_ONE if i == j else S_ZERO
                if not (s1 == want):
                    ok1 = False
                if not (s2 == want):
                    ok2 = False
        report.add("(1 (x) eval)(coeval (x) 1) = 1", ok1)
        report.add("(eval (x) 1)(1 (x) coeval) = 1", ok2)
    return report
