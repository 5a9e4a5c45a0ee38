"""Invariant (Haar) functionals on degree truncations.

On a Hopf presentation the Haar functional J is the unique solution of
the right-invariance system (J (x) id) Delta(b) = J(b) * 1 with J(1) = 1
over the normal-word basis of the truncation.  On a comodule-algebra
extension the Haar measure is the convolution mu = (J (x) f) alpha with
any auxiliary functional normalized by f(1) = 1; uniqueness makes the
choice of f immaterial, which the tests exercise.  Positivity is
numerical evidence at sample q, clearly labeled as such.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import (
    InconsistentSystemError,
    NonUniqueSolutionError,
    RowReducer,
)
from .ncpoly import AlgebraError, NCPoly
from .presentations import CoactionData, Presentation, alpha_ext, delta_ext
from .report import Report, timed
from .rewrite import word_basis
from .scalars import PoleError, S_ONE, S_ZERO


class HaarError(AlgebraError):
    pass


class TruncationOverflowError(HaarError):
    """A value outside the solved truncation was requested."""


@dataclass
class LinearFunctional:
    basis: list            # normal words the functional is defined on
    values: dict           # word -> scalar

    def __post_init__(self):
        if self.values.get((), S_ZERO) != S_ONE:
            raise HaarError("functional must be normalized by value 1 on the unit")

    def of_word(self, word):
        try:
            return self.values[word]
        except KeyError:
            raise TruncationOverflowError(
                f"word of degree {len(word)} outside the solved truncation")

    def __call__(self, poly: NCPoly):
        total = S_ZERO
        for word, c in poly.terms.items():
            total = total + c * self.of_word(word)
        return total


def haar_on_hopf(p: Presentation, h=None, d: int = 2) -> LinearFunctional:
    """Solve the right-invariance system on the degree-d truncation.

    Non-uniqueness or inconsistency of the truncated system is raised,
    never silently resolved.
    """
    h = h or p.hopf
    if h is None:
        raise HaarError(f"{p.name} carries no Hopf data")
    p.ensure_degree(d)
    basis = word_basis(p.rewrite, d)
    dext = delta_ext(p)
    reducer = RowReducer(var_key=lambda w: (len(w), w))
    reducer.add_equation({(): S_ONE}, S_ONE)
    for b in basis:
        expansion = dext(b)
        # group Delta(b) = sum c * w1 (x) w2 by the right-leg word; each
        # right-leg word contributes one scalar equation
        by_right = {}
        for (w1, w2), c in expansion.terms.items():
            row = by_right.setdefault(w2, {})
            row[w1] = row.get(w1, S_ZERO) + c
        for w2, row in by_right.items():
            row = dict(row)
            if w2 == ():
                row[b] = row.get(b, S_ZERO) - S_ONE
            reducer.add_equation(row, S_ZERO)
        # rows absent from Delta(b) compare 0 with J(b) * coefficient of
        # the unit: when the empty right leg never occurs, J(b) = 0
        if () not in by_right:
            reducer.add_equation({b: S_ONE}, S_ZERO)
    values = reducer.solution(basis)
    return LinearFunctional(basis, values)


def unit_coefficient_functional():
    """f(word) = 1 on the empty word, 0 elsewhere."""
    return lambda word: S_ONE if word == () else S_ZERO


def haar_on_extension(c: CoactionData, J: LinearFunctional, d: int,
                      f=None) -> LinearFunctional:
    """mu = (J (x) f) alpha_Z on the degree-d truncation of Z."""
    f = f or unit_coefficient_functional()
    c.total.ensure_degree(d)
    basis = word_basis(c.total.rewrite, d)
    aext = alpha_ext(c)
    values = {}
    for b in basis:
        total = S_ZERO
        for (w1, w2), coeff in aext(b).terms.items():
            fv = f(w2)
            if fv.is_zero():
                continue
            total = total + coeff * J.of_word(w1) * fv
        values[b] = total
    return LinearFunctional(basis, values)


def verify_invariance(c: CoactionData, mu: LinearFunctional, d: int) -> Report:
    """(1 (x) mu) alpha_Z(b) = mu(b) * 1 for every basis word of Z."""
    report = Report(f"invariance({c.total.name}, degree {d})")
    with timed(report):
        c.total.ensure_degree(d)
        basis = word_basis(c.total.rewrite, d)
        A = c.base.alphabet
        aext = alpha_ext(c)
        for b in basis:
            lhs = {}
            for (w1, w2), coeff in aext(b).terms.items():
                v = coeff * mu.of_word(w2)
                if v.is_zero():
                    continue
                s = lhs.get(w1, S_ZERO) + v
                if s.is_zero():
                    lhs.pop(w1, None)
                else:
                    lhs[w1] = s
            lhs_poly = NCPoly(A, lhs)
            rhs = NCPoly.scalar(A, mu.of_word(b))
            ok = lhs_poly == rhs
            report.add(f"invariance at {c.total.alphabet.word_str(b)}", ok,
                       witness=(lhs_poly - rhs).pretty()[:120] if not ok else "")
    return report


def gram_matrix(p: Presentation, mu: LinearFunctional, d: int):
    """Exact Gram matrix mu(star(b) * w) over basis words of degree <= d."""
    if p.star is None:
        raise HaarError(f"{p.name} carries no star structure")
    basis = [w for w in mu.basis if len(w) <= d]
    starred = [p.nf(p.star.apply(NCPoly(p.alphabet, {b: S_ONE}))) for b in basis]
    plain = [NCPoly(p.alphabet, {b: S_ONE}) for b in basis]
    gram = []
    for i in range(len(basis)):
        row = []
        for j in range(len(basis)):
            row.append(mu(p.nf(starred[i] * plain[j])))
        gram.append(row)
    return basis, gram


def gram_positivity(p: Presentation, mu: LinearFunctional, d: int,
                    q_samples=(0.5, 0.9, 2.0)) -> Report:
    """Positive semidefiniteness of the Gram matrix at sample q.

    Exact conjugate symmetry is checked symbolically first; the
    eigenvalue check is numerical evidence at finitely many q and a
    finite degree, not a proof, and the report says so.
    """
    import numpy as np

    report = Report(f"gram-positivity({p.name}, degree {d})")
    report.params = {"q_samples": list(q_samples), "degree": d,
                     "nature": "finite-degree numerical evidence, not a proof"}
    with timed(report):
        basis, gram = gram_matrix(p, mu, d)
        n = len(basis)
        sym = all(gram[i][j] == gram[j][i].conj()
                  for i in range(n) for j in range(n))
        report.add("gram conjugate-symmetric exactly over the scalar field", sym)
        for q0 in q_samples:
            try:
                m = np.array([[complex(_as_complex(gram[i][j], q0))
                               for j in range(n)] for i in range(n)])
            except PoleError as e:
                report.add(f"evaluation at q = {q0}", False, witness=str(e))
                continue
            evs = np.linalg.eigvalsh(m)
            lo, hi = float(evs.min()), float(evs.max())
            tol = 1e-9 * max(hi, 1.0)
            report.add(
                f"PSD evidence at q = {q0} ({n}x{n} gram)", lo >= -tol,
                witness=f"eigenvalues in [{lo:.3e}, {hi:.3e}]")
    return report


def _as_complex(c, q0):
    v = c.eval(q0)
    return v if isinstance(v, complex) else complex(v, 0.0)
