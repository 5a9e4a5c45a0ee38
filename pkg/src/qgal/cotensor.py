"""Cotensor products V wedge Z on degree truncations: the fibre functor
at desk scale.

An element is sum_i v_i (x) z_i with the z_i in Z; membership means
alpha_V (x) 1 and 1 (x) alpha_Z agree on it.  The kernel is computed by
exact linear algebra over the normal-word basis, the scalar product is
induced by the Haar measure, and the monoidal constraint multiplies
coefficient legs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .comodules import Corep, conjugate, tensor, trivial
from .haar import LinearFunctional
from .linalg import nullspace
from .ncpoly import AlgebraError, NCPoly, TensorPoly
from .presentations import CoactionData, alpha_ext, reduce_legs
from .report import Report, timed
from .rewrite import word_basis
from .scalars import S_ONE, S_ZERO


class CotensorError(AlgebraError):
    pass


@dataclass
class CotensorElement:
    comodule: Corep
    coaction: CoactionData
    coeffs: list  # NCPoly over Z, one per comodule basis vector

    def degree(self):
        return max((z.degree() for z in self.coeffs), default=0)

    def pretty(self):
        parts = []
        for i, z in enumerate(self.coeffs):
            if not z.is_zero():
                parts.append(f"e{i + 1} (x) ({z.pretty()})")
        return " + ".join(parts) if parts else "0"


def kernel_member(x: CotensorElement) -> bool:
    """Exact membership: for each k, sum_i v_ki (x) z_i = alpha_Z(z_k)."""
    c = x.coaction
    c.total.ensure_degree(x.degree() + 1)
    aext = alpha_ext(c)
    v = x.comodule.matrix
    for k in range(x.comodule.dim):
        lhs = TensorPoly((c.base.alphabet, c.total.alphabet))
        for i in range(x.comodule.dim):
            lhs = lhs + TensorPoly.of(v[k][i], x.coeffs[i])
        lhs = reduce_legs(lhs, (c.base.rewrite, c.total.rewrite))
        rhs = TensorPoly((c.base.alphabet, c.total.alphabet))
        for word, coeff in x.coeffs[k].terms.items():
            rhs = rhs + aext(word).scale(coeff)
        if lhs != rhs:
            return False
    return True


def compute_cotensor(v: Corep, c: CoactionData, d: int):
    """Basis of the kernel of alpha_V (x) 1 - 1 (x) alpha_Z on
    V (x) Z_{<= d}, by exact elimination over the normal-word basis."""
    c.total.ensure_degree(d + 1)
    zbasis = word_basis(c.total.rewrite, d)
    aext = alpha_ext(c)
    n = v.dim
    rows = {}

    def bump(eq_key, var, val):
        row = rows.setdefault(eq_key, {})
        s = row.get(var, S_ZERO) + val
        if s.is_zero():
            row.pop(var, None)
        else:
            row[var] = s

    for k in range(n):
        for i in range(n):
            for wa, ca in v.matrix[k][i].terms.items():
                for b in zbasis:
                    bump((k, wa, b), (i, b), ca)
        for b in zbasis:
            for (wa, wz), coeff in aext(b).terms.items():
                bump((k, wa, wz), (k, b), -coeff)
    variables = [(i, b) for i in range(n) for b in zbasis]
    order_key = c.total.rewrite.order.key
    vecs = nullspace(rows.values(), variables,
                     var_key=lambda v_: (v_[0], order_key(v_[1])))
    out = []
    for vec in vecs:
        coeffs = [NCPoly.zero(c.total.alphabet) for _ in range(n)]
        for (i, b), val in vec.items():
            coeffs[i] = coeffs[i] + NCPoly(c.total.alphabet, {b: val})
        elem = CotensorElement(v, c, coeffs)
        if not kernel_member(elem):
            raise CotensorError("computed kernel vector fails exact membership")
        out.append(elem)
    return out


def cotensor_inner(x: CotensorElement, y: CotensorElement,
                   mu: LinearFunctional):
    """mu(sum_i star(z_i) z'_i), the induced scalar product."""
    c = x.coaction
    star = c.total.star
    if star is None:
        raise CotensorError(f"{c.total.name} carries no star structure")
    if x.comodule.dim != y.comodule.dim:
        raise CotensorError("inner product needs elements of one comodule")
    total = NCPoly.zero(c.total.alphabet)
    for zi, wi in zip(x.coeffs, y.coeffs):
        total = total + star.apply(zi) * wi
    return mu(c.total.nf(total))


def monoidal_constraint(x: CotensorElement, y: CotensorElement) -> CotensorElement:
    """v (x) z1 (x) w (x) z2 -> (v (x) w) (x) z1 z2, membership re-verified."""
    if x.coaction is not y.coaction:
        raise CotensorError("elements live over different extensions")
    vw = tensor(x.comodule, y.comodule)
    coeffs = []
    for zi in x.coeffs:
        for wj in y.coeffs:
            coeffs.append(x.coaction.total.nf(zi * wj))
    out = CotensorElement(vw, x.coaction, coeffs)
    if not kernel_member(out):
        raise CotensorError("monoidal image fails exact kernel membership")
    return out


def conjugation_map(x: CotensorElement) -> CotensorElement:
    """sum v_i (x) z_i -> sum vbar_i (x) z*_i, landing in Vbar wedge Z."""
    c = x.coaction
    star = c.total.star
    if star is None or c.base.star is None:
        raise CotensorError("conjugation needs star structures on both sides")
    vbar = conjugate(x.comodule)
    coeffs = [c.total.nf(star.apply(z)) for z in x.coeffs]
    out = CotensorElement(vbar, c, coeffs)
    if not kernel_member(out):
        raise CotensorError("conjugated element fails exact kernel membership")
    return out


def trivial_element(c: CoactionData) -> CotensorElement:
    return CotensorElement(trivial(c.base), c,
                           [NCPoly.one(c.total.alphabet)])


def verify_biunitarity(c: CoactionData, zblock, d_unused: int = 0) -> Report:
    """Both orthonormality families for a block of Z elements:
    sum_i star(z_ij) z_ik = delta_jk and sum_j z_ij star(z_kj) = delta_ik."""
    star = c.total.star
    if star is None:
        raise CotensorError(f"{c.total.name} carries no star structure")
    Z = c.total
    nrows = len(zblock)
    ncols = len(zblock[0])
    report = Report(f"biunitarity({Z.name}, {nrows}x{ncols} block)")
    with timed(report):
        one = NCPoly.one(Z.alphabet)
        for j in range(ncols):
            for k in range(ncols):
                s = NCPoly.zero(Z.alphabet)
                for i in range(nrows):
                    s = s + star.apply(zblock[i][j]) * zblock[i][k]
                s = Z.nf(s - (one if j == k else NCPoly.zero(Z.alphabet)))
                report.add(f"sum_i z*_i{j + 1} z_i{k + 1} = delta", s.is_zero(),
                           witness=s.pretty()[:120] if not s.is_zero() else "")
        for i in range(nrows):
            for k in range(nrows):
                s = NCPoly.zero(Z.alphabet)
                for j in range(ncols):
                    s = s + zblock[i][j] * star.apply(zblock[k][j])
                s = Z.nf(s - (one if i == k else NCPoly.zero(Z.alphabet)))
                report.add(f"sum_j z_{i + 1}j z*_{k + 1}j = delta", s.is_zero(),
                           witness=s.pretty()[:120] if not s.is_zero() else "")
    return report
