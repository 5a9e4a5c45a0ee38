"""The Galois map of a comodule-algebra extension and its explicit
inverse data.

beta(x (x) y) = alpha(x) * (1 (x) y) maps Z (x) Z into A (x) Z.  A
witness consists of a companion presentation T, an algebra map
delta: A -> Z (x) T, and an anti-morphism phi: T -> Z; the candidate
inverse is beta' = (1 (x) m) (1 (x) phi (x) 1) (delta (x) 1).  All
witness properties are verified by rewriting before use, never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ncpoly import AlgebraError, NCPoly, TensorPoly, extend_anti, extend_to_words
from .presentations import (
    CoactionData,
    MonomialOrder,
    Presentation,
    _finish,
    alpha_ext,
    catalog,
    reduce_legs,
)
from .report import Report, timed
from .rewrite import word_basis
from .scalars import S_ONE


class GaloisError(AlgebraError):
    pass


class InvalidWitnessError(GaloisError):
    pass


@dataclass
class GaloisWitness:
    companion: Presentation            # T
    delta: dict                        # generator index of A -> TensorPoly (Z, T)
    phi: dict                          # generator index of T -> NCPoly over Z


def delta_witness_ext(c: CoactionData, w: GaloisWitness):
    ext = extend_to_words(w.delta, (c.total.alphabet, w.companion.alphabet))

    def fn(word):
        return reduce_legs(ext(word), (c.total.rewrite, w.companion.rewrite))

    return fn


def galois_map(x: NCPoly, y: NCPoly, c: CoactionData) -> TensorPoly:
    """beta(x (x) y) = alpha(x) * (1 (x) y), legs normal-formed."""
    aext = alpha_ext(c)
    out = TensorPoly((c.base.alphabet, c.total.alphabet))
    for word, coeff in x.terms.items():
        out = out + aext(word).scale(coeff)
    out = out.mul_leg(1, y)
    return reduce_legs(out, (c.base.rewrite, c.total.rewrite))


def galois_inverse(a: NCPoly, y: NCPoly, w: GaloisWitness,
                   c: CoactionData) -> TensorPoly:
    """beta'(a (x) y), legs normal-formed over Z."""
    dext = delta_witness_ext(c, w)
    phi_ext = extend_anti(w.phi, c.total.alphabet)
    Z = c.total.alphabet
    out = TensorPoly((Z, Z))
    for word, coeff in a.terms.items():
        t = dext(word)
        t = t.map_leg(1, phi_ext)
        out = out + t.scale(coeff)
    out = out.mul_leg(1, y)
    return reduce_legs(out, (c.total.rewrite, c.total.rewrite))


def validate_witness(c: CoactionData, w: GaloisWitness) -> Report:
    """delta is an algebra map A -> Z (x) T and phi an anti-morphism
    T -> Z; both checked relation by relation."""
    report = Report(
        f"witness({c.base.name} -> {c.total.name} (x) {w.companion.name})")
    with timed(report):
        dext = delta_witness_ext(c, w)
        for rel in c.base.relations:
            t = TensorPoly((c.total.alphabet, w.companion.alphabet))
            for word, coeff in rel.terms.items():
                t = t + dext(word).scale(coeff)
            report.add("delta kills relation " + _short(rel), t.is_zero(),
                       witness=t.pretty()[:120] if not t.is_zero() else "")
        phi_ext = extend_anti(w.phi, c.total.alphabet)
        for rel in w.companion.relations:
            img = NCPoly.zero(c.total.alphabet)
            for word, coeff in rel.terms.items():
                img = img + phi_ext(word).scale(coeff)
            img = c.total.nf(img)
            report.add("phi kills relation " + _short(rel), img.is_zero(),
                       witness=img.pretty()[:120] if not img.is_zero() else "")
    return report


def verify_galois(c: CoactionData, w: GaloisWitness, d: int) -> Report:
    """beta beta' = id on basis words of A tensor 1, and beta' beta = id
    on basis words of Z in either slot, exactly."""
    report = Report(f"galois({c.total.name} over {c.base.name}, degree {d})")
    with timed(report):
        # the composites produce words up to triple the basis degree
        c.total.ensure_degree(3 * d)
        c.base.ensure_degree(max(d, 2))
        w.companion.ensure_degree(max(d, 2))
        val = validate_witness(c, w)
        report.add("witness validated", val.ok)
        if not val.ok:
            for item in val.items:
                if item.status != "pass":
                    report.add(item.desc, False, witness=item.witness)
            return report
        A, Z = c.base.alphabet, c.total.alphabet
        one_Z = NCPoly.one(Z)
        aext = alpha_ext(c)
        for wd in word_basis(c.base.rewrite, d):
            a = NCPoly(A, {wd: S_ONE})
            t = galois_inverse(a, one_Z, w, c)
            back = TensorPoly((A, Z))
            for (w1, w2), coeff in t.terms.items():
                back = back + galois_map(
                    NCPoly(Z, {w1: S_ONE}), NCPoly(Z, {w2: S_ONE}), c
                ).scale(coeff)
            back = reduce_legs(back, (c.base.rewrite, c.total.rewrite))
            want = TensorPoly((A, Z), {(wd, ()): S_ONE})
            report.add(f"beta beta' fixes {A.word_str(wd)} (x) 1", back == want,
                       witness=(back - want).pretty()[:120] if back != want else "")
        for wd in word_basis(c.total.rewrite, d):
            x = NCPoly(Z, {wd: S_ONE})
            t = galois_map(x, one_Z, c)
            back = TensorPoly((Z, Z))
            for (w1, w2), coeff in t.terms.items():
                back = back + galois_inverse(
                    NCPoly(A, {w1: S_ONE}), NCPoly(Z, {w2: S_ONE}), w, c
                ).scale(coeff)
            back = reduce_legs(back, (c.total.rewrite, c.total.rewrite))
            want = TensorPoly((Z, Z), {(wd, ()): S_ONE})
            report.add(f"beta' beta fixes {Z.word_str(wd)} (x) 1", back == want,
                       witness=(back - want).pretty()[:120] if back != want else "")
            t2 = galois_inverse(NCPoly.one(A), x, w, c)
            want2 = TensorPoly((Z, Z), {((), wd): S_ONE})
            report.add(f"beta' beta fixes 1 (x) {Z.word_str(wd)}", t2 == want2)
    return report


def _short(poly: NCPoly, limit=40) -> str:
    s = poly.pretty()
    return s if len(s) <= limit else s[: limit - 3] + "..."


# ---------------------------------------------------------------------------
# witness constructors for the catalog extensions
# ---------------------------------------------------------------------------


def glq_witness(c: CoactionData) -> GaloisWitness:
    """Companion is the mirror deformation; delta(x_ij) = sum z_ik (x) t_kj,
    delta(t) = tau (x) xi; phi sends the companion generators to the
    entries of the inverse of the generator matrix z."""
    T = catalog("GLqm22")
    A, Z, Ti = c.base.alphabet, c.total.alphabet, T.alphabet
    delta = {}
    for i in (1, 2):
        for j in (1, 2):
            delta[A.index[f"x{i}{j}"]] = (
                TensorPoly.of(Z.gen(f"z{i}1"), Ti.gen(f"t1{j}"))
                + TensorPoly.of(Z.gen(f"z{i}2"), Ti.gen(f"t2{j}"))
            )
    delta[A.index["t"]] = TensorPoly.of(Z.gen("tau"), Ti.gen("xi"))
    PZ = c.total.parse
    phi = {
        Ti.index["t11"]: PZ("z22*tau"),
        Ti.index["t12"]: PZ("q*tau*z12"),
        Ti.index["t21"]: PZ("q^-1*z21*tau"),
        Ti.index["t22"]: PZ("tau*z11"),
        Ti.index["xi"]: PZ("z11*z22 + q^-1*z12*z21"),
    }
    return GaloisWitness(T, delta, phi)


def hopf_witness(p: Presentation) -> GaloisWitness:
    """A Hopf presentation over itself: delta = Delta, phi = antipode."""
    if p.hopf is None:
        raise GaloisError(f"{p.name} carries no Hopf data")
    delta = {gi: t for gi, t in p.hopf.delta.items()}
    return GaloisWitness(p, delta, dict(p.hopf.antipode))


_OPPOSITE_CACHE = {}


def opposite(p: Presentation) -> Presentation:
    """Opposite presentation: every relation word reversed."""
    if p.name in _OPPOSITE_CACHE:
        return _OPPOSITE_CACHE[p.name]
    rels = [
        NCPoly(p.alphabet, {tuple(reversed(wd)): coeff
                            for wd, coeff in rel.terms.items()})
        for rel in p.relations
    ]
    out = _finish(p.name + "^op", p.alphabet, rels, MonomialOrder(p.alphabet),
                  completion_degree=p.rewrite.completion_degree)
    _OPPOSITE_CACHE[p.name] = out
    return out


def aufg_witness(c: CoactionData) -> GaloisWitness:
    """Translation-map witness for the universal unitary extensions:
    companion is the opposite algebra of Z, delta(a_ij) = sum z_ik (x) z*_kj
    (second leg multiplied in reverse), phi the identity on generators.

    Only defined for a square generator block.
    """
    A, Z = c.base.alphabet, c.total.alphabet
    znames = [n for n in Z.names if not n.endswith("s")]
    n = max(int(nm[1]) for nm in znames)
    p = max(int(nm[2]) for nm in znames)
    if n != p:
        raise GaloisError("translation witness needs a square generator block")
    T = opposite(c.total)
    delta = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            d = None
            ds = None
            for k in range(1, n + 1):
                # second leg carries the adjoint entry (z*)_kj = star(z_jk)
                t = TensorPoly.of(Z.gen(f"z{i}{k}"), T.alphabet.gen(f"z{j}{k}s"))
                d = t if d is None else d + t
            delta[A.index[f"z{i}{j}"]] = d
    # the starred generators need the inverse of the conjugate block,
    # read off the unitarity of the twisted matrix
    u = _zbar_inverse(c.total, n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            d = None
            for k in range(1, n + 1):
                t = TensorPoly.of(Z.gen(f"z{i}{k}s"), u[k - 1][j - 1])
                d = t if d is None else d + t
            delta[A.index[f"z{i}{j}s"]] = d
    phi = {gi: Z.gen(name) for gi, name in enumerate(T.alphabet.names)}
    return GaloisWitness(T, delta, phi)


def _zbar_inverse(total: Presentation, n):
    """Inverse of the conjugate generator block zbar of Z.

    With B = F zbar G^-1 unitary (B^-1 = B^adj by the defining
    relations), zbar^-1 = G^-1 B^adj F, entrywise over Z.
    """
    from .linalg import mat_inv

    FG = total.meta.get("FG")
    if FG is None:
        raise GaloisError("presentation lacks twist matrices")
    F, G = FG
    Ginv = mat_inv([list(r) for r in G])
    Z = total.alphabet
    zbar = [[Z.gen(f"z{i}{j}s") for j in range(1, n + 1)] for i in range(1, n + 1)]
    B = _mat_sandwich(F, zbar, Ginv)
    Badj = [[total.star.apply(B[j][i]) for j in range(n)] for i in range(n)]
    out = _mat_sandwich(Ginv, Badj, F)
    return [[total.nf(e) for e in row] for row in out]


def _mat_sandwich(F, mat, Ginv):
    n, p = len(F), len(Ginv)
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
