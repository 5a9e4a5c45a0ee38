import dataclasses

import pytest

from qgal.ncpoly import NCPoly, StarMap, TensorPoly
from qgal.presentations import (
    CatalogError,
    CoactionData,
    HopfData,
    abelianization,
    catalog,
    coaction,
    findim_rep_obstruction,
    matrix_fq,
    parse_coaction_text,
    parse_presentation_text,
    verify_coaction,
    verify_hopf,
    verify_star,
)
from qgal.scalars import Q, S_ONE


def test_catalog_shapes(glq2m2):
    assert len(glq2m2.alphabet) == 5
    assert len(glq2m2.relations) == 13
    onp = catalog("Onp", n=2, p=1)
    # a a* = I_2 gives four relations, a* a = I_1 one more
    assert len(onp.alphabet) == 4
    assert len(onp.relations) == 5
    with pytest.raises(CatalogError):
        catalog("nope")


def test_catalog_is_cached(uq2m2):
    assert catalog("Uq2m2") is uq2m2
    assert catalog("Onp", n=2, p=1) is catalog("Onp", n=2, p=1)


def test_verify_star_pass(uq2m2, uq2):
    for p in (uq2m2, uq2):
        r = verify_star(p)
        assert r.ok
    r = verify_star(uq2m2)
    starred = [i for i in r.items if "reduces to 0" in i.desc]
    involutive = [i for i in r.items if "involutive" in i.desc]
    assert len(starred) == 13
    assert len(involutive) == 5


def test_verify_star_corrupted(uq2m2):
    A = uq2m2.alphabet
    images = dict(uq2m2.star.images)
    images[A.index["z11"]] = A.gen("z11")
    bad = dataclasses.replace(uq2m2, star=StarMap(A, images))
    r = verify_star(bad)
    assert not r.ok
    assert any("involutive" in i.desc and i.status == "fail" for i in r.items)


def test_verify_hopf_pass(glq2, uq2):
    assert verify_hopf(glq2).ok
    assert verify_hopf(uq2).ok


def test_verify_hopf_corrupted(uq2):
    A = uq2.alphabet
    delta = dict(uq2.hopf.delta)
    delta[A.index["x11"]] = TensorPoly.of(A.gen("x11"), A.gen("x11"))
    bad = dataclasses.replace(
        uq2, hopf=HopfData(delta, dict(uq2.hopf.counit),
                           dict(uq2.hopf.antipode)))
    assert not verify_hopf(bad).ok


def test_verify_coaction(c_uq, c_glq):
    assert verify_coaction(c_uq).ok
    assert verify_coaction(c_glq).ok


def test_coaction_corrupted(c_uq):
    Z = c_uq.total.alphabet
    alpha = dict(c_uq.alpha)
    alpha[Z.index["z11"]] = TensorPoly.of(
        NCPoly.one(c_uq.base.alphabet), Z.gen("z12"))
    bad = CoactionData(c_uq.base, c_uq.total, alpha)
    assert not verify_coaction(bad).ok


def test_matrix_inverse_identity(glq2m2):
    """z * M = M * z = I entrywise for the explicit inverse matrix M."""
    P = glq2m2.parse
    z = [[P("z11"), P("z12")], [P("z21"), P("z22")]]
    M = [[P("z22*tau"), P("q*tau*z12")], [P("q^-1*z21*tau"), P("tau*z11")]]
    one = NCPoly.one(glq2m2.alphabet)
    for A, B in ((z, M), (M, z)):
        for i in range(2):
            for j in range(2):
                s = A[i][0] * B[0][j] + A[i][1] * B[1][j]
                want = one if i == j else NCPoly.zero(glq2m2.alphabet)
                assert glq2m2.nf(s - want).is_zero()


def test_tau_two_sided_inverse(glq2m2):
    P = glq2m2.parse
    D = P("z11*z22 + q^-1*z12*z21")
    tau = P("tau")
    one = NCPoly.one(glq2m2.alphabet)
    assert glq2m2.nf(D * tau - one).is_zero()
    assert glq2m2.nf(tau * D - one).is_zero()


def test_onp_unitarity():
    onp = catalog("Onp", n=2, p=1)
    P = onp.parse
    one = NCPoly.one(onp.alphabet)
    # 2 x 1 block: (a a*)_11 = a11 a11* and a* a is the 1 x 1 identity
    assert onp.nf(P("a11*a11s") - one).is_zero()
    assert onp.nf(P("a11*a21s")).is_zero()
    assert onp.nf(P("a11s*a11 + a21s*a21") - one).is_zero()


def test_aufg_matrices():
    F = matrix_fq(1)
    assert F[1][0] == -Q
    assert F[0][1] == S_ONE
    G = matrix_fq(-1)
    assert G[1][0] == Q


def test_findim_rep_obstruction_table():
    for n in range(1, 5):
        for p in range(1, 5):
            assert findim_rep_obstruction(n, p) == (n == p)


def test_abelianization(glq2m2, glq2):
    cp = abelianization(glq2m2)
    assert cp.variables == list(glq2m2.alphabet.names)
    i1 = cp.variables.index("z11")
    i2 = cp.variables.index("z12")
    target = tuple(1 if k in (i1, i2) else 0 for k in range(5))
    hits = [g for g in cp.ideal_generators
            if set(g) == {target} and g[target] == S_ONE + Q]
    assert hits, "expected the single-term (1+q) z11 z12 image"
    # the plain commutation relation x12 x21 - x21 x12 drops to zero, so
    # strictly fewer ideal generators survive than relations exist
    cp2 = abelianization(glq2)
    assert len(cp2.ideal_generators) < len(glq2.relations)


QPLANE = """
algebra qplane
generators x y
order x < y
relation y*x - q*x*y
"""

QPLANE_STAR_BAD = QPLANE + "star x -> x\nstar y -> y\n"


def test_parse_presentation_text():
    p = parse_presentation_text(QPLANE)
    assert p.name == "qplane"
    assert p.nf(p.parse("y*x")) == p.parse("q*x*y")


def test_parse_presentation_text_star_failure():
    p = parse_presentation_text(QPLANE_STAR_BAD)
    assert not verify_star(p).ok


def test_parse_presentation_text_errors():
    with pytest.raises(Exception):
        parse_presentation_text("algebra t\ngenerators a\nrelation b*a\n")


def test_parse_coaction_text(c_glq):
    text = """
coaction GLq2m2 over GLq2
alpha z11 -> x11 (x) z11 + x12 (x) z21
alpha z12 -> x11 (x) z12 + x12 (x) z22
alpha z21 -> x21 (x) z11 + x22 (x) z21
alpha z22 -> x21 (x) z12 + x22 (x) z22
alpha tau -> t (x) tau
"""
    c = parse_coaction_text(text, catalog)
    assert c.base is c_glq.base and c.total is c_glq.total
    assert c.alpha == c_glq.alpha
