import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_nonzero_scalar, random_scalar
from qgal.scalars import PoleError, Q, S_ONE, S_ZERO, ScalarC, ScalarQ


def test_basic_identities():
    assert Q * Q.inv() == S_ONE
    assert (Q + S_ONE) - Q == S_ONE
    assert ScalarQ.q_power(-3) * ScalarQ.q_power(3) == S_ONE
    assert ScalarQ.from_fraction(Fraction(2, 3)) * ScalarQ.from_int(3) \
        == ScalarQ.from_int(2)


def test_inverse_examples():
    q2m1 = Q * Q - S_ONE
    assert q2m1 * q2m1.inv() == S_ONE
    with pytest.raises(Exception):
        S_ZERO.inv()


def test_eval_examples():
    assert (Q + Q.inv()).eval(2.0) == pytest.approx(2.5)
    assert (Q - Q.inv()).eval(1.0) == pytest.approx(0.0)
    with pytest.raises(PoleError):
        (Q - S_ONE).inv().eval(1.0)


def test_eval_at_zero_pole():
    with pytest.raises(PoleError):
        Q.inv().eval(0.0)


def test_field_axioms_on_1000_random_triples():
    rng = random.Random(11)
    for _ in range(1000):
        a = random_scalar(rng)
        b = random_scalar(rng)
        c = random_scalar(rng)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        assert a + S_ZERO == a
        assert a * S_ONE == a
        assert a - a == S_ZERO
        if not a.is_zero():
            assert a * a.inv() == S_ONE


def test_canonicalization_idempotent():
    rng = random.Random(7)
    for _ in range(200):
        a = random_scalar(rng)
        b = random_nonzero_scalar(rng)
        # dividing and re-multiplying lands on the identical canonical form
        assert (a * b.inv()) * b == a
        assert hash(a + S_ZERO) == hash(a)


@settings(max_examples=200, deadline=None)
@given(st.integers(-4, 4), st.integers(-4, 4),
       st.fractions(min_value=-5, max_value=5),
       st.fractions(min_value=-5, max_value=5))
def test_eval_is_ring_homomorphism(e1, e2, c1, c2):
    a = ScalarQ.from_fraction(c1) * ScalarQ.q_power(e1) + S_ONE
    b = ScalarQ.from_fraction(c2) * ScalarQ.q_power(e2) - Q
    for q0 in (0.5, 0.9, 2.0):
        lhs = (a * b).eval(q0)
        rhs = a.eval(q0) * b.eval(q0)
        assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-12)
        assert (a + b).eval(q0) == pytest.approx(
            a.eval(q0) + b.eval(q0), rel=1e-12, abs=1e-12)


def test_complex_scalars():
    i = ScalarC(S_ZERO, S_ONE)
    assert i * i == ScalarC.from_scalar(ScalarQ.from_int(-1))
    z = ScalarC(Q, S_ONE - Q)
    assert z.conj().conj() == z
    assert z * z.inv() == ScalarC.from_scalar(S_ONE)
    # conjugation fixes q itself: q is a real parameter
    assert ScalarC.from_scalar(Q).conj() == ScalarC.from_scalar(Q)
    v = z.eval(2.0)
    assert isinstance(v, complex)
    assert v == pytest.approx(complex(2.0, -1.0))


def test_mixed_coercion():
    i = ScalarC(S_ZERO, S_ONE)
    assert Q * i == ScalarC(S_ZERO, Q)
    assert (i + Q) - i == ScalarC.from_scalar(Q)
