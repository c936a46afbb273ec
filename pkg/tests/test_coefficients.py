import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from randgen import check_ring_axioms
from uqpbw import DELTA, ONE, Q, QBAR, ZERO, Coeff, LaurentPoly, Signature, parse_coeff, q_power
from uqpbw import _polykern_py
from uqpbw.coefficients import BACKEND, DELTA_BAR, delta_bar_sub, delta_sub, q_sub


def C(text):
    return parse_coeff(text)


class TestExamples:
    def test_add(self):
        assert DELTA + QBAR == Q
        assert DELTA + ZERO == DELTA
        s = DELTA_BAR + DELTA_BAR
        assert s == C("2*q/(q^2-1)")
        assert str(s) == "2*q/(q^2-1)"

    def test_mul(self):
        assert DELTA * DELTA_BAR == ONE
        assert Q * QBAR == ONE
        assert C("(q+1)/(q-1)") * C("q-1") == C("q+1")

    def test_inverse(self):
        assert Q.inverse() == QBAR
        assert DELTA.inverse() == DELTA_BAR
        assert str(DELTA.inverse()) == "q/(q^2-1)"
        with pytest.raises(ZeroDivisionError):
            ZERO.inverse()
        with pytest.raises(ZeroDivisionError):
            ONE / ZERO

    def test_bar(self):
        assert q_power(2).bar() == q_power(-2)
        assert DELTA.bar() == -DELTA
        x = C("(q^2+1)/q")
        assert x.bar() == x

    def test_q_sub(self):
        sig = Signature(2, 1)
        assert q_sub(1, sig) == Q
        assert q_sub(3, sig) == QBAR
        assert delta_sub(3, sig) == -DELTA
        assert delta_sub(1, sig) == DELTA
        assert delta_bar_sub(3, sig) == -DELTA_BAR
        with pytest.raises(IndexError):
            q_sub(4, sig)


class TestCanonicalForm:
    def test_zero_is_empty(self):
        assert Coeff(0).num == ()
        assert LaurentPoly({3: 0}).coeffs == ()
        assert (Q - Q).is_zero()

    def test_q_powers_live_in_numerator(self):
        c = Coeff(LaurentPoly({0: 1}), LaurentPoly({2: 1, 4: -1}))
        assert c.den[0] != 0
        assert c == C("q^-2/(1-q^2)")

    def test_reduced(self):
        c = C("(q^2-1)/(q-1)")
        assert c == C("q+1") and c.den == (1,)
        c = C("(2*q+2)/(4*q-4)")
        assert c.num == (1, 1) and c.den == (-2, 2)

    def test_denominator_orientation(self):
        assert C("1/(1-q)") == C("-1/(q-1)")
        for c in (C("1/(1-q)"), C("3/(2-5*q+q^3)"), DELTA_BAR):
            assert c.den[-1] > 0 and c.den[0] != 0

    def test_hash_matches_equality(self):
        a = C("(q^3-q)/(q^2-1)")
        assert a == Q and hash(a) == hash(Q)
        assert len({a, Q, C("q")}) == 1

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            Coeff(1, 0)

    def test_int_mixing(self):
        assert Q + 1 == C("q+1")
        assert 2 * Q == C("2*q")
        assert 1 - Q == C("1-q")
        assert Q**-2 == q_power(-2)

    def test_printing(self):
        assert str(C("q^2-1")) == "q^2-1"
        assert str(DELTA) == "q-q^-1"
        assert str(C("2*q^3")) == "2*q^3"
        assert str(C("-1")) == "-1"
        assert str(C("(q^2+1)/(q^2-1)")) == "(q^2+1)/(q^2-1)"


def test_ring_axioms_seeded():
    assert check_ring_axioms(random.Random(7), 300) == []


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32))
def test_ring_axioms_hypothesis(seed):
    assert check_ring_axioms(random.Random(seed), 1) == []


@settings(max_examples=100, deadline=None)
@given(
    st.dictionaries(st.integers(-4, 4), st.integers(-10**25, 10**25), max_size=5),
    st.dictionaries(st.integers(-4, 4), st.integers(-10**25, 10**25), max_size=5),
)
def test_big_integer_coefficients(n, d):
    num, den = LaurentPoly(n), LaurentPoly(d)
    if not den.coeffs:
        return
    c = Coeff(num, den)
    x = Fraction(3, 7)
    dv = den.evaluate(x)
    if dv:
        assert c.evaluate(x) == num.evaluate(x) / dv
    assert c * Coeff(den) == Coeff(num)


def test_backend_is_reported():
    assert BACKEND in ("compiled", "python")


@pytest.mark.skipif(BACKEND != "compiled", reason="compiled kernel not built")
def test_compiled_kernel_agrees_with_reference():
    from uqpbw import _polykern as fast

    rng = random.Random(3)

    def poly(big):
        c = [rng.choice((rng.randint(-9, 9), rng.randint(-(2**70), 2**70))) if big else rng.randint(-9, 9) for _ in range(rng.randint(0, 6))]
        while c and not c[-1]:
            c.pop()
        return tuple(c)

    def laurent(big):
        c = list(poly(big))
        while c and not c[0]:
            c.pop(0)
        return (rng.randint(-3, 3) if c else 0), tuple(c)

    for i in range(3000):
        big = i % 4 == 0
        (al, a), (bl, b) = laurent(big), laurent(big)
        for name in ("ladd", "lsub", "lmul"):
            assert getattr(fast, name)(al, a, bl, b) == getattr(_polykern_py, name)(al, a, bl, b)
        x, y = poly(big), poly(big)
        assert fast.pgcd(x, y) == _polykern_py.pgcd(x, y)
        assert fast.pcontent(x) == _polykern_py.pcontent(x)
        if x and y:
            prod = _polykern_py.lmul(0, x, 0, y)[1]
            assert fast.pdivexact(prod, y) == _polykern_py.pdivexact(prod, y)
    # overflow inside an otherwise small product
    a = (2**62, 1)
    assert fast.lmul(0, a, 0, a) == _polykern_py.lmul(0, a, 0, a)
    with pytest.raises(ArithmeticError):
        fast.pdivexact((1, 0, 1), (1, 1))


def test_pure_python_switch():
    import os
    import subprocess
    import sys

    env = dict(os.environ, UQPBW_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import uqpbw; print(uqpbw.BACKEND)"], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "python"
