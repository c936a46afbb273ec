"""Seeded random objects and the evaluation oracle shared by the test files."""

import random
from fractions import Fraction

from uqpbw import ONE, ZERO, Coeff, Element, Gen, KPow, LaurentPoly, Signature


def rand_laurent(rng: random.Random, span=3, width=4, size=4) -> LaurentPoly:
    terms = {}
    for _ in range(rng.randint(0, size)):
        terms[rng.randint(-span, span)] = rng.randint(-width, width)
    return LaurentPoly(terms)


def rand_coeff(rng: random.Random, allow_zero=True) -> Coeff:
    while True:
        num = rand_laurent(rng)
        den = rand_laurent(rng, span=2, size=3)
        if den.coeffs and (allow_zero or num.coeffs):
            return Coeff(num, den)


def rand_rational(rng: random.Random) -> Fraction:
    while True:
        x = Fraction(rng.randint(-40, 40), rng.randint(1, 17))
        if x:
            return x


def rand_letter(rng: random.Random, sig: Signature):
    n = sig.size
    if rng.random() < 0.3:
        return KPow(rng.randint(1, n), rng.choice((-4, -2, 2, 4)))
    a = rng.randint(1, n)
    b = rng.choice([i for i in range(1, n + 1) if i != a])
    return Gen(a, b)


def rand_word(rng: random.Random, sig: Signature, max_len=4) -> tuple:
    return tuple(rand_letter(rng, sig) for _ in range(rng.randint(0, max_len)))


def rand_element(rng: random.Random, sig: Signature, max_terms=3, max_len=4) -> Element:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        c = rand_coeff(rng, allow_zero=False)
        w = rand_word(rng, sig, max_len)
        terms[w] = terms[w] + c if w in terms else c
    return Element(sig, terms)


def rand_signature(rng: random.Random, max_total=5) -> Signature:
    total = rng.randint(2, max_total)
    m = rng.randint(1, total - 1)
    return Signature(m, total - m)


def _ev(c, x):
    """Value at q = x, or None at a pole."""
    try:
        return c.evaluate(x)
    except ZeroDivisionError:
        return None


def check_ring_axioms(rng, cases):
    """Ring axioms and the bar involution against evaluation at random rational q."""
    failures = []
    for _ in range(cases):
        a, b, c = (rand_coeff(rng) for _ in range(3))
        # redraw q until no input (or a.bar(), b.bar()) has a pole there
        while True:
            x = rand_rational(rng)
            ea, eb, ec = _ev(a, x), _ev(b, x), _ev(c, x)
            if None not in (ea, eb, ec, _ev(a, 1 / x), _ev(b, 1 / x)):
                break
        checks = [
            (_ev(a + b, x), ea + eb),
            (_ev(a * b, x), ea * eb),
            (_ev(a - b, x), ea - eb),
            (_ev((a + b) + c, x), _ev(a + (b + c), x)),
            (_ev((a * b) * c, x), _ev(a * (b * c), x)),
            (_ev(a * (b + c), x), ea * eb + ea * ec),
            (_ev(a.bar(), x), _ev(a, 1 / x)),
            (_ev((a * b).bar(), x), _ev(a.bar() * b.bar(), x)),
        ]
        ok = all(u == v for u, v in checks)
        ok = ok and a.bar().bar() == a and a + b == b + a and a * b == b * a
        ok = ok and (a - a).is_zero() and a * ONE == a and a + ZERO == a
        if not b.is_zero():
            ok = ok and (a / b) * b == a and (eb == 0 or _ev(a / b, x) == ea / eb)
        if not ok:
            failures.append((a, b, c, x))
    return failures
