"""Exact scalars: rational functions of q with integer coefficients.

``LaurentPoly`` is an integer Laurent polynomial in q.  ``Coeff`` is a
reduced fraction of two of them, kept in a canonical form so that equality
is structural:

* the denominator is an ordinary polynomial with nonzero constant term
  (powers of q live in the numerator) and positive leading coefficient;
* numerator and denominator are coprime over Z[q], content included.

The heavy lifting happens in ``_polykern`` (compiled) or ``_polykern_py``.
"""

import os
from fractions import Fraction

from .grading import Signature

if os.environ.get("UQPBW_PURE_PYTHON"):
    from . import _polykern_py as _kern
else:
    try:
        from . import _polykern as _kern
    except ImportError:  # extension not built
        from . import _polykern_py as _kern

BACKEND = "compiled" if _kern.__name__.endswith("_polykern") else "python"

_ladd = _kern.ladd
_lsub = _kern.lsub
_lmul = _kern.lmul
_pgcd = _kern.pgcd
_pdivexact = _kern.pdivexact

__all__ = [
    "BACKEND",
    "LaurentPoly",
    "Coeff",
    "ZERO",
    "ONE",
    "Q",
    "QBAR",
    "DELTA",
    "DELTA_BAR",
    "q_power",
    "q_sub",
    "delta_sub",
    "delta_bar_sub",
]


class LaurentPoly:
    """Integer Laurent polynomial; ``terms`` maps exponent to coefficient."""

    __slots__ = ("low", "coeffs", "_hash")

    def __init__(self, terms=None):
        if not terms:
            self.low, self.coeffs = 0, ()
        else:
            items = {e: c for e, c in dict(terms).items() if c}
            if not items:
                self.low, self.coeffs = 0, ()
            else:
                lo, hi = min(items), max(items)
                self.low = lo
                self.coeffs = tuple(int(items.get(e, 0)) for e in range(lo, hi + 1))
        self._hash = None

    @classmethod
    def _raw(cls, low, coeffs):
        p = cls.__new__(cls)
        p.low = low
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def monomial(cls, coeff: int, exponent: int = 0) -> "LaurentPoly":
        if not coeff:
            return cls._raw(0, ())
        return cls._raw(exponent, (coeff,))

    @property
    def terms(self) -> dict:
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c}

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.low == 0 and self.coeffs == (1,)

    @property
    def valuation(self):
        return self.low if self.coeffs else None

    @property
    def degree(self):
        return self.low + len(self.coeffs) - 1 if self.coeffs else None

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            if isinstance(other, int):
                other = LaurentPoly.monomial(other)
            else:
                return NotImplemented
        return LaurentPoly._raw(*_ladd(self.low, self.coeffs, other.low, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.monomial(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return LaurentPoly._raw(*_lsub(self.low, self.coeffs, other.low, other.coeffs))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return LaurentPoly._raw(self.low, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.monomial(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return LaurentPoly._raw(*_lmul(self.low, self.coeffs, other.low, other.coeffs))

    __rmul__ = __mul__

    def bar(self) -> "LaurentPoly":
        """Substitute q -> 1/q."""
        if not self.coeffs:
            return self
        return LaurentPoly._raw(-(self.low + len(self.coeffs) - 1), self.coeffs[::-1])

    def shift(self, k: int) -> "LaurentPoly":
        if not self.coeffs:
            return self
        return LaurentPoly._raw(self.low + k, self.coeffs)

    def evaluate(self, x):
        """Value at q = x (x a nonzero int or Fraction); exact."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc * x**self.low

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.low == other.low and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == LaurentPoly.monomial(other)
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash((self.low, self.coeffs))
        return h

    def __repr__(self):
        return f"LaurentPoly({self.terms!r})"

    def __str__(self):
        return format_laurent(self.low, self.coeffs)


def _format_term(c, e, first):
    sign = "-" if c < 0 else ("" if first else "+")
    a = abs(c)
    if e == 0:
        return f"{sign}{a}"
    power = "q" if e == 1 else f"q^{e}"
    return f"{sign}{power}" if a == 1 else f"{sign}{a}*{power}"


def format_laurent(low, coeffs):
    """Descending powers, e.g. ``q^2-1`` or ``q-q^-1``."""
    if not coeffs:
        return "0"
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c:
            parts.append(_format_term(c, low + i, not parts))
    return "".join(parts)


def _make(nl, n, dl, d):
    """Canonical fraction from Laurent numerator and denominator tuples."""
    if not d:
        raise ZeroDivisionError("coefficient with zero denominator")
    if not n:
        return ZERO
    # move q-powers of the denominator into the numerator
    nl -= dl
    if len(d) == 1:
        c = d[0]
        if c == 1:
            return Coeff._raw(nl, n, (1,))
        if c == -1:
            return Coeff._raw(nl, tuple(-x for x in n), (1,))
    g = _pgcd(n, d)
    if g != (1,):
        n = _pdivexact(n, g)
        d = _pdivexact(d, g)
    if d[-1] < 0:
        n = tuple(-x for x in n)
        d = tuple(-x for x in d)
    return Coeff._raw(nl, n, d)


class Coeff:
    """An element of Q(q), stored as a canonical reduced fraction.

    Build with ``Coeff(3)``, ``Coeff(LaurentPoly(...))`` or the module
    constants; arithmetic uses the usual operators, ``bar()`` is q -> 1/q.
    """

    __slots__ = ("nlow", "num", "den", "_hash")

    def __init__(self, value=0, den=None):
        if isinstance(value, Coeff) and den is None:
            self.nlow, self.num, self.den = value.nlow, value.num, value.den
        else:
            if isinstance(value, int):
                value = LaurentPoly.monomial(value)
            if den is None:
                den = LaurentPoly.monomial(1)
            elif isinstance(den, int):
                den = LaurentPoly.monomial(den)
            c = _make(value.low, value.coeffs, den.low, den.coeffs)
            self.nlow, self.num, self.den = c.nlow, c.num, c.den
        self._hash = None

    @classmethod
    def _raw(cls, nlow, num, den):
        c = cls.__new__(cls)
        c.nlow = nlow
        c.num = num
        c.den = den
        c._hash = None
        return c

    @property
    def numerator(self) -> LaurentPoly:
        return LaurentPoly._raw(self.nlow if self.num else 0, self.num)

    @property
    def denominator(self) -> LaurentPoly:
        return LaurentPoly._raw(0, self.den)

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.nlow == 0 and self.num == (1,) and self.den == (1,)

    def is_laurent(self) -> bool:
        return self.den == (1,)

    def as_int(self):
        """The integer value if this coefficient is an integer, else None."""
        if not self.num:
            return 0
        if self.den == (1,) and self.nlow == 0 and len(self.num) == 1:
            return self.num[0]
        return None

    def sign(self) -> int:
        """Sign of the numerator's leading coefficient (0 for zero)."""
        if not self.num:
            return 0
        return 1 if self.num[-1] > 0 else -1

    def __add__(self, other):
        if not isinstance(other, Coeff):
            if isinstance(other, (int, LaurentPoly)):
                other = Coeff(other)
            else:
                return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        d1, d2 = self.den, other.den
        if d1 == d2:
            nl, n = _ladd(self.nlow, self.num, other.nlow, other.num)
            if d1 == (1,):
                return Coeff._raw(nl, n, d1) if n else ZERO
            return _make(nl, n, 0, d1)
        nl1, n1 = _lmul(self.nlow, self.num, 0, d2)
        nl2, n2 = _lmul(other.nlow, other.num, 0, d1)
        nl, n = _ladd(nl1, n1, nl2, n2)
        _, d = _lmul(0, d1, 0, d2)
        return _make(nl, n, 0, d)

    __radd__ = __add__

    def __neg__(self):
        return Coeff._raw(self.nlow, tuple(-x for x in self.num), self.den)

    def __sub__(self, other):
        if not isinstance(other, Coeff):
            if isinstance(other, (int, LaurentPoly)):
                other = Coeff(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Coeff):
            if isinstance(other, (int, LaurentPoly)):
                other = Coeff(other)
            else:
                return NotImplemented
        if not self.num or not other.num:
            return ZERO
        d1, d2 = self.den, other.den
        if d1 == (1,) and d2 == (1,):
            nl, n = _lmul(self.nlow, self.num, other.nlow, other.num)
            return Coeff._raw(nl, n, d1)
        # cross-cancel before multiplying to keep the gcd small
        n1, n2 = self.num, other.num
        if d2 != (1,):
            g = _pgcd(n1, d2)
            if g != (1,):
                n1, d2 = _pdivexact(n1, g), _pdivexact(d2, g)
        if d1 != (1,):
            g = _pgcd(n2, d1)
            if g != (1,):
                n2, d1 = _pdivexact(n2, g), _pdivexact(d1, g)
        nl, n = _lmul(self.nlow, n1, other.nlow, n2)
        _, d = _lmul(0, d1, 0, d2)
        if d[-1] < 0:
            n = tuple(-x for x in n)
            d = tuple(-x for x in d)
        return Coeff._raw(nl, n, d)

    __rmul__ = __mul__

    def inverse(self) -> "Coeff":
        if not self.num:
            raise ZeroDivisionError("inverse of the zero coefficient")
        return _make(0, self.den, self.nlow, self.num)

    def __truediv__(self, other):
        if not isinstance(other, Coeff):
            if isinstance(other, (int, LaurentPoly)):
                other = Coeff(other)
            else:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Coeff(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def bar(self) -> "Coeff":
        """Image under q -> 1/q."""
        if not self.num:
            return self
        n = self.numerator.bar()
        d = self.denominator.bar()
        return _make(n.low, n.coeffs, d.low, d.coeffs)

    def evaluate(self, x):
        return self.numerator.evaluate(x) / self.denominator.evaluate(x)

    def __eq__(self, other):
        if isinstance(other, Coeff):
            return self.nlow == other.nlow and self.num == other.num and self.den == other.den
        if isinstance(other, (int, LaurentPoly)):
            return self == Coeff(other)
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash((self.nlow, self.num, self.den))
        return h

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        return f"Coeff({self})"

    def __str__(self):
        num = format_laurent(self.nlow, self.num)
        if self.den == (1,):
            return num
        den = format_laurent(0, self.den)
        if len(self.num) > 1:
            num = f"({num})"
        if sum(1 for c in self.den if c) > 1:
            den = f"({den})"
        return f"{num}/{den}"


ZERO = Coeff._raw(0, (), (1,))
ONE = Coeff._raw(0, (1,), (1,))

_QPOW = {}


def q_power(k: int) -> Coeff:
    """q**k as a coefficient (cached; these are the workhorse scalars)."""
    c = _QPOW.get(k)
    if c is None:
        c = _QPOW[k] = Coeff._raw(k, (1,), (1,))
    return c


Q = q_power(1)
QBAR = q_power(-1)
DELTA = Coeff._raw(-1, (-1, 0, 1), (1,))  # q - 1/q
DELTA_BAR = DELTA.inverse()


def q_sub(a: int, sig: Signature) -> Coeff:
    """q_a: q for even indices, 1/q for odd ones."""
    return QBAR if sig.parity(a) else Q


def delta_sub(a: int, sig: Signature) -> Coeff:
    """Delta_a = q_a - 1/q_a = (-1)^[a] Delta."""
    return -DELTA if sig.parity(a) else DELTA


def delta_bar_sub(a: int, sig: Signature) -> Coeff:
    return -DELTA_BAR if sig.parity(a) else DELTA_BAR
