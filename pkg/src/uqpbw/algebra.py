"""Words, elements and the graded structure of U_q[gl(m|n)].

Elements are finite sums ``coeff * word``.  A word is a tuple of letters,
each either a non-Cartan generator ``Gen(row, col)`` or a Cartan power
``KPow(index, halves)`` meaning K_index ** (halves / 2).  Products never
apply relations: they concatenate words, so a raw product may interleave
Cartan and non-Cartan letters.  ``normal.normal_order`` produces the
canonical shape (lowering letters, one Cartan block, raising letters).
"""

from dataclasses import dataclass
from typing import NamedTuple

from .coefficients import ONE, ZERO, Coeff, LaurentPoly
from .grading import Signature


class SignatureMismatch(ValueError):
    pass


class Gen(NamedTuple):
    """E^row_col with row != col; raising if row < col."""

    row: int
    col: int

    @property
    def is_raising(self) -> bool:
        return self.row < self.col

    @property
    def is_lowering(self) -> bool:
        return self.row > self.col

    @property
    def height(self) -> int:
        return abs(self.row - self.col)

    @property
    def is_simple(self) -> bool:
        return abs(self.row - self.col) == 1

    def flipped(self) -> "Gen":
        return Gen(self.col, self.row)

    def __str__(self):
        return f"E[{self.row},{self.col}]"


class KPow(NamedTuple):
    """K_index ** (halves / 2).

    The trailing constant field makes KPow a 3-tuple, so a KPow can never
    compare equal to a Gen inside a word key.
    """

    index: int
    halves: int
    tag: str = "K"

    def __str__(self):
        h = self.halves
        if h == 2:
            return f"K[{self.index}]"
        if h % 2 == 0:
            return f"K[{self.index}]^{h // 2}"
        return f"K[{self.index}]^({h}/2)"


def is_gen(letter) -> bool:
    return len(letter) == 2


def gen_parity(g: Gen, sig: Signature) -> int:
    p = sig.parities
    return (p[g.row] + p[g.col]) & 1


def grade(word, sig: Signature) -> int:
    """Z_2 degree of a word; Cartan letters are even."""
    p = sig.parities
    d = 0
    for x in word:
        if len(x) == 2:
            d += p[x[0]] + p[x[1]]
    return d & 1


def weight(word, sig: Signature) -> tuple:
    """gl-weight: sum of e_row - e_col over the non-Cartan letters."""
    w = [0] * (sig.size + 1)
    for x in word:
        if len(x) == 2:
            w[x[0]] += 1
            w[x[1]] -= 1
    return tuple(w[1:])


def check_letter(letter, sig: Signature) -> None:
    if len(letter) == 2:
        a, b = letter
        sig.check_index(a)
        sig.check_index(b)
        if a == b:
            raise ValueError(f"E[{a},{b}] is not a generator (row must differ from column)")
    else:
        sig.check_index(letter.index)


@dataclass(frozen=True)
class Monomial:
    """One term ``coeff * word`` of an Element."""

    coeff: Coeff
    word: tuple

    @property
    def gens(self) -> tuple:
        return tuple(x for x in self.word if len(x) == 2)

    def cartan(self, sig: Signature) -> tuple:
        """Total Cartan exponent (in halves) per index 1..m+n."""
        v = [0] * (sig.size + 1)
        for x in self.word:
            if len(x) == 3:
                v[x.index] += x.halves
        return tuple(v[1:])


def _coerce_coeff(c):
    if isinstance(c, Coeff):
        return c
    if isinstance(c, (int, LaurentPoly)):
        return Coeff(c)
    raise TypeError(f"not a scalar: {c!r}")


class Element:
    """A finite linear combination of words over one signature.

    ``terms`` maps word -> nonzero Coeff and must not be mutated after
    construction.
    """

    __slots__ = ("sig", "terms")

    def __init__(self, sig: Signature, terms=None):
        self.sig = sig
        if terms:
            self.terms = {w: c for w, c in terms.items() if c.num}
        else:
            self.terms = {}

    @classmethod
    def _wrap(cls, sig, terms):
        # trusted: terms already zero-free
        e = cls.__new__(cls)
        e.sig = sig
        e.terms = terms
        return e

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, sig):
        return cls._wrap(sig, {})

    @classmethod
    def identity(cls, sig):
        return cls._wrap(sig, {(): ONE})

    @classmethod
    def scalar(cls, sig, c):
        c = _coerce_coeff(c)
        return cls._wrap(sig, {(): c} if c.num else {})

    @classmethod
    def word(cls, sig, word, coeff=ONE):
        word = tuple(word)
        for x in word:
            check_letter(x, sig)
        coeff = _coerce_coeff(coeff)
        return cls._wrap(sig, {word: coeff} if coeff.num else {})

    @classmethod
    def gen(cls, sig, a, b):
        return cls.word(sig, (Gen(a, b),))

    @classmethod
    def cartan(cls, sig, a, halves=2):
        """K_a ** (halves / 2); halves=-2 is the inverse K_a."""
        sig.check_index(a)
        if halves == 0:
            return cls.identity(sig)
        return cls._wrap(sig, {(KPow(a, halves),): ONE})

    # -- queries ----------------------------------------------------------

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def items(self):
        return self.terms.items()

    def monomials(self):
        from .exprio import word_sort_key

        return [Monomial(self.terms[w], w) for w in sorted(self.terms, key=word_sort_key)]

    def coeff(self, word) -> Coeff:
        return self.terms.get(tuple(word), ZERO)

    def is_homogeneous(self) -> bool:
        return len({grade(w, self.sig) for w in self.terms}) <= 1

    # -- arithmetic -------------------------------------------------------

    def _same(self, other):
        if other.sig != self.sig:
            raise SignatureMismatch(f"{self.sig} vs {other.sig}")

    def __add__(self, other):
        if not isinstance(other, Element):
            try:
                other = Element.scalar(self.sig, other)
            except TypeError:
                return NotImplemented
        self._same(other)
        return Element._wrap(self.sig, add_terms(self.terms, other.terms))

    __radd__ = __add__

    def __neg__(self):
        return Element._wrap(self.sig, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Element):
            try:
                other = Element.scalar(self.sig, other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Element":
        c = _coerce_coeff(c)
        if not c.num:
            return Element.zero(self.sig)
        if c.is_one():
            return self
        return Element._wrap(self.sig, {w: v * c for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers of elements are not defined")
        out = Element.identity(self.sig)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.sig == other.sig and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.sig, frozenset(self.terms.items())))

    def __str__(self):
        from .exprio import print_element

        return print_element(self)

    def __repr__(self):
        return f"Element({self.sig}, {self})"


def add_terms(a: dict, b: dict, scale=None) -> dict:
    """a + scale*b as a fresh zero-free dict."""
    out = dict(a)
    for w, c in b.items():
        if scale is not None:
            c = c * scale
        old = out.get(w)
        if old is None:
            out[w] = c
        else:
            s = old + c
            if s.num:
                out[w] = s
            else:
                del out[w]
    return out


def multiply(x: Element, y: Element) -> Element:
    """Free product: concatenate words, multiply coefficients, no relations."""
    if x.sig != y.sig:
        raise SignatureMismatch(f"{x.sig} vs {y.sig}")
    out = {}
    for w1, c1 in x.terms.items():
        for w2, c2 in y.terms.items():
            w = w1 + w2
            c = c1 * c2
            old = out.get(w)
            if old is None:
                out[w] = c
            else:
                s = old + c
                if s.num:
                    out[w] = s
                else:
                    del out[w]
    return Element._wrap(x.sig, out)


def graded_commutator(x: Element, y: Element) -> Element:
    """[x, y] = xy - (-1)^{[x][y]} yx, extended bilinearly over monomials."""
    if x.sig != y.sig:
        raise SignatureMismatch(f"{x.sig} vs {y.sig}")
    sig = x.sig
    out = {}
    for w1, c1 in x.terms.items():
        g1 = grade(w1, sig)
        for w2, c2 in y.terms.items():
            c = c1 * c2
            odd = g1 & grade(w2, sig)
            for w, s in ((w1 + w2, c), (w2 + w1, c if odd else -c)):
                old = out.get(w)
                if old is None:
                    out[w] = s
                else:
                    t = old + s
                    if t.num:
                        out[w] = t
                    else:
                        del out[w]
    return Element._wrap(sig, out)


def omega_word(word) -> tuple:
    out = []
    for x in reversed(word):
        if len(x) == 2:
            out.append(Gen(x[1], x[0]))
        else:
            out.append(KPow(x.index, -x.halves))
    return tuple(out)


def omega(x: Element) -> Element:
    """The ungraded antiautomorphism: E^a_b -> E^b_a, K -> 1/K, q -> 1/q."""
    out = {}
    for w, c in x.terms.items():
        out[omega_word(w)] = c.bar()
    return Element._wrap(x.sig, out)


def E(sig, a, b) -> Element:
    return Element.gen(sig, a, b)


def K(sig, a, power=1) -> Element:
    """K_a ** power, power an int or a half-integer (Fraction or float .5)."""
    halves = 2 * power
    if halves != int(halves):
        raise ValueError("Cartan powers must be multiples of 1/2")
    return Element.cartan(sig, a, int(halves))
