"""Text form of coefficients and elements.

Grammar (whitespace is insignificant)::

    element := ['-'] term (('+' | '-') term)*
    term    := factor (('*' | '/') factor)*
    factor  := atom ['^' power]
    power   := ['-'] int | '(' ['-'] int '/' '2' ')'
    atom    := 'q' | int | 'E[' int ',' int ']' | 'K[' int ']' | '(' element ')'

Division is only by scalars.  Half powers are only meaningful on K[a].
``print_element`` emits exactly this grammar, and ``parse_element`` of the
printed text gives back the same Element.
"""

import re

from .algebra import Element, Gen, KPow, check_letter
from .coefficients import ONE, Coeff, LaurentPoly, format_laurent, q_power


class ParseError(ValueError):
    def __init__(self, msg, pos, text=""):
        self.pos = pos
        self.text = text
        where = f" at position {pos}" if pos is not None else ""
        super().__init__(f"{msg}{where}")


_TOKEN = re.compile(r"\s*(?:(\d+)|(E\[)|(K\[)|(q)|([-+*/^(),\]]))")


def _tokenize(text):
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(("int", int(m.group(1)), start))
        else:
            toks.append((m.group(m.lastindex), None, start))
        pos = m.end()
    toks.append(("end", None, n))
    return toks


class _Parser:
    def __init__(self, text, sig):
        self.text = text
        self.sig = sig
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i][0]

    def pos(self):
        return self.toks[self.i][2]

    def take(self, kind):
        t = self.toks[self.i]
        if t[0] != kind:
            shown = "end of input" if t[0] == "end" else repr(t[0] if t[1] is None else t[1])
            raise ParseError(f"expected {kind!r}, found {shown}", t[2], self.text)
        self.i += 1
        return t

    def error(self, msg):
        return ParseError(msg, self.pos(), self.text)

    def parse(self):
        e = self.element()
        if self.peek() != "end":
            raise self.error(f"unexpected {self.peek()!r}")
        return e

    def element(self):
        neg = False
        if self.peek() == "-":
            self.take("-")
            neg = True
        acc = self.term()
        if neg:
            acc = -acc
        while self.peek() in ("+", "-"):
            op = self.take(self.peek())[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take(self.peek())[0]
            p = self.pos()
            f = self.factor()
            if op == "*":
                acc = acc * f
            else:
                s = _as_scalar(f)
                if s is None:
                    raise ParseError("division by a non-scalar", p, self.text)
                if s.is_zero():
                    raise ParseError("division by zero", p, self.text)
                acc = acc.scale(s.inverse())
        return acc

    def power(self):
        """Exponent in halves."""
        if self.peek() == "(":
            self.take("(")
            sign = -1 if self.peek() == "-" and self.take("-") else 1
            p = self.pos()
            num = self.take("int")[1]
            self.take("/")
            den = self.take("int")[1]
            if den not in (1, 2):
                raise ParseError("malformed exponent: only halves are allowed", p, self.text)
            self.take(")")
            return sign * num * (2 // den)
        sign = 1
        if self.peek() == "-":
            self.take("-")
            sign = -1
        if self.peek() != "int":
            raise self.error("malformed exponent")
        return 2 * sign * self.take("int")[1]

    def factor(self):
        kind = self.peek()
        start = self.pos()
        if kind == "K[":
            self.take("K[")
            a = self.take("int")[1]
            self.take("]")
            halves = 2
            if self.peek() == "^":
                self.take("^")
                halves = self.power()
            try:
                self.sig.check_index(a)
            except IndexError as exc:
                raise ParseError(str(exc), start, self.text) from None
            return Element.cartan(self.sig, a, halves)
        base = self.atom()
        if self.peek() != "^":
            return base
        self.take("^")
        p = self.pos()
        halves = self.power()
        if halves % 2:
            raise ParseError("malformed exponent: half powers apply to K[a] only", p, self.text)
        k = halves // 2
        if k >= 0:
            return base**k
        s = _as_scalar(base)
        if s is None or s.is_zero():
            raise ParseError("negative power of a non-invertible factor", p, self.text)
        return Element.scalar(self.sig, s.inverse() ** (-k))

    def atom(self):
        kind = self.peek()
        start = self.pos()
        if kind == "int":
            return Element.scalar(self.sig, self.take("int")[1])
        if kind == "q":
            self.take("q")
            return Element.scalar(self.sig, q_power(1))
        if kind == "E[":
            self.take("E[")
            a = self.take("int")[1]
            self.take(",")
            b = self.take("int")[1]
            self.take("]")
            try:
                check_letter(Gen(a, b), self.sig)
            except (IndexError, ValueError) as exc:
                raise ParseError(str(exc), start, self.text) from None
            return Element.gen(self.sig, a, b)
        if kind == "(":
            self.take("(")
            e = self.element()
            self.take(")")
            return e
        if kind == "end":
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {kind!r}")


def _as_scalar(e: Element):
    if not e.terms:
        return Coeff(0)
    if len(e.terms) == 1 and () in e.terms:
        return e.terms[()]
    return None


def parse_element(text: str, sig) -> Element:
    """Parse text into a raw (unnormalized) Element over sig."""
    return _Parser(text, sig).parse()


def parse_coeff(text: str, sig=None) -> Coeff:
    from .grading import Signature

    e = parse_element(text, sig or Signature(1, 1))
    s = _as_scalar(e)
    if s is None:
        raise ParseError("not a scalar expression", None, text)
    return s


# -- printing -----------------------------------------------------------------


def letter_print_key(x):
    if len(x) == 3:
        return (1, x[0], -x[1])
    return (0, x[0], x[1])


def word_sort_key(word):
    """Print order: more non-Cartan letters first, then letter by letter."""
    ngen = sum(1 for x in word if len(x) == 2)
    return (-ngen, len(word), tuple(letter_print_key(x) for x in word))


def print_word(word) -> str:
    return "*".join(str(x) for x in word)


def _coeff_atom(c: Coeff) -> str:
    """c printed so that it can be followed by '*word' (c positive-leading)."""
    if c.den == (1,):
        nz = sum(1 for x in c.num if x)
        s = format_laurent(c.nlow, c.num)
        return s if nz == 1 else f"({s})"
    return f"({c})"


def print_coeff(c: Coeff) -> str:
    return str(c)


def print_element(x: Element) -> str:
    if not x.terms:
        return "0"
    parts = []
    for w in sorted(x.terms, key=word_sort_key):
        c = x.terms[w]
        neg = c.sign() < 0
        if neg:
            c = -c
        if not w:
            body = _coeff_atom(c)
        elif c.is_one():
            body = print_word(w)
        else:
            body = f"{_coeff_atom(c)}*{print_word(w)}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts)


__all__ = [
    "ParseError",
    "parse_element",
    "parse_coeff",
    "print_element",
    "print_coeff",
    "print_word",
    "word_sort_key",
    "Coeff",
    "LaurentPoly",
    "ONE",
    "KPow",
]
