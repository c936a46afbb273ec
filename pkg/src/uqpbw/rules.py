"""Exchange rules for adjacent letters.

Every ordered pair of letters (x, y) falls into exactly one case, and the
case yields an exchange

    x y = lead * (y x) + corrections

with ``lead`` a scalar and ``corrections`` a linear combination of words.
Graded-commutator cases have lead = (-1)^{[x][y]} and corrections = [x, y];
q-commuting cases have no corrections.

Case identifiers follow the numbering of the relations they transcribe:

    E4         two Cartan letters
    E11        Cartan letter next to a non-Cartan letter (either order)
    SELF / E8  a non-Cartan letter next to itself (even / odd)
    E17        E^a_b, E^b_a
    E1         E^a_c, E^c_b with c strictly between a and b (the recursive
               definition, solved for the product)
    E18a-d     E^a_c, E^c_b with c outside [a, b]
    E19        shared row or column index lying strictly between the others
    E20a-d     shared row or column index outside the others
    E21        four distinct indices, nested or disjoint intervals
    E22a-d     four distinct, staggered intervals, same kind
    E23a-d     four distinct, staggered intervals, one raising one lowering

E1, E18 and E20 are stated for one letter order only; the reverse order is
the same case with ``swapped=True``.
"""

from dataclasses import dataclass
from typing import NamedTuple

from .algebra import Element, Gen, KPow, gen_parity
from .coefficients import ONE, ZERO, Coeff, delta_bar_sub, delta_sub, q_power
from .grading import Signature


class HalfIntegerPowerError(ArithmeticError):
    """A half-integer Cartan power produced q**(1/2), which is not a scalar here."""


@dataclass(frozen=True)
class RuleCase:
    case_id: str
    swapped: bool
    guard: str
    replacement: str

    @property
    def key(self):
        return (self.case_id, self.swapped)


class Match(NamedTuple):
    case: RuleCase
    binding: tuple  # ((name, index), ...) in the equation's own letters

    @property
    def case_id(self):
        return self.case.case_id

    @property
    def swapped(self):
        return self.case.swapped


_TABLE = [
    ("E4", False, "K_a^M, K_b^N", "K_b^N K_a^M"),
    ("E11", False, "K_a^N, E^b_c", "q_a^{N(d^a_b - d^a_c)} E^b_c K_a^N"),
    ("E11", True, "E^b_c, K_a^N", "q_a^{-N(d^a_b - d^a_c)} K_a^N E^b_c"),
    ("SELF", False, "E^a_b, E^a_b with [E^a_b] = 0", "E^a_b E^a_b"),
    ("E8", False, "E^a_b, E^a_b with [E^a_b] = 1", "0"),
    ("E17", False, "E^a_b, E^b_a", "(-)^{[E^a_b]} E^b_a E^a_b + Dbar_a (K_a Kbar_b - Kbar_a K_b)"),
    ("E1", False, "E^a_c, E^c_b, c strictly between a and b", "q_c^{S^a_b} E^c_b E^a_c + E^a_b"),
    ("E1", True, "E^c_b, E^a_c, c strictly between a and b", "q_c^{-S^a_b} (E^a_c E^c_b - E^a_b)"),
]
for _s, _g, _r in (
    ("a", "c<b<a", "Kbar_b K_c E^a_b"),
    ("b", "c<a<b", "E^a_b K_a Kbar_c"),
    ("c", "b<a<c", "E^a_b Kbar_a K_c"),
    ("d", "a<b<c", "K_b Kbar_c E^a_b"),
):
    _TABLE.append((f"E18{_s}", False, f"E^a_c, E^c_b, {_g}", f"sign E^c_b E^a_c + {_r}"))
    _TABLE.append((f"E18{_s}", True, f"E^c_b, E^a_c, {_g}", f"sign E^a_c E^c_b - sign * ({_r})"))
_TABLE.append(("E19", False, "E^c_a, E^c_b or E^a_c, E^b_c with c strictly between a and b", "E^c_b E^c_a (resp. E^b_c E^a_c)"))
for _s, _g, _r in (
    ("a", "E^c_a, E^c_b, a<b<c", "(-)^{[E^c_b]} q_c E^c_b E^c_a"),
    ("b", "E^c_a, E^c_b, c<a<b", "(-)^{[E^c_a]} q_c E^c_b E^c_a"),
    ("c", "E^a_c, E^b_c, a<b<c", "(-)^{[E^b_c]} q_c E^b_c E^a_c"),
    ("d", "E^a_c, E^b_c, c<a<b", "(-)^{[E^a_c]} q_c E^b_c E^a_c"),
):
    _TABLE.append((f"E20{_s}", False, _g, _r))
    _TABLE.append((f"E20{_s}", True, _g.replace("a<b", "b<a").replace("c<a<b", "c<b<a"), "inverse factor"))
_TABLE.append(("E21", False, "four distinct indices, intervals nested or disjoint", "sign y x"))
for _s, _g, _r in (
    ("a", "E^a_b, E^c_d, a<c<b<d", "+Delta_b E^a_d E^c_b"),
    ("b", "E^a_b, E^c_d, c<a<d<b", "-Delta_d E^a_d E^c_b"),
    ("c", "E^b_a, E^d_c, a<c<b<d", "+Delta_b E^d_a E^b_c"),
    ("d", "E^b_a, E^d_c, c<a<d<b", "-Delta_d E^d_a E^b_c"),
):
    _TABLE.append((f"E22{_s}", False, _g, f"sign y x {_r}"))
for _s, _g, _r in (
    ("a", "E^a_b, E^d_c, a<c<b<d", "-Delta_b Kbar_b K_c E^a_c E^d_b"),
    ("b", "E^a_b, E^d_c, c<a<d<b", "+Delta_d E^d_b E^a_c Kbar_a K_d"),
    ("c", "E^b_a, E^c_d, a<c<b<d", "-Delta_c E^b_d E^c_a Kbar_c K_b"),
    ("d", "E^b_a, E^c_d, c<a<d<b", "+Delta_a Kbar_d K_a E^c_a E^b_d"),
):
    _TABLE.append((f"E23{_s}", False, _g, f"sign y x {_r}"))

CASES = {(cid, sw): RuleCase(cid, sw, g, r) for cid, sw, g, r in _TABLE}


def _case(cid, swapped=False):
    return CASES[(cid, swapped)]


def _kp(a):
    return KPow(a, 2)


def _km(a):
    return KPow(a, -2)


def _qsub_pow(sig, c, s):
    """q_c ** s."""
    return q_power(-s if sig.parities[c] else s)


def _sign(odd):
    return -1 if odd else 1


# -- classification ------------------------------------------------------


def classify(x, y, sig: Signature) -> Match:
    """The unique rule case matching the ordered pair (x, y)."""
    xg, yg = len(x) == 2, len(y) == 2
    if not xg and not yg:
        return Match(_case("E4"), (("a", x.index), ("b", y.index)))
    if not xg:
        return Match(_case("E11"), (("a", x.index), ("b", y[0]), ("c", y[1])))
    if not yg:
        return Match(_case("E11", True), (("a", y.index), ("b", x[0]), ("c", x[1])))
    p, r = x
    s, t = y
    if x == y:
        cid = "E8" if gen_parity(x, sig) else "SELF"
        return Match(_case(cid), (("a", p), ("b", r)))
    if p == t and r == s:
        return Match(_case("E17"), (("a", p), ("b", r)))
    if r == s:
        # x = E^a_c, y = E^c_b
        return _pivot_case(a=p, c=r, b=t, swapped=False)
    if p == t:
        # x = E^c_b, y = E^a_c
        return _pivot_case(a=s, c=p, b=r, swapped=True)
    if p == s:
        # shared row c: x = E^c_a, y = E^c_b
        return _shared_case(c=p, a=r, b=t, row=True)
    if r == t:
        # shared column c: x = E^a_c, y = E^b_c
        return _shared_case(c=r, a=p, b=s, row=False)
    return _four_case(x, y)


def _pivot_case(a, c, b, swapped):
    bind = (("a", a), ("b", b), ("c", c))
    if min(a, b) < c < max(a, b):
        return Match(_case("E1", swapped), bind)
    if c < b < a:
        s = "a"
    elif c < a < b:
        s = "b"
    elif b < a < c:
        s = "c"
    else:  # a < b < c
        s = "d"
    return Match(_case(f"E18{s}", swapped), bind)


def _shared_case(c, a, b, row):
    if min(a, b) < c < max(a, b):
        return Match(_case("E19"), (("a", a), ("b", b), ("c", c)))
    swapped = a > b
    if swapped:
        a, b = b, a
    # a < b from here on, as in the equations
    if row:
        s = "a" if b < c else "b"
    else:
        s = "c" if b < c else "d"
    return Match(_case(f"E20{s}", swapped), (("a", a), ("b", b), ("c", c)))


def _four_case(x, y):
    a, b = sorted(x)
    c, d = sorted(y)
    bind = (("a", a), ("b", b), ("c", c), ("d", d))
    if a < c < b < d:
        first = True
    elif c < a < d < b:
        first = False
    else:
        return Match(_case("E21"), bind)
    xr, yr = x.is_raising, y.is_raising
    if xr == yr:
        s = ("a" if first else "b") if xr else ("c" if first else "d")
        return Match(_case(f"E22{s}"), bind)
    s = ("a" if first else "b") if xr else ("c" if first else "d")
    return Match(_case(f"E23{s}"), bind)


# -- literal right-hand sides -----------------------------------------------


def e17_rhs(sig, a, b) -> dict:
    """[E^a_b, E^b_a] = Dbar_a (K_a Kbar_b - Kbar_a K_b)."""
    db = delta_bar_sub(a, sig)
    return {(_kp(a), _km(b)): db, (_km(a), _kp(b)): -db}


def e18_rhs(sub, a, b, c) -> dict:
    """[E^a_c, E^c_b] for c outside [a, b]."""
    g = Gen(a, b)
    if sub == "a":
        w = (_km(b), _kp(c), g)
    elif sub == "b":
        w = (g, _kp(a), _km(c))
    elif sub == "c":
        w = (g, _km(a), _kp(c))
    else:
        w = (_kp(b), _km(c), g)
    return {w: ONE}


def e20_factor(sub, sig, a, b, c) -> Coeff:
    """kappa-like factor of the literal q-commutation (a < b)."""
    par = sig.parities
    if sub == "a":
        odd = par[c] ^ par[b]
    elif sub == "b":
        odd = par[c] ^ par[a]
    elif sub == "c":
        odd = par[b] ^ par[c]
    else:
        odd = par[a] ^ par[c]
    f = _qsub_pow(sig, c, 1)
    return -f if odd else f


def e22_rhs(sub, sig, a, b, c, d) -> dict:
    if sub == "a":
        return {(Gen(a, d), Gen(c, b)): delta_sub(b, sig)}
    if sub == "b":
        return {(Gen(a, d), Gen(c, b)): -delta_sub(d, sig)}
    if sub == "c":
        return {(Gen(d, a), Gen(b, c)): delta_sub(b, sig)}
    return {(Gen(d, a), Gen(b, c)): -delta_sub(d, sig)}


def e23_rhs(sub, sig, a, b, c, d) -> dict:
    if sub == "a":
        return {(_km(b), _kp(c), Gen(a, c), Gen(d, b)): -delta_sub(b, sig)}
    if sub == "b":
        return {(Gen(d, b), Gen(a, c), _km(a), _kp(d)): delta_sub(d, sig)}
    if sub == "c":
        return {(Gen(b, d), Gen(c, a), _km(c), _kp(b)): -delta_sub(c, sig)}
    return {(_km(d), _kp(a), Gen(c, a), Gen(b, d)): delta_sub(a, sig)}


def cartan_factor(k: KPow, g, sig: Signature) -> Coeff:
    """f with K_a^N E^b_c = f E^b_c K_a^N."""
    a, h = k.index, k.halves
    d = (a == g[0]) - (a == g[1])
    if not d or not h:
        return ONE
    e = h * d
    if e & 1:
        raise HalfIntegerPowerError(f"moving {k} past E[{g[0]},{g[1]}] needs q^({e}/2)")
    e //= 2
    return q_power(-e if sig.parities[a] else e)


# -- exchange ------------------------------------------------------------------


def _neg_scaled(terms, s):
    return {w: -c if s < 0 else c for w, c in terms.items()}


def exchange_parts(x, y, sig: Signature):
    """(lead, corrections) with x y = lead * y x + corrections."""
    m = classify(x, y, sig)
    cid = m.case.case_id
    b = dict(m.binding)
    if cid == "E4":
        return ONE, {}
    if cid == "E11":
        f = cartan_factor(x, y, sig) if not m.case.swapped else cartan_factor(y, x, sig).inverse()
        return f, {}
    if cid == "SELF":
        return ONE, {}
    if cid == "E8":
        return ZERO, {}
    s = _sign(gen_parity(x, sig) & gen_parity(y, sig))
    lead = ONE if s > 0 else -ONE
    if cid == "E17":
        return lead, e17_rhs(sig, x[0], x[1])
    if cid == "E1":
        a, bb, c = b["a"], b["b"], b["c"]
        sgn = 1 if a > bb else -1
        if not m.case.swapped:
            return _qsub_pow(sig, c, sgn), {(Gen(a, bb),): ONE}
        f = _qsub_pow(sig, c, -sgn)
        return f, {(Gen(a, bb),): -f}
    if cid.startswith("E18"):
        rhs = e18_rhs(cid[-1], b["a"], b["b"], b["c"])
        if not m.case.swapped:
            return lead, rhs
        return lead, _neg_scaled(rhs, -s)
    if cid == "E19" or cid == "E21":
        return lead, {}
    if cid.startswith("E20"):
        f = e20_factor(cid[-1], sig, b["a"], b["b"], b["c"])
        return (f.inverse() if m.case.swapped else f), {}
    if cid.startswith("E22"):
        return lead, e22_rhs(cid[-1], sig, b["a"], b["b"], b["c"], b["d"])
    if cid.startswith("E23"):
        return lead, e23_rhs(cid[-1], sig, b["a"], b["b"], b["c"], b["d"])
    raise AssertionError(f"unhandled case {cid}")  # pragma: no cover


def exchange(x, y, sig: Signature) -> Element:
    """x*y rewritten as lead*(y x) + corrections, as an Element."""
    lead, corr = exchange_parts(x, y, sig)
    terms = dict(corr)
    if lead.num:
        w = (y, x)
        terms[w] = terms.get(w, ZERO) + lead
    return Element(sig, terms)


def commutator(x, y, sig: Signature) -> Element:
    """[x, y] in the algebra (graded), read off the exchange rule."""
    lead, corr = exchange_parts(x, y, sig)
    s = _sign(_letter_parity(x, sig) & _letter_parity(y, sig))
    terms = dict(corr)
    c = lead - s
    if c.num:
        w = (y, x)
        terms[w] = terms.get(w, ZERO) + c
    if x == y and lead.is_zero():
        # odd square: [x, x] = 2 x x = 0
        return Element.zero(sig)
    return Element(sig, terms)


def _letter_parity(x, sig):
    return gen_parity(x, sig) if len(x) == 2 else 0


# -- condensed forms ---------------------------------------------------------


def median(a, b, c):
    return sorted((a, b, c))[1]


def kappa(a, b, c, sig: Signature) -> Coeff:
    """Factor in E^a_c E^b_c = kappa E^b_c E^a_c (and E^c_a E^c_b likewise)."""
    z = median(a, b, c)
    if z == c:
        return ONE
    par = sig.parities
    odd = par[z] ^ par[c]
    s = 1 if a > b else -1
    f = _qsub_pow(sig, c, -s)
    return -f if odd else f


def condensed_commutator(x: Gen, y: Gen, sig: Signature) -> dict:
    """[E^a_b, E^c_d] for four distinct indices, from the 8-entry summary table."""
    a, b = x
    c, d = y
    if a < c < b < d:
        return {(Gen(a, d), Gen(c, b)): delta_sub(b, sig)}
    if c < a < d < b:
        return {(Gen(a, d), Gen(c, b)): -delta_sub(d, sig)}
    if b < d < a < c:
        return {(Gen(c, b), Gen(a, d)): delta_sub(a, sig)}
    if d < b < c < a:
        return {(Gen(c, b), Gen(a, d)): -delta_sub(c, sig)}
    if a < d < b < c:
        return {(_km(b), _kp(d), Gen(a, d), Gen(c, b)): -delta_sub(b, sig)}
    if d < a < c < b:
        return {(Gen(c, b), Gen(a, d), _km(a), _kp(c)): delta_sub(c, sig)}
    if b < c < a < d:
        return {(Gen(a, d), Gen(c, b), _km(c), _kp(a)): -delta_sub(c, sig)}
    if c < b < d < a:
        return {(_km(d), _kp(b), Gen(c, b), Gen(a, d)): delta_sub(b, sig)}
    return {}


# -- table dump ------------------------------------------------------------------


def dump_rules() -> list:
    """Machine-readable rule table (for docs and audits)."""
    return [
        {"caseId": c.case_id, "swapped": c.swapped, "guard": c.guard, "replacement": c.replacement}
        for c in CASES.values()
    ]


class Rulebook:
    """Per-signature memo of exchange results (the table itself is immutable)."""

    def __init__(self, sig: Signature):
        self.sig = sig
        self._cache = {}

    def exchange(self, x, y):
        key = (x, y)
        r = self._cache.get(key)
        if r is None:
            r = self._cache[key] = exchange_parts(x, y, self.sig)
        return r
