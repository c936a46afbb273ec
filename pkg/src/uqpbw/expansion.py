"""Rewriting nonsimple generators as words in simple ones.

E^a_b with |a - b| > 1 is replaced, recursively, by

    E^a_c E^c_b - q_c^{S^a_b} E^c_b E^a_c,      S^a_b = sign(a - b),

for a pivot c strictly between a and b.  The algebra element does not
depend on c; which one is used is a ``PivotStrategy``.
"""

from functools import lru_cache

from .algebra import Element, Gen
from .coefficients import ONE, q_power
from .grading import Signature


def height(g) -> int:
    """|row - col|; 0 for Cartan letters."""
    if len(g) == 3:
        return 0
    return abs(g[0] - g[1])


def pivot_row(a, b):
    """Split off the simple letter at the row end: c = a - S^a_b."""
    return a - 1 if a > b else a + 1


def pivot_col(a, b):
    """Split off the simple letter at the column end: c = b + S^a_b."""
    return b + 1 if a > b else b - 1


PIVOTS = {"row": pivot_row, "col": pivot_col}


def admissible_pivots(g):
    a, b = g
    return list(range(min(a, b) + 1, max(a, b)))


def _resolve(strategy):
    if callable(strategy):
        return strategy
    try:
        return PIVOTS[strategy]
    except KeyError:
        raise ValueError(f"unknown pivot strategy {strategy!r} (use 'row' or 'col')") from None


@lru_cache(maxsize=None)
def _expand_gen(sig: Signature, g, strategy) -> tuple:
    a, b = g
    if abs(a - b) <= 1:
        return (((g,), ONE),)
    return tuple(_split(sig, g, strategy(a, b), strategy).items())


def _split(sig, g, c, strategy):
    """Expansion of g at top-level pivot c; sub-letters use ``strategy``."""
    a, b = g
    if not min(a, b) < c < max(a, b):
        raise ValueError(f"pivot {c} is not strictly between {a} and {b}")
    s = 1 if a > b else -1
    f = -q_power(-s if sig.parities[c] else s)
    left = dict(_expand_gen(sig, Gen(a, c), strategy))
    right = dict(_expand_gen(sig, Gen(c, b), strategy))
    out = {}
    for w1, c1 in left.items():
        for w2, c2 in right.items():
            for w, v in ((w1 + w2, c1 * c2), (w2 + w1, f * c1 * c2)):
                old = out.get(w)
                if old is None:
                    out[w] = v
                else:
                    t = old + v
                    if t.num:
                        out[w] = t
                    else:
                        del out[w]
    return out


def expand_ns(x: Element, strategy="row") -> Element:
    """Replace every nonsimple letter of x by its expansion in simple letters."""
    strategy = _resolve(strategy)
    sig = x.sig
    out = {}
    for w, c in x.terms.items():
        cur = {(): c}
        for letter in w:
            if len(letter) == 3 or abs(letter[0] - letter[1]) <= 1:
                cur = {u + (letter,): v for u, v in cur.items()}
                continue
            nxt = {}
            for u, v in cur.items():
                for e, ec in _expand_gen(sig, letter, strategy):
                    key = u + e
                    t = v * ec
                    old = nxt.get(key)
                    if old is None:
                        nxt[key] = t
                    else:
                        t = old + t
                        if t.num:
                            nxt[key] = t
                        else:
                            del nxt[key]
            cur = nxt
        for u, v in cur.items():
            old = out.get(u)
            if old is None:
                out[u] = v
            else:
                t = old + v
                if t.num:
                    out[u] = t
                else:
                    del out[u]
    return Element._wrap(sig, out)


def expand_at_pivot(sig: Signature, g, c, strategy="row") -> Element:
    """Expansion of one generator using pivot c at the top level only."""
    return Element._wrap(sig, _split(sig, Gen(*g), c, _resolve(strategy)))


def expand_all_pivots(sig: Signature, g, strategy="row") -> dict:
    """{pivot: expansion} over every admissible top-level pivot of g."""
    g = Gen(*g)
    if g.height <= 1:
        return {}
    return {c: expand_at_pivot(sig, g, c, strategy) for c in admissible_pivots(g)}
