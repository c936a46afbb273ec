"""PBW straightening.

Normal words have the shape

    (lowering letters) (Cartan block) (raising letters)

where lowering letters E^a_b (a > b) are sorted by (b, a), raising letters
by (a, b), the Cartan block holds at most one KPow per index in increasing
index order with nonzero exponent, and an odd letter never repeats.

A word is normalized by inserting its letters one at a time, right to
left, into an already normal word.  Inserting a letter sifts it rightward
through exchanges; corrections are inserted the same way.  Both levels are
memoized per signature, which is what makes the large sweeps affordable.
"""

import sys
from dataclasses import dataclass

from .algebra import Element, KPow, gen_parity, grade, weight
from .coefficients import ONE
from .grading import Signature
from .rules import Rulebook, cartan_factor

DEFAULT_MAX_STEPS = 2_000_000


class BudgetExceeded(RuntimeError):
    """The rewrite-step budget ran out; ``word`` is where it happened."""

    def __init__(self, word, steps):
        super().__init__(f"rewrite budget of {steps} steps exceeded while normalizing {word_str(word)}")
        self.word = word
        self.steps = steps


def word_str(word):
    return "*".join(str(x) for x in word) or "1"


@dataclass(frozen=True)
class NormalOrderConfig:
    """Straightening options.

    The letter order is fixed: lowering < Cartan < raising; lowering
    E^a_b keyed by (b, a), raising E^a_b by (a, b), both lexicographic.
    """

    max_rewrite_steps: int = DEFAULT_MAX_STEPS
    order_convention: str = "lowering(b,a) < cartan < raising(a,b)"


def letter_key(x):
    if len(x) == 3:
        return (1, x[0], 0)
    a, b = x
    return (0, b, a) if a > b else (2, a, b)


def _add_into(acc, word, c):
    old = acc.get(word)
    if old is None:
        acc[word] = c
    else:
        s = old + c
        if s.num:
            acc[word] = s
        else:
            del acc[word]


class Normalizer:
    """Straightening engine for one signature (holds the memo tables)."""

    def __init__(self, sig: Signature, config: NormalOrderConfig = None):
        self.sig = sig
        self.config = config or NormalOrderConfig()
        self.rules = Rulebook(sig)
        self._insert_memo = {}
        self._pending = set()
        self.steps = 0
        self._limit = self.config.max_rewrite_steps

    # public ---------------------------------------------------------------

    def normal_order(self, x: Element) -> Element:
        if x.sig != self.sig:
            raise ValueError(f"element over {x.sig} given to normalizer for {self.sig}")
        self.steps = 0
        self._pending.clear()
        acc = {}
        old_limit = sys.getrecursionlimit()
        if old_limit < 20000:
            sys.setrecursionlimit(20000)
        try:
            for w, c in x.terms.items():
                for w2, c2 in self.normal_word(w).items():
                    _add_into(acc, w2, c * c2)
        finally:
            sys.setrecursionlimit(old_limit)
        return Element._wrap(self.sig, acc)

    def normal_word(self, word) -> dict:
        return self.insert_word(word, {(): ONE})

    # internals --------------------------------------------------------------

    def insert_word(self, prefix, elem: dict) -> dict:
        """Normal form of prefix * elem, elem a dict of normal words."""
        cur = elem
        for x in reversed(prefix):
            nxt = {}
            for w, c in cur.items():
                for w2, c2 in self.insert(x, w).items():
                    _add_into(nxt, w2, c2 if c.is_one() else c * c2)
            cur = nxt
            if not cur:
                break
        return cur

    def _prepend(self, y, elem: dict) -> dict:
        """Normal form of y * elem for elem normal; cheap when y already fits."""
        ky = letter_key(y)
        out = {}
        for w, c in elem.items():
            if not w or ky < letter_key(w[0]):
                _add_into(out, (y,) + w, c)
            else:
                for w2, c2 in self.insert(y, w).items():
                    _add_into(out, w2, c * c2)
        return out

    def insert(self, x, w) -> dict:
        """Normal form of the letter x times the normal word w."""
        key = (x, w)
        r = self._insert_memo.get(key)
        if r is not None:
            return r
        if key in self._pending:
            raise BudgetExceeded((x,) + w, self.steps)
        self._pending.add(key)
        try:
            r = self._insert(x, w)
        finally:
            self._pending.discard(key)
        self._insert_memo[key] = r
        return r

    def _insert(self, x, w) -> dict:
        sig = self.sig
        if len(x) == 3:
            return self._insert_cartan(x, w)
        if not w:
            return {(x,): ONE}
        y = w[0]
        if len(y) == 3:
            if x[0] > x[1]:
                return {(x,) + w: ONE}
            # raising letter passes the Cartan block
            f = ONE
            i = 0
            while i < len(w) and len(w[i]) == 3:
                f = f * cartan_factor(w[i], x, sig)
                i += 1
            f = f.inverse()
            moved = {w2: f * c2 for w2, c2 in self.insert(x, w[i:]).items()}
            return self.insert_word(w[:i], moved)
        kx, ky = letter_key(x), letter_key(y)
        if kx < ky:
            return {(x,) + w: ONE}
        if x == y:
            return {} if gen_parity(x, sig) else {(x,) + w: ONE}
        self.steps += 1
        if self.steps > self._limit:
            raise BudgetExceeded((x,) + w, self._limit)
        lead, corr = self.rules.exchange(x, y)
        rest = w[1:]
        out = {}
        if lead.num:
            for w2, c2 in self._prepend(y, self.insert(x, rest)).items():
                _add_into(out, w2, lead * c2)
        base = {rest: ONE}
        for cw, cc in corr.items():
            for w2, c2 in self.insert_word(cw, base).items():
                _add_into(out, w2, cc * c2)
        return out

    def _insert_cartan(self, k: KPow, w) -> dict:
        if not k.halves:
            return {w: ONE}
        sig = self.sig
        f = ONE
        i = 0
        n = len(w)
        while i < n and len(w[i]) == 2 and w[i][0] > w[i][1]:
            f = f * cartan_factor(k, w[i], sig)
            i += 1
        j = i
        while j < n and len(w[j]) == 3:
            j += 1
        block = {x.index: x.halves for x in w[i:j]}
        h = block.get(k.index, 0) + k.halves
        if h:
            block[k.index] = h
        else:
            del block[k.index]
        merged = tuple(KPow(a, block[a]) for a in sorted(block))
        return {w[:i] + merged + w[j:]: f}


_NORMALIZERS = {}


def get_normalizer(sig: Signature, config: NormalOrderConfig = None) -> Normalizer:
    config = config or NormalOrderConfig()
    key = (sig, config)
    nz = _NORMALIZERS.get(key)
    if nz is None:
        nz = _NORMALIZERS[key] = Normalizer(sig, config)
    return nz


def normal_order(x: Element, config: NormalOrderConfig = None) -> Element:
    """Rewrite x into PBW normal form (exact, canonical, idempotent)."""
    return get_normalizer(x.sig, config).normal_order(x)


def is_normal_word(word, sig: Signature) -> bool:
    prev = None
    for x in word:
        k = letter_key(x)
        if prev is not None:
            if k < prev:
                return False
            if k == prev and (len(x) == 3 or gen_parity(x, sig)):
                return False
        if len(x) == 3 and not x.halves:
            return False
        prev = k
    return True


def is_normal(x: Element, config: NormalOrderConfig = None) -> bool:
    return all(is_normal_word(w, x.sig) for w in x.terms)


def weight_of(word, sig: Signature) -> tuple:
    """gl-weight of a monomial's word (Cartans contribute nothing)."""
    return weight(word, sig)


def conservation_violations(x: Element, target_weight, target_grade) -> list:
    """Words of x whose weight or grade differ from the targets."""
    sig = x.sig
    return [w for w in x.terms if weight(w, sig) != target_weight or grade(w, sig) != target_grade]

