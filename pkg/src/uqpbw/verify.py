"""Differential checks: sweeps, the identity catalog, and cross-checks.

The central test compares two routes to a normal form,

    normal_order(X Y)  ==  normal_order(expand_ns(X Y)),

the second of which sees only simple letters before straightening.  The
identity catalog applies the same idea to each relation used by the
rulebook (and a few it never dispatches on): both sides of the identity
are expanded to simple letters and straightened, and must agree exactly.
"""

import time
from dataclasses import dataclass
from itertools import permutations

from .algebra import E, K, Element, Gen, KPow, grade, graded_commutator, omega, weight
from .coefficients import delta_bar_sub, q_power
from .exprio import print_element
from .expansion import admissible_pivots, expand_all_pivots, expand_ns, height
from .grading import Signature, signatures_up_to
from .normal import BudgetExceeded, NormalOrderConfig, conservation_violations, is_normal, normal_order
from .rules import (
    classify,
    commutator,
    condensed_commutator,
    e17_rhs,
    e18_rhs,
    e20_factor,
    e22_rhs,
    e23_rhs,
    exchange,
    kappa,
)


@dataclass
class Identity:
    """lhs == rhs in the algebra, tagged with the relation it instantiates."""

    case_id: str
    indices: tuple
    lhs: Element
    rhs: Element

    def describe(self):
        return {k: v for k, v in self.indices}


def generators(sig: Signature, max_height=None):
    n = sig.size
    out = []
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if a != b and (max_height is None or abs(a - b) <= max_height):
                out.append(Gen(a, b))
    return out


def _el(sig, terms):
    return Element(sig, terms)


def _br(sig, x, y):
    return graded_commutator(Element.word(sig, (x,)), Element.word(sig, (y,)))


def _q_sub_pow(sig, c, s):
    return q_power(-s if sig.parities[c] else s)


# -- identity catalog ---------------------------------------------------------


def lemma_identities(sig: Signature):
    """Every relation instance at this signature, as (lhs, rhs) pairs."""
    yield from _relations(sig)
    yield from _lemma1(sig)
    yield from _pbw_lemma(sig)
    yield from _condensed(sig)


def _relations(sig):
    N = sig.size
    idx = list(sig.indices())
    m = sig.m
    zero = Element.zero(sig)
    for a in idx:
        for b in idx:
            lhs = K(sig, a) * K(sig, b)
            yield Identity("E4", (("a", a), ("b", b)), lhs, K(sig, b) * K(sig, a))
        yield Identity("E4", (("a", a), ("inverse", 1)), K(sig, a) * K(sig, a, -1), Element.identity(sig))
    # Cartan past simple letters, then past every letter at several powers
    for a in idx:
        for b in idx:
            for b2 in (b + 1, b - 1):
                if 1 <= b2 <= N:
                    e = (a == b) - (a == b2)
                    f = _q_sub_pow(sig, a, e)
                    yield Identity(
                        "E5", (("a", a), ("b", b), ("c", b2)), K(sig, a) * E(sig, b, b2), f * E(sig, b, b2) * K(sig, a)
                    )
    for a in idx:
        for g in generators(sig):
            e = (a == g.row) - (a == g.col)
            for halves in (-4, -2, -1, 1, 2, 4):
                # a half power may not meet any letter of the expansion with
                # an odd exponent, so its index must lie outside [row, col]
                if halves % 2 and min(g) <= a <= max(g):
                    continue
                f = _q_sub_pow(sig, a, halves * e // 2)
                kk = Element.cartan(sig, a, halves)
                yield Identity(
                    "E11",
                    (("a", a), ("b", g.row), ("c", g.col), ("halves", halves)),
                    kk * E(sig, *g),
                    f * E(sig, *g) * kk,
                )
    for a in range(1, N):
        for b in range(1, N):
            rhs = zero
            if a == b:
                db = delta_bar_sub(a, sig)
                rhs = db * (K(sig, a) * K(sig, a + 1, -1) - K(sig, a, -1) * K(sig, a + 1))
            yield Identity("E6", (("a", a), ("b", b)), _br(sig, Gen(a, a + 1), Gen(b + 1, b)), rhs)
            if abs(a - b) > 1:
                lo = E(sig, a + 1, a) * E(sig, b + 1, b)
                yield Identity("E7", (("a", a), ("b", b), ("kind", "lowering")), lo, E(sig, b + 1, b) * E(sig, a + 1, a))
                hi = E(sig, a, a + 1) * E(sig, b, b + 1)
                yield Identity("E7", (("a", a), ("b", b), ("kind", "raising")), hi, E(sig, b, b + 1) * E(sig, a, a + 1))
    yield Identity("E8", (("a", m), ("b", m + 1)), E(sig, m, m + 1) ** 2, zero)
    yield Identity("E8", (("a", m + 1), ("b", m)), E(sig, m + 1, m) ** 2, zero)
    for a in idx:
        if a == m:
            continue
        qa = _q_sub_pow(sig, a, 1)
        if a + 2 <= N:
            yield Identity(
                "E9a", (("a", a),), E(sig, a + 1, a) * E(sig, a + 2, a), qa * E(sig, a + 2, a) * E(sig, a + 1, a)
            )
            yield Identity(
                "E9b", (("a", a),), E(sig, a, a + 1) * E(sig, a, a + 2), qa * E(sig, a, a + 2) * E(sig, a, a + 1)
            )
        if a - 1 >= 1 and a + 1 <= N:
            yield Identity(
                "E9c", (("a", a),), E(sig, a + 1, a - 1) * E(sig, a + 1, a), qa * E(sig, a + 1, a) * E(sig, a + 1, a - 1)
            )
            yield Identity(
                "E9d", (("a", a),), E(sig, a - 1, a + 1) * E(sig, a, a + 1), qa * E(sig, a, a + 1) * E(sig, a - 1, a + 1)
            )
    if sig.m >= 2 and sig.n >= 2:
        yield Identity("SerreCross", (("form", "lowering"),), _br(sig, Gen(m + 1, m), Gen(m + 2, m - 1)), zero)
        yield Identity("SerreCross", (("form", "raising"),), _br(sig, Gen(m, m + 1), Gen(m - 1, m + 2)), zero)
    # the recursive definition itself, at every pivot
    for g in generators(sig):
        a, b = g
        s = 1 if a > b else -1
        for c in admissible_pivots(g):
            rhs = E(sig, a, c) * E(sig, c, b) - _q_sub_pow(sig, c, s) * E(sig, c, b) * E(sig, a, c)
            yield Identity("E1", (("a", a), ("b", b), ("c", c)), E(sig, a, b), rhs)


def _lemma1(sig):
    N = sig.size
    zero = Element.zero(sig)
    for a in range(1, N + 1):
        for b in range(a + 1, N + 1):
            for c in range(1, N):
                if a not in (c, c + 1) and b not in (c, c + 1):
                    yield Identity("E12a", (("a", a), ("b", b), ("c", c)), _br(sig, Gen(a, b), Gen(c, c + 1)), zero)
                    yield Identity("E12b", (("a", a), ("b", b), ("c", c)), _br(sig, Gen(b, a), Gen(c + 1, c)), zero)
                if a == c and b == c + 1:
                    continue
                par = sig.parities
                odd = par[c] ^ par[c + 1]
                rhs_a = zero
                if b == c + 1:
                    rhs_a = rhs_a + K(sig, c) * K(sig, c + 1, -1) * E(sig, a, c)
                if a == c:
                    t = E(sig, c + 1, b) * K(sig, c, -1) * K(sig, c + 1)
                    rhs_a = rhs_a + (t if odd else -t)
                yield Identity("E13a", (("a", a), ("b", b), ("c", c)), _br(sig, Gen(a, b), Gen(c + 1, c)), rhs_a)
                rhs_b = zero
                if a == c:
                    rhs_b = rhs_b + K(sig, c) * K(sig, c + 1, -1) * E(sig, b, c + 1)
                if b == c + 1:
                    t = E(sig, c, a) * K(sig, c, -1) * K(sig, c + 1)
                    rhs_b = rhs_b + (t if odd else -t)
                yield Identity("E13b", (("a", a), ("b", b), ("c", c)), _br(sig, Gen(b, a), Gen(c, c + 1)), rhs_b)


def _order_case(a, b, c):
    """Sub-case letter of [E^a_c, E^c_b] for c outside [a, b], else None."""
    if c < b < a:
        return "a"
    if c < a < b:
        return "b"
    if b < a < c:
        return "c"
    if a < b < c:
        return "d"
    return None


def _pbw_lemma(sig):
    idx = list(sig.indices())
    zero = Element.zero(sig)
    for a, b in permutations(idx, 2):
        yield Identity("E17", (("a", a), ("b", b)), _br(sig, Gen(a, b), Gen(b, a)), _el(sig, e17_rhs(sig, a, b)))
    for a, b, c in permutations(idx, 3):
        s = _order_case(a, b, c)
        if s is not None:
            yield Identity(f"E18{s}", (("a", a), ("b", b), ("c", c)), _br(sig, Gen(a, c), Gen(c, b)), _el(sig, e18_rhs(s, a, b, c)))
        if a < c < b or b < c < a:
            yield Identity("E19", (("a", a), ("b", b), ("c", c), ("form", "row")), _br(sig, Gen(c, a), Gen(c, b)), zero)
            yield Identity("E19", (("a", a), ("b", b), ("c", c), ("form", "col")), _br(sig, Gen(a, c), Gen(b, c)), zero)
        if a < b < c or c < a < b:
            row, col = ("a", "c") if b < c else ("b", "d")
            f = e20_factor(row, sig, a, b, c)
            yield Identity(f"E20{row}", (("a", a), ("b", b), ("c", c)), E(sig, c, a) * E(sig, c, b), f * E(sig, c, b) * E(sig, c, a))
            f = e20_factor(col, sig, a, b, c)
            yield Identity(f"E20{col}", (("a", a), ("b", b), ("c", c)), E(sig, a, c) * E(sig, b, c), f * E(sig, b, c) * E(sig, a, c))
    for a, b, c, d in permutations(idx, 4):
        if not (a < b and c < d):
            continue
        ind = (("a", a), ("b", b), ("c", c), ("d", d))
        if a < c < b < d or c < a < d < b:
            first = a < c
            s1, s2 = ("a", "c") if first else ("b", "d")
            yield Identity(f"E22{s1}", ind, _br(sig, Gen(a, b), Gen(c, d)), _el(sig, e22_rhs(s1, sig, a, b, c, d)))
            yield Identity(f"E22{s2}", ind, _br(sig, Gen(b, a), Gen(d, c)), _el(sig, e22_rhs(s2, sig, a, b, c, d)))
            yield Identity(f"E23{s1}", ind, _br(sig, Gen(a, b), Gen(d, c)), _el(sig, e23_rhs(s1, sig, a, b, c, d)))
            yield Identity(f"E23{s2}", ind, _br(sig, Gen(b, a), Gen(c, d)), _el(sig, e23_rhs(s2, sig, a, b, c, d)))
        else:
            for x, y in (
                (Gen(a, b), Gen(c, d)),
                (Gen(a, b), Gen(d, c)),
                (Gen(b, a), Gen(c, d)),
                (Gen(b, a), Gen(d, c)),
            ):
                yield Identity("E21", ind + (("x", str(x)), ("y", str(y))), _br(sig, x, y), zero)


def _condensed(sig):
    """The summary forms: kappa for shared indices, the 8-entry table otherwise."""
    idx = list(sig.indices())
    for a, b, c in permutations(idx, 3):
        k = kappa(a, b, c, sig)
        ind = (("a", a), ("b", b), ("c", c))
        yield Identity("kappa", ind + (("form", "col"),), E(sig, a, c) * E(sig, b, c), k * E(sig, b, c) * E(sig, a, c))
        yield Identity("kappa", ind + (("form", "row"),), E(sig, c, a) * E(sig, c, b), k * E(sig, c, b) * E(sig, c, a))
    for a, b, c, d in permutations(idx, 4):
        x, y = Gen(a, b), Gen(c, d)
        yield Identity(
            "table8", (("a", a), ("b", b), ("c", c), ("d", d)), _br(sig, x, y), _el(sig, condensed_commutator(x, y, sig))
        )


def identity_for(case_id: str, sig: Signature, **indices):
    """The catalog entry with this case id and these indices (first match)."""
    for ident in lemma_identities(sig):
        if ident.case_id == case_id and all(ident.describe().get(k) == v for k, v in indices.items()):
            return ident
    raise KeyError(f"no identity {case_id} with {indices} at {sig}")


def check_identity(ident: Identity, strategy="row", config=None) -> tuple:
    """(ok, lhs_nf, rhs_nf) with both sides expanded, then straightened."""
    lhs = normal_order(expand_ns(ident.lhs, strategy), config)
    rhs = normal_order(expand_ns(ident.rhs, strategy), config)
    return lhs == rhs, lhs, rhs


def verify_rule_by_expansion(case_id: str, indices: dict, sig: Signature) -> bool:
    return check_identity(identity_for(case_id, sig, **indices))[0]


# -- dispatch cross-checks ------------------------------------------------------


def kappa_dispatch_mismatches(sig: Signature):
    """(pairs checked, mismatches) comparing rule output with kappa * y x."""
    bad = []
    n = 0
    for a, b, c in permutations(sig.indices(), 3):
        k = kappa(a, b, c, sig)
        for x, y in ((Gen(a, c), Gen(b, c)), (Gen(c, a), Gen(c, b))):
            n += 1
            got = exchange(x, y, sig)
            want = Element(sig, {(y, x): k})
            if got != want:
                bad.append((x, y, got, want))
    return n, bad


def table8_dispatch_mismatches(sig: Signature):
    """(pairs checked, mismatches) comparing rule commutators with the 8-entry table."""
    bad = []
    n = 0
    for a, b, c, d in permutations(sig.indices(), 4):
        n += 1
        x, y = Gen(a, b), Gen(c, d)
        got = normal_order(commutator(x, y, sig))
        want = normal_order(_el(sig, condensed_commutator(x, y, sig)))
        if got != want:
            bad.append((x, y, got, want))
    return n, bad


def dispatch_is_total(sig: Signature) -> dict:
    """Case histogram over every ordered pair of letters (classify never fails)."""
    letters = generators(sig) + [KPow(a, h) for a in sig.indices() for h in (-2, 2)]
    hist = {}
    for x in letters:
        for y in letters:
            m = classify(x, y, sig)
            hist[m.case.key] = hist.get(m.case.key, 0) + 1
    return hist


def weight_violations(sig: Signature) -> list:
    """Letter pairs whose exchange output changes weight or grading."""
    bad = []
    letters = generators(sig) + [KPow(a, 2) for a in sig.indices()]
    for x in letters:
        for y in letters:
            w0, g0 = weight((x, y), sig), grade((x, y), sig)
            out = exchange(x, y, sig)
            for w in out.terms:
                if weight(w, sig) != w0 or grade(w, sig) != g0:
                    bad.append((x, y, w))
    return bad


# -- omega --------------------------------------------------------------------


OMEGA_PAIRS = {"E22a": "E22c", "E23a": "E23c", "E18a": "E18b"}


def omega_coherence(sig: Signature) -> list:
    """Check that omega maps the E22a/E23a/E18a rules onto E22c/E23c/E18b.

    omega([x, y]) = [omega(y), omega(x)]; with the rule outputs on both
    sides this ties the two cases together exactly (after straightening).
    Returns a list of failure descriptions; also checks the case labels.
    """
    failures = []
    for x in generators(sig):
        for y in generators(sig):
            m = classify(x, y, sig)
            src = m.case.case_id
            if src not in OMEGA_PAIRS or m.case.swapped:
                continue
            ox, oy = x.flipped(), y.flipped()
            lhs = normal_order(omega(commutator(x, y, sig)))
            rhs = normal_order(commutator(oy, ox, sig))
            # label: E18 maps via (omega(y), omega(x)), the others via (omega(x), omega(y))
            pair = (oy, ox) if src.startswith("E18") else (ox, oy)
            target = classify(*pair, sig)
            ok_label = target.case.case_id == OMEGA_PAIRS[src] and not target.case.swapped
            if lhs != rhs or not ok_label:
                failures.append((src, x, y, target.case.key, print_element(lhs), print_element(rhs)))
    return failures


# -- sweeps ---------------------------------------------------------------------


@dataclass
class PairResult:
    signature: str
    pair: tuple
    status: str
    lhs: str
    rhs: str
    detail: str = ""

    def as_dict(self):
        d = {"signature": self.signature, "pair": list(self.pair), "status": self.status, "lhs": self.lhs, "rhs": self.rhs}
        if self.detail:
            d["detail"] = self.detail
        return d


def check_pair(sig, x, y, strategy="row", config=None) -> PairResult:
    """normal_order(XY) vs normal_order(expand_ns(XY)), plus inline invariants."""
    xy = Element.word(sig, (x, y))
    label = str(sig)
    try:
        lhs = normal_order(xy, config)
        rhs = normal_order(expand_ns(xy, strategy), config)
    except BudgetExceeded as exc:
        return PairResult(label, (str(x), str(y)), "budget", "", "", str(exc))
    w0, g0 = weight((x, y), sig), grade((x, y), sig)
    problems = []
    if lhs != rhs:
        problems.append("mismatch")
    if conservation_violations(lhs, w0, g0) or conservation_violations(rhs, w0, g0):
        problems.append("conservation")
    if not is_normal(lhs):
        problems.append("not-normal")
    if normal_order(lhs, config) != lhs:
        problems.append("not-idempotent")
    status = "fail" if problems else "pass"
    return PairResult(label, (str(x), str(y)), status, print_element(lhs), print_element(rhs), ",".join(problems))


def _sweep_signature(args):
    m, n, max_height, strategy, max_steps = args
    sig = Signature(m, n)
    config = NormalOrderConfig(max_rewrite_steps=max_steps)
    t0 = time.perf_counter()
    gens = generators(sig, max_height)
    results = [check_pair(sig, x, y, strategy, config) for x in gens for y in gens]
    return str(sig), results, (time.perf_counter() - t0) * 1000


def sweep(max_total, max_height=None, strategy="row", jobs=1, max_steps=None, min_total=2, progress=None) -> dict:
    """Differential sweep over every signature with min_total <= m+n <= max_total.

    ``max_height`` bounds the generator height (None: m+n-1, i.e. all).
    """
    if max_total < 2:
        raise ValueError("max_total must be at least 2")
    max_steps = max_steps or NormalOrderConfig().max_rewrite_steps
    tasks = [(s.m, s.n, max_height, strategy, max_steps) for s in signatures_up_to(max_total) if s.size >= min_total]
    t0 = time.perf_counter()
    if jobs and jobs > 1:
        from multiprocessing import Pool

        with Pool(jobs) as pool:
            outs = pool.map(_sweep_signature, tasks, chunksize=1)
    else:
        outs = []
        for t in tasks:
            outs.append(_sweep_signature(t))
            if progress:
                progress(outs[-1])
    cases = []
    timing = {}
    for label, results, ms in outs:
        cases.extend(results)
        timing[label] = round(ms, 1)
    timing["total"] = round((time.perf_counter() - t0) * 1000, 1)
    npass = sum(1 for r in cases if r.status == "pass")
    return {
        "config": {
            "command": "sweep",
            "max_total": max_total,
            "min_total": min_total,
            "max_height": max_height,
            "pivot": strategy if isinstance(strategy, str) else getattr(strategy, "__name__", "custom"),
            "max_rewrite_steps": max_steps,
        },
        "cases": [r.as_dict() for r in cases],
        "summary": {"pass": npass, "fail": len(cases) - npass},
        "timing_ms": timing,
    }


def verify_lemma(max_total, min_total=2, progress=None) -> dict:
    """Run every catalog identity (by expansion) and the dispatch cross-checks."""
    if max_total < 2:
        raise ValueError("max_total must be at least 2")
    t0 = time.perf_counter()
    cases = []
    tallies = {}
    timing = {}
    for sig in signatures_up_to(max_total):
        if sig.size < min_total:
            continue
        ts = time.perf_counter()
        for ident in lemma_identities(sig):
            try:
                ok, lhs, rhs = check_identity(ident)
                status = "pass" if ok else "fail"
                l, r = print_element(lhs), print_element(rhs)
            except BudgetExceeded as exc:
                status, l, r = "budget", "", str(exc)
            cases.append({"signature": str(sig), "case": ident.case_id, "tuple": ident.describe(), "status": status, "lhs": l, "rhs": r})
            t = tallies.setdefault(ident.case_id, {"pass": 0, "fail": 0})
            t["pass" if status == "pass" else "fail"] += 1
        for name, check in (("kappa-dispatch", kappa_dispatch_mismatches), ("table8-dispatch", table8_dispatch_mismatches)):
            n, bad = check(sig)
            for x, y, got, want in bad:
                cases.append(
                    {"signature": str(sig), "case": name, "tuple": {"x": str(x), "y": str(y)}, "status": "fail", "lhs": str(got), "rhs": str(want)}
                )
            t = tallies.setdefault(name, {"pass": 0, "fail": 0})
            t["fail"] += len(bad)
            t["pass"] += n - len(bad)
        timing[str(sig)] = round((time.perf_counter() - ts) * 1000, 1)
        if progress:
            progress(str(sig))
    timing["total"] = round((time.perf_counter() - t0) * 1000, 1)
    npass = sum(1 for c in cases if c["status"] == "pass")
    return {
        "config": {"command": "verify-lemma", "max_total": max_total, "min_total": min_total},
        "cases": cases,
        "tallies": dict(sorted(tallies.items())),
        "summary": {"pass": npass, "fail": len(cases) - npass},
        "timing_ms": timing,
    }


def odd_square_failures(sig: Signature) -> list:
    """Odd generators whose square does not straighten to zero."""
    out = []
    par = sig.parities
    for g in generators(sig):
        if par[g.row] != par[g.col]:
            e = Element.word(sig, (g, g))
            if normal_order(e) or normal_order(expand_ns(e)):
                out.append(g)
    return out


def pivot_invariance_failures(sig: Signature, strategies=("row", "col")) -> list:
    """Nonsimple generators whose normalized expansion depends on the pivot."""
    out = []
    for g in generators(sig):
        if height(g) < 2:
            continue
        ref = normal_order(Element.word(sig, (g,)))
        for strategy in strategies:
            for c, ex in expand_all_pivots(sig, g, strategy).items():
                if normal_order(ex) != ref:
                    out.append((g, c, strategy))
            if normal_order(expand_ns(Element.word(sig, (g,)), strategy)) != ref:
                out.append((g, None, strategy))
    return out


def report_payload(report: dict) -> dict:
    """The report minus timing: the part that must be reproducible byte for byte."""
    return {k: v for k, v in report.items() if k != "timing_ms"}


__all__ = [
    "Identity",
    "lemma_identities",
    "identity_for",
    "check_identity",
    "verify_rule_by_expansion",
    "check_pair",
    "sweep",
    "verify_lemma",
    "omega_coherence",
    "kappa_dispatch_mismatches",
    "table8_dispatch_mismatches",
    "dispatch_is_total",
    "weight_violations",
    "odd_square_failures",
    "pivot_invariance_failures",
    "report_payload",
    "generators",
]
