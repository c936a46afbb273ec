"""Acceptance criteria 1-9, one test each.

Every test prints a single ``[criterion N] PASS|FAIL ...`` line.  Run just
this file with ``pytest tests/test_acceptance.py -v -s`` or directly with
``python tests/test_acceptance.py``.

The sweeps are shared between criteria through module fixtures, so
conservation (7) and idempotence/budget (9) are read off the same runs
as criteria 1-2; criteria 3-5 log any budget event for criterion 9.  Set ``UQPBW_LARGE_SWEEPS=1`` to also run the
unscaled height-bounded sweeps (m+n <= 10 at height 3, m+n <= 18 at
height 2).
"""

import os
import random
import sys
import time

import pytest

from randgen import check_ring_axioms, rand_coeff, rand_element, rand_signature, rand_word
from uqpbw import BudgetExceeded, Element, normal_order, omega
from uqpbw.grading import signatures_up_to
from uqpbw.verify import odd_square_failures, omega_coherence, pivot_invariance_failures, sweep, verify_lemma, weight_violations

JOBS = min(4, os.cpu_count() or 1)
BUDGET_HITS = []  # budget events seen during criteria 3-5


def report(capsys, n, ok, detail):
    line = f"[criterion {n}] {'PASS' if ok else 'FAIL'} {detail}"
    with capsys.disabled():
        print("\n" + line)


def _count(rep, status=None, detail=None):
    out = 0
    for c in rep["cases"]:
        if status and c["status"] == status:
            out += 1
        elif detail and detail in c.get("detail", "").split(","):
            out += 1
    return out


def _timed_sweep(*args, **kw):
    t0 = time.perf_counter()
    rep = sweep(*args, jobs=JOBS, **kw)
    return rep, time.perf_counter() - t0


@pytest.fixture(scope="module")
def full_sweep():
    return _timed_sweep(5)


@pytest.fixture(scope="module")
def scaled_sweeps():
    return [_timed_sweep(7, max_height=3), _timed_sweep(8, max_height=2)]


def test_criterion_1_complete_sweep(capsys, full_sweep):
    rep, secs = full_sweep
    s = rep["summary"]
    ok = s["fail"] == 0 and s["pass"] > 0 and secs < 600
    report(capsys, 1, ok, f"m+n<=5 all heights: {s['pass']} pairs pass, {s['fail']} fail, {secs:.1f}s (limit 600s)")
    assert ok


def test_criterion_2_scaled_sweeps(capsys, scaled_sweeps):
    (a, ta), (b, tb) = scaled_sweeps
    fails = a["summary"]["fail"] + b["summary"]["fail"]
    ok = fails == 0 and ta + tb < 900
    report(
        capsys,
        2,
        ok,
        f"m+n<=7 h<=3: {a['summary']['pass']} pass; m+n<=8 h<=2: {b['summary']['pass']} pass; "
        f"{fails} fail, {ta + tb:.1f}s (limit 900s)",
    )
    assert ok


def test_criterion_3_lemma_by_expansion(capsys):
    rep = verify_lemma(5)
    BUDGET_HITS.append(_count(rep, status="budget"))
    s = rep["summary"]
    bad = sorted(k for k, t in rep["tallies"].items() if t["fail"])
    ok = s["fail"] == 0 and not bad
    report(capsys, 3, ok, f"{len(rep['tallies'])} identity families, {s['pass']} instances pass, {s['fail']} fail {bad or ''}")
    assert ok


def test_criterion_4_odd_squares(capsys):
    bad, checked = [], 0
    try:
        for sig in signatures_up_to(5):
            par = sig.parities
            checked += sum(1 for a in sig.indices() for b in sig.indices() if par[a] != par[b])
            bad += [(str(sig), str(g)) for g in odd_square_failures(sig)]
    except BudgetExceeded:
        BUDGET_HITS.append(1)
        raise
    ok = not bad
    report(capsys, 4, ok, f"{checked} odd generators, square straightens to 0 (direct and expanded); failures: {bad or 'none'}")
    assert ok


def test_criterion_5_pivot_invariance(capsys):
    bad, checked = [], 0
    try:
        for sig in signatures_up_to(5):
            n = sig.size
            checked += sum(abs(a - b) - 1 for a in range(1, n + 1) for b in range(1, n + 1) if abs(a - b) > 1)
            bad += [(str(sig), str(g), c, s) for g, c, s in pivot_invariance_failures(sig)]
    except BudgetExceeded:
        BUDGET_HITS.append(1)
        raise
    ok = not bad
    report(capsys, 5, ok, f"{checked} (generator, pivot) expansions x 2 sub-pivot strategies agree; failures: {bad or 'none'}")
    assert ok


def test_criterion_6_omega(capsys):
    rng = random.Random(20240611)
    inv_bad = anti_bad = alg_bad = 0
    for _ in range(1000):
        x = rand_element(rng, rand_signature(rng))
        inv_bad += omega(omega(x)) != x
    for i in range(1000):
        sig = rand_signature(rng)
        x = Element.word(sig, rand_word(rng, sig), rand_coeff(rng, allow_zero=False))
        y = Element.word(sig, rand_word(rng, sig), rand_coeff(rng, allow_zero=False))
        anti_bad += omega(x * y) != omega(y) * omega(x)
        # omega is also compatible with straightening (it is an algebra map)
        if i % 4 == 0:
            alg_bad += normal_order(omega(normal_order(x * y))) != normal_order(omega(x * y))
    coherence = []
    for sig in signatures_up_to(5):
        coherence += omega_coherence(sig)
    ok = not (inv_bad or anti_bad or alg_bad or coherence)
    report(
        capsys,
        6,
        ok,
        f"involution 1000 elements ({inv_bad} bad); anti-multiplicative 1000 pairs ({anti_bad} bad, "
        f"{alg_bad} bad after straightening); E22a/E23a/E18a coherence ({len(coherence)} bad)",
    )
    assert ok


def test_criterion_7_conservation(capsys, full_sweep, scaled_sweeps):
    reps = [full_sweep[0]] + [r for r, _ in scaled_sweeps]
    pairs = sum(len(r["cases"]) for r in reps)
    viol = sum(_count(r, detail="conservation") for r in reps)
    rule_viol = sum(len(weight_violations(sig)) for sig in signatures_up_to(5))
    ok = viol == 0 and rule_viol == 0 and pairs > 0
    report(capsys, 7, ok, f"weight and grading of every output monomial, {pairs} sweep pairs: {viol} violations; rule table: {rule_viol}")
    assert ok


def test_criterion_8_coefficient_ring(capsys):
    cases = 1200
    failures = check_ring_axioms(random.Random(8), cases)
    ok = not failures
    report(capsys, 8, ok, f"{cases} random triples, ring axioms + bar vs evaluation at random rational q: {len(failures)} failures")
    assert ok


def test_criterion_9_idempotence_and_budget(capsys, full_sweep, scaled_sweeps):
    reps = [full_sweep[0]] + [r for r, _ in scaled_sweeps]
    not_idem = sum(_count(r, detail="not-idempotent") + _count(r, detail="not-normal") for r in reps)
    budget = sum(BUDGET_HITS) + sum(_count(r, status="budget") for r in reps)
    ok = not_idem == 0 and budget == 0
    report(capsys, 9, ok, f"sweep outputs normal and idempotent ({not_idem} bad); budget fired {budget} times")
    assert ok


@pytest.mark.skipif(not os.environ.get("UQPBW_LARGE_SWEEPS"), reason="set UQPBW_LARGE_SWEEPS=1 for the large bounds")
def test_large_height_bounded_sweeps(capsys):
    (a, ta), (b, tb) = _timed_sweep(10, max_height=3), _timed_sweep(18, max_height=2)
    fails = a["summary"]["fail"] + b["summary"]["fail"]
    report(capsys, "2+", fails == 0, f"m+n<=10 h<=3 and m+n<=18 h<=2: {a['summary']['pass'] + b['summary']['pass']} pass, {fails} fail, {ta + tb:.1f}s")
    assert fails == 0


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
