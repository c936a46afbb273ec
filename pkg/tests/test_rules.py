import pytest

from uqpbw import Q, E, Element, Gen, K, KPow, Signature, normal_order, q_power
from uqpbw import normal as normal_mod
from uqpbw import rules, verify
from uqpbw.coefficients import DELTA_BAR
from uqpbw.grading import signatures_up_to
from uqpbw.rules import HalfIntegerPowerError, classify, commutator, dump_rules, exchange, kappa, median

S21 = Signature(2, 1)
S22 = Signature(2, 2)


def test_classify_examples():
    assert classify(KPow(1, 2), Gen(2, 1), S21).case_id == "E11"
    assert classify(Gen(1, 3), Gen(2, 4), S22).case_id == "E22a"
    assert classify(Gen(1, 2), Gen(3, 4), S22).case_id == "E21"
    assert classify(Gen(1, 2), Gen(2, 1), S21).case_id == "E17"
    assert classify(Gen(3, 1), Gen(1, 2), S21).case_id == "E18a"
    assert classify(Gen(3, 1), Gen(3, 2), S22).case_id == "E20a"
    assert classify(Gen(1, 3), Gen(1, 3), S21).case_id == "E8"
    assert classify(Gen(1, 2), Gen(1, 2), S21).case_id == "SELF"
    assert classify(KPow(1, 2), KPow(2, -2), S21).case_id == "E4"


def test_classify_binding():
    m = classify(Gen(1, 3), Gen(2, 4), S22)
    assert dict(m.binding) == {"a": 1, "b": 3, "c": 2, "d": 4}


def test_exchange_e17_even():
    s = Signature(2, 1)
    got = exchange(Gen(1, 2), Gen(2, 1), s)
    want = E(s, 2, 1) * E(s, 1, 2) + DELTA_BAR * (K(s, 1) * K(s, 2, -1) - K(s, 1, -1) * K(s, 2))
    assert got == want


def test_exchange_e18a():
    got = exchange(Gen(3, 1), Gen(1, 2), S21)
    want = E(S21, 1, 2) * E(S21, 3, 1) + K(S21, 2, -1) * K(S21, 1) * E(S21, 3, 2)
    assert got == want


def test_exchange_e20a():
    assert exchange(Gen(3, 1), Gen(3, 2), S22) == -q_power(-1) * E(S22, 3, 2) * E(S22, 3, 1)


def test_exchange_e11():
    # K_1 E^2_1 = q_1^{-1} E^2_1 K_1
    assert exchange(KPow(1, 2), Gen(2, 1), S21) == q_power(-1) * E(S21, 2, 1) * K(S21, 1)
    # powers scale the exponent
    assert exchange(KPow(1, -4), Gen(2, 1), S21) == q_power(2) * Element.word(S21, (Gen(2, 1), KPow(1, -4)))


def test_exchange_odd_square_is_zero():
    assert exchange(Gen(1, 3), Gen(1, 3), S21).is_zero()


def test_half_power_needs_integral_q():
    x = Element.cartan(S21, 1, 1) * E(S21, 2, 1)
    with pytest.raises(HalfIntegerPowerError):
        normal_order(x)
    y = Element.cartan(S21, 3, 1) * E(S21, 2, 1)
    assert normal_order(y) == Element.word(S21, (Gen(2, 1), KPow(3, 1)))


def test_commutator_shape():
    # [E^1_2, E^3_4] = 0 at gl(2|2)
    assert commutator(Gen(1, 2), Gen(3, 4), S22).is_zero()


def test_median_and_kappa():
    assert median(3, 1, 2) == 2 and median(1, 2, 3) == 2
    assert kappa(1, 2, 3, S22) in (Q, -Q, q_power(-1), -q_power(-1), q_power(0), -q_power(0))


@pytest.mark.parametrize("sig", list(signatures_up_to(5)), ids=str)
def test_dispatch_total(sig):
    hist = verify.dispatch_is_total(sig)
    n = len(verify.generators(sig)) + 2 * sig.size
    assert sum(hist.values()) == n * n


@pytest.mark.parametrize("sig", list(signatures_up_to(5)), ids=str)
def test_weight_and_grade_conserved(sig):
    assert verify.weight_violations(sig) == []


@pytest.mark.parametrize("sig", [s for s in signatures_up_to(5) if s.size >= 3], ids=str)
def test_condensed_forms_match_dispatch(sig):
    assert verify.kappa_dispatch_mismatches(sig)[1] == []
    if sig.size >= 4:
        assert verify.table8_dispatch_mismatches(sig)[1] == []


def test_dump_rules():
    table = dump_rules()
    ids = {r["caseId"] for r in table}
    for cid in ("E4", "E8", "E11", "E17", "E18a", "E19", "E20d", "E21", "E22a", "E23d", "E1", "SELF"):
        assert cid in ids
    assert len({(r["caseId"], r["swapped"]) for r in table}) == len(table)


# -- the checks have teeth: planted sign errors are caught ----------------------


@pytest.fixture
def fresh_normalizers():
    normal_mod._NORMALIZERS.clear()
    yield
    normal_mod._NORMALIZERS.clear()


def _flip(fn, which):
    def wrapped(sub, *args):
        out = fn(sub, *args)
        return {w: -c for w, c in out.items()} if sub == which else out

    return wrapped


def test_planted_e22b_error_fails_sweep(monkeypatch, fresh_normalizers):
    monkeypatch.setattr(rules, "e22_rhs", _flip(rules.e22_rhs, "b"))
    report = verify.sweep(4, min_total=4)
    assert report["summary"]["fail"] > 0


@pytest.mark.parametrize("name,sub", [("e22_rhs", "a"), ("e23_rhs", "c")])
def test_planted_table_error_fails_lemma_check(monkeypatch, fresh_normalizers, name, sub):
    bad = _flip(getattr(rules, name), sub)
    monkeypatch.setattr(rules, name, bad)
    monkeypatch.setattr(verify, name, bad)
    report = verify.verify_lemma(4, min_total=4)
    assert report["tallies"][f"{name[:3].upper()}{sub}"]["fail"] > 0
