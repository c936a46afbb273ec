import pytest

from uqpbw import E, Element, Gen, Signature, expand_ns, height, normal_order, q_power
from uqpbw.expansion import admissible_pivots, expand_all_pivots, expand_at_pivot, pivot_col, pivot_row

S21 = Signature(2, 1)


def test_lowering_example():
    # q_2 = q in gl(2|1)
    want = E(S21, 3, 2) * E(S21, 2, 1) - q_power(1) * E(S21, 2, 1) * E(S21, 3, 2)
    assert expand_ns(E(S21, 3, 1)) == want


def test_raising_example():
    want = E(S21, 1, 2) * E(S21, 2, 3) - q_power(-1) * E(S21, 2, 3) * E(S21, 1, 2)
    assert expand_ns(E(S21, 1, 3)) == want


def test_odd_pivot_uses_inverse_q():
    s = Signature(1, 2)
    # pivot 2 is odd so q_2 = q^-1
    want = E(s, 3, 2) * E(s, 2, 1) - q_power(-1) * E(s, 2, 1) * E(s, 3, 2)
    assert expand_ns(E(s, 3, 1)) == want


def test_simple_is_fixed():
    x = E(S21, 1, 2)
    assert expand_ns(x) == x


def test_height():
    assert height(Gen(5, 1)) == 4
    assert height(Gen(1, 2)) == 1
    assert height(Gen(2, 5)) == 3


def test_only_simple_letters_remain():
    s = Signature(3, 3)
    for strategy in ("row", "col"):
        y = expand_ns(E(s, 6, 1) * E(s, 2, 5), strategy)
        assert all(abs(x[0] - x[1]) == 1 for w in y.terms for x in w)


def test_pivots():
    assert admissible_pivots(Gen(1, 4)) == [2, 3]
    assert pivot_row(1, 4) == 2 and pivot_col(1, 4) == 3
    assert pivot_row(4, 1) == 3 and pivot_col(4, 1) == 2
    with pytest.raises(ValueError):
        expand_at_pivot(S21, Gen(1, 3), 3)
    with pytest.raises(ValueError):
        expand_ns(E(S21, 1, 3), "middle")


def test_pivot_invariance_after_normal_order():
    s = Signature(2, 3)
    g = Gen(5, 1)
    forms = {normal_order(ex) for ex in expand_all_pivots(s, g).values()}
    assert forms == {normal_order(Element.word(s, (g,)))}
    assert expand_all_pivots(s, Gen(1, 2)) == {}
