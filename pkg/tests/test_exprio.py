import random

import pytest

from randgen import rand_element, rand_signature
from uqpbw import DELTA, Element, Gen, KPow, ParseError, Signature, normal_order, parse_coeff, parse_element, print_element
from uqpbw.coefficients import DELTA_BAR

S21 = Signature(2, 1)


def test_parse_word():
    assert parse_element("E[2,1]*E[1,2]", S21) == Element.word(S21, (Gen(2, 1), Gen(1, 2)))


def test_parse_coefficients_and_powers():
    assert parse_element("(q - q^-1)*K[1]^-1", S21) == Element.word(S21, (KPow(1, -2),), DELTA)
    assert parse_element("K[2]^(1/2)", S21) == Element.cartan(S21, 2, 1)
    assert parse_element("K[2]^(-3/2)", S21) == Element.cartan(S21, 2, -3)
    assert parse_element("E[1,2]/(q^2-1)", S21) == parse_element("(1/(q^2-1))*E[1,2]", S21)
    assert parse_element("-E[1,2] + 2*E[1,2]", S21) == parse_element("E[1,2]", S21)
    assert parse_element("q^-2", S21) == parse_element("1/q^2", S21)
    assert parse_coeff("q/(q^2-1)") == DELTA_BAR


@pytest.mark.parametrize(
    "text",
    ["E[1,1]", "E[1,4]", "K[0]", "E[1,2", "E[1,2]*", "E[1,2]^(1/2)", "K[1]^(1/3)", "E[1,2]/E[2,1]", "1/0", "x", "", "E[1,2] E[2,1]", "E[2,1]^-1"],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_element(text, S21)


def test_error_position():
    with pytest.raises(ParseError) as info:
        parse_element("E[1,2] + $", S21)
    assert info.value.pos == 9


def test_print_examples():
    assert print_element(Element.zero(S21)) == "0"
    assert print_element(Element.identity(S21)) == "1"
    x = Element.word(S21, (KPow(1, 2), KPow(2, -2)), DELTA_BAR)
    assert print_element(x) == "(q/(q^2-1))*K[1]*K[2]^-1"
    assert print_element(-x) == "-(q/(q^2-1))*K[1]*K[2]^-1"
    assert print_element(Element.word(S21, (Gen(1, 2),), DELTA)) == "(q-q^-1)*E[1,2]"


def test_print_normal_form_example():
    s = Signature(1, 1)
    y = normal_order(parse_element("E[1,2]*E[2,1]", s))
    assert print_element(y) == "-E[2,1]*E[1,2] + (q/(q^2-1))*K[1]*K[2]^-1 - (q/(q^2-1))*K[1]^-1*K[2]"


def test_round_trip_random():
    rng = random.Random(4)
    for _ in range(300):
        sig = rand_signature(rng)
        x = rand_element(rng, sig)
        assert parse_element(print_element(x), sig) == x


def test_print_is_deterministic():
    x = parse_element("E[1,3] + E[2,1]*E[1,2] + K[1] + 3", S21)
    y = parse_element("3 + K[1] + E[2,1]*E[1,2] + E[1,3]", S21)
    assert print_element(x) == print_element(y)
