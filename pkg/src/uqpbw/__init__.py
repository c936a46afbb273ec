"""PBW normal ordering and consistency checks for U_q[gl(m|n)].

Typical use::

    from uqpbw import Signature, parse_element, normal_order, print_element
    sig = Signature(2, 1)
    print(print_element(normal_order(parse_element("E[1,3]*E[3,1]", sig))))
"""

from .algebra import E, Element, Gen, K, KPow, SignatureMismatch, graded_commutator, omega
from .coefficients import BACKEND, DELTA, ONE, Q, QBAR, ZERO, Coeff, LaurentPoly, q_power
from .expansion import expand_ns, height
from .exprio import ParseError, parse_coeff, parse_element, print_element
from .grading import Signature, SignatureError
from .normal import BudgetExceeded, NormalOrderConfig, is_normal, normal_order
from .rules import HalfIntegerPowerError, classify, commutator, exchange
from .verify import sweep, verify_lemma, verify_rule_by_expansion

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BudgetExceeded",
    "Coeff",
    "DELTA",
    "E",
    "Element",
    "Gen",
    "HalfIntegerPowerError",
    "K",
    "KPow",
    "LaurentPoly",
    "NormalOrderConfig",
    "ONE",
    "ParseError",
    "Q",
    "QBAR",
    "Signature",
    "SignatureError",
    "SignatureMismatch",
    "ZERO",
    "classify",
    "commutator",
    "exchange",
    "expand_ns",
    "graded_commutator",
    "height",
    "is_normal",
    "normal_order",
    "omega",
    "parse_coeff",
    "parse_element",
    "print_element",
    "q_power",
    "sweep",
    "verify_lemma",
    "verify_rule_by_expansion",
]
