"""Python access to the hybridkit C++ core.

Elements of Q(sqrt 2) are passed as text such as ``"3+2*rt2"``. Minimal
polynomials come back as lists of Fractions, lowest degree first.
"""

import json
from fractions import Fraction

from . import _core
from ._core import (
    InputError,
    balanced_bracelets,
    block,
    burnside_count,
    canonical_form,
    enumerate_bounded,
    epsilon_budget,
    find_small_element,
    hyperplane_distance,
    in_principal_congruence,
    is_kronecker,
    mahler_measure,
    min_mahler_above_one,
    normalize,
    select_inequivalent,
)

__all__ = [
    "InputError",
    "balanced_bracelets",
    "block",
    "budget",
    "burnside_count",
    "canonical_form",
    "enumerate_bounded",
    "epsilon_budget",
    "find_small_element",
    "hyperplane_distance",
    "in_principal_congruence",
    "is_algebraic_integer",
    "is_kronecker",
    "mahler_measure",
    "min_mahler_above_one",
    "minpoly",
    "normalize",
    "product_minpoly",
    "select_inequivalent",
    "verify_paper",
]


def minpoly(trace, norm, plus=True):
    return [Fraction(c) for c in _core.minpoly(str(trace), str(norm), plus)]


def product_minpoly(a, b):
    """a and b are (trace, norm) pairs; uses the larger root of each."""
    return [Fraction(c) for c in _core.product_minpoly([str(x) for x in a], [str(x) for x in b])]


def is_algebraic_integer(trace, norm, plus=True):
    p = minpoly(trace, norm, plus)
    return p[-1] == 1 and all(c.denominator == 1 for c in p)


def verify_paper(a="3", n=2, word_length=4):
    """Certificate of the two-block construction as a dict."""
    return json.loads(_core.verify_paper_json(str(a), n, word_length))


def budget(m, degree=4, a="3"):
    return json.loads(_core.budget_json(m, degree, str(a)))
