"""Hypothesis strategies and a sympy bridge shared by the test modules."""
from fractions import Fraction
from functools import reduce

import hypothesis.strategies as st
import sympy

from tc_algebra.hopf import DualPoly, HPoly
from tc_algebra.weyl import MatWeyl, WeylElement


def rationals():
    return st.fractions(min_value=-5, max_value=5, max_denominator=4)


def multi_indices(n, max_part=3):
    return st.tuples(*[st.integers(min_value=0, max_value=max_part)] * n)


def hpolys(n, max_part=3, max_terms=4):
    return st.dictionaries(multi_indices(n, max_part), rationals(), max_size=max_terms).map(
        lambda terms: HPoly(n, terms))


def duals(n, max_part=3, max_terms=3):
    return st.dictionaries(multi_indices(n, max_part), rationals(), max_size=max_terms).map(
        lambda terms: DualPoly(n, terms))


def weyl_elements(n, max_part=2, max_terms=3):
    keys = st.tuples(multi_indices(n, max_part), multi_indices(n, max_part))
    return st.dictionaries(keys, rationals(), max_size=max_terms).map(lambda terms: WeylElement(n, terms))


def mat_weyls(n, size, max_part=1, max_terms=2):
    entries = st.lists(weyl_elements(n, max_part, max_terms), min_size=size * size, max_size=size * size)
    return entries.map(lambda xs: MatWeyl(n, [xs[i * size:(i + 1) * size] for i in range(size)]))


def to_sympy(f, symbols):
    """The polynomial f as a sympy expression in `symbols`."""
    return sum((sympy.Rational(c.numerator, c.denominator)
                * reduce(lambda acc, pair: acc * pair[0] ** pair[1], zip(symbols, alpha), sympy.Integer(1))
                for alpha, c in f.items()), sympy.Integer(0))


def from_sympy(expression, symbols):
    poly = sympy.Poly(sympy.expand(expression), *symbols)
    return HPoly(len(symbols), {alpha: Fraction(int(c.p), int(c.q)) for alpha, c in poly.terms()})
