"""Exponent vectors of monomials T_1^{a_1}...T_n^{a_n}.

A multi-index is a plain tuple of non-negative ints. All helpers are pure
functions so that tuples stay usable as dictionary keys everywhere.
"""
from functools import reduce
from itertools import product
from math import comb, factorial as int_factorial

from tc_algebra.errors import IndexOutOfRangeError, VariableCountError


def zero(n):
    return (0,) * n


def unit(i, n):
    """The exponent of T_i (1-based i)."""
    if not 1 <= i <= n:
        raise IndexOutOfRangeError(f"variable index {i} outside 1..{n}")
    return tuple(1 if k == i - 1 else 0 for k in range(n))


def check_same_length(alpha, beta):
    if len(alpha) != len(beta):
        raise VariableCountError(len(alpha), len(beta))


def degree(alpha):
    return sum(alpha)


def add(alpha, beta):
    check_same_length(alpha, beta)
    return tuple(a + b for a, b in zip(alpha, beta))


def leq(alpha, beta):
    """Componentwise order."""
    check_same_length(alpha, beta)
    return all(a <= b for a, b in zip(alpha, beta))


def sub(alpha, beta):
    """alpha - beta, or None when beta is not below alpha."""
    check_same_length(alpha, beta)
    if not all(b <= a for a, b in zip(alpha, beta)):
        return None
    return tuple(a - b for a, b in zip(alpha, beta))


def factorial(alpha):
    return reduce(lambda acc, a: acc * int_factorial(a), alpha, 1)


def falling_factorial(alpha, gamma):
    """(alpha)_gamma = prod alpha_i! / (alpha_i - gamma_i)!, zero unless gamma <= alpha."""
    check_same_length(alpha, gamma)
    result = 1
    for a, g in zip(alpha, gamma):
        if g > a:
            return 0
        result *= int_factorial(a) // int_factorial(a - g)
    return result


def binomial(alpha, kappa):
    """Multi-binomial coefficient prod C(alpha_i, kappa_i)."""
    check_same_length(alpha, kappa)
    result = 1
    for a, k in zip(alpha, kappa):
        result *= comb(a, k)
    return result


def below(alpha):
    """Every kappa with kappa <= alpha, in lexicographic order."""
    return list(product(*(range(a + 1) for a in alpha)))


def grlex_key(alpha):
    """Sort key putting higher total degree first, then lexicographically larger."""
    return (-sum(alpha), tuple(-a for a in alpha))


def of_degree(n, d):
    """All multi-indices of length n and total degree exactly d, graded-lex order."""
    if n == 0:
        return [()] if d == 0 else []
    result = []
    for first in range(d, -1, -1):
        for rest in of_degree(n - 1, d - first):
            result.append((first,) + rest)
    return result


def monomials_up_to(n, d):
    """All multi-indices of length n with total degree at most d, lowest degree first."""
    result = []
    for k in range(d + 1):
        result.extend(of_degree(n, k))
    return result


def pad(alpha, n):
    """Extend alpha by trailing zeros to length n."""
    if len(alpha) > n:
        raise VariableCountError(n, len(alpha))
    return tuple(alpha) + (0,) * (n - len(alpha))
