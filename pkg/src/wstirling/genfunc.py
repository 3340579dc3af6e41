"""Generating functions for the weighted triangles, plus their p,q forms.

Three shapes: the row generating function of the first kind is a finite
product over x-linear factors; the column generating function of the second
kind is a truncated geometric series; and the basis expansion writes x^n in
terms of bracket polynomials with second-kind coefficients.  Everything is
an ordinary RingValue in the series variable x, so coefficient extraction
is exact and the checks return the offending residual when they fail.
"""

from __future__ import annotations

from math import comb

from .ring import ONE, P, Q, RingValue, X, ZERO, product, ring_sum
from .stirling import bracket, pq_binomial, second_kind
from .weights import WeightPair, builtin


def cgf_product(n: int, alpha: int, beta: int, weights: WeightPair) -> RingValue:
    """Row generating function of the first kind: prod_j (x + v.w products)."""
    if n < 0:
        raise ValueError("row index must be nonnegative")
    return product(
        X + weights.v.eval(alpha + n - 1 - j) * weights.w.eval(beta + j) for j in range(n))


def _geometric(rates, upto: int) -> list:
    """Coefficients of prod_a 1/(1 - a*x) through degree upto."""
    coeffs = [ONE] + [ZERO] * upto
    for a in rates:
        for d in range(1, upto + 1):
            coeffs[d] = coeffs[d] + a * coeffs[d - 1]
    return coeffs


def sgf_series(k: int, order: int, alpha: int, beta: int, weights: WeightPair) -> RingValue:
    """Column generating function of the second kind, truncated at x^order."""
    if k < 0:
        raise ValueError("column index must be nonnegative")
    if order < k:
        raise ValueError("truncation order must be at least k")
    rates = [weights.v.eval(alpha + k - j) * weights.w.eval(beta + j) for j in range(k + 1)]
    coeffs = _geometric(rates, order - k)
    return ring_sum(c * X ** (k + d) for d, c in enumerate(coeffs))


def basis_expand_check(n: int, alpha: int, beta: int, weights: WeightPair):
    """Does x^n equal the bracket-basis expansion?  Returns (ok, residual)."""
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    total = ring_sum(
        second_kind(weights, alpha, beta - k, n, k)
        * bracket(k, alpha, beta, weights).as_ring_value()
        for k in range(n + 1))
    residual = total - X ** n
    return residual.is_zero(), residual


# -- p,q specializations --------------------------------------------------------

def pq_product_form_check(n: int):
    """Row form for V=(p^i, q^i): both the direct sum and the rescaled
    substitution of cgf_product must equal prod_t (p^t + x q^t)."""
    target = product(P ** t + X * Q ** t for t in range(n))
    direct = ring_sum(
        P ** comb(n - k, 2) * Q ** comb(k, 2) * pq_binomial(n, k) * X ** k
        for k in range(n + 1))
    rescaled = Q ** comb(n, 2) * cgf_product(n, 0, 0, builtin("pq-binomial")).substitute(
        {"p": P * Q ** -1, "q": 1})
    residual = (direct - target) if direct != target else (rescaled - target)
    return residual.is_zero(), residual


def pq_series_reduction_check(k: int, order: int):
    """Column form for V=(p^i, q^i): geometric expansion of the displayed
    product against the symmetric-function values."""
    rates = [P ** (k - j) * Q ** j for j in range(k + 1)]
    coeffs = _geometric(rates, order - k)
    for n in range(k, order + 1):
        residual = coeffs[n - k] - pq_binomial(n, k)
        if not residual.is_zero():
            return False, residual
    return True, ZERO


def pq_basis_form_check(n: int):
    """Bracket-basis expansion specialized to V=(p^i, q^i), written with
    one-variable-per-side scaling."""
    lhs = Q ** comb(n, 2) * X ** n
    rhs = ring_sum(
        (-1) ** (n - k) * Q ** comb(n - k, 2) * pq_binomial(n, k)
        * product(X * Q ** t + P ** t for t in range(k))
        for k in range(n + 1))
    residual = rhs - lhs
    return residual.is_zero(), residual
