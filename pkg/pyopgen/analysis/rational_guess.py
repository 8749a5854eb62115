"""
Guessing rational generating functions.

A series f is the expansion of p/q with deg p, deg q <= D exactly if its
coefficients satisfy the linear recurrence sum_{j=0}^{D} q_j f_{n-j} = 0 for
all n > D. The recurrence is found by exact linear algebra and certified
against every available coefficient.
"""
from __future__ import annotations
import logging
from typing import List, Union

from sympy import Matrix, Poly, Rational, gcd, symbols
from sympy.polys.domains import QQ

from ..series.truncated_series import (TruncatedSeries,
                                       SeriesFlavor,
                                       constant_part,
                                       format_rational)
from ..series.operations import exp_to_ord
from ..opgen_exceptions import InsufficientOrderError

logger = logging.getLogger(__name__)

DEFAULT_RATIONAL_MARGIN = 2

z = symbols("z")

def _rational_coefficients(f: TruncatedSeries, t_value=1) -> List[Rational]:
    """
    The coefficients of an ordinary series as sympy rationals, with the
    grading variable replaced by `t_value`.
    """
    if f.is_weighted():
        f = f.specialize_t(t_value)
    if f.flavor is SeriesFlavor.EXPONENTIAL:
        f = exp_to_ord(f)
    return [QQ.to_sympy(constant_part(c)) for c in f.coefficients]

class RationalFunction():
    """
    A rational function p(z)/q(z) in lowest terms with q(0) = 1.

    Attributes:
        numerator (Poly): p as a polynomial in z over QQ.
        denominator (Poly): q as a polynomial in z over QQ.
        certified_order (int): The order up to which the expansion was
            compared with a series, None if it was never compared.
    """

    def __init__(self, numerator, denominator, certified_order: Union[int, None] = None):
        numerator = Poly(numerator, z, domain="QQ")
        denominator = Poly(denominator, z, domain="QQ")
        if denominator.is_zero:
            errstr = "The denominator of a rational function cannot be zero!"
            raise ValueError(errstr)
        common = gcd(numerator, denominator)
        numerator = numerator.exquo(common)
        denominator = denominator.exquo(common)
        constant = denominator.eval(0)
        if constant == 0:
            errstr = "The denominator has to be nonzero at z = 0 for a power series!"
            raise ValueError(errstr)
        self.numerator = Poly(numerator.as_expr() / constant, z, domain="QQ")
        self.denominator = Poly(denominator.as_expr() / constant, z, domain="QQ")
        self.certified_order = certified_order

    @staticmethod
    def _ascending(poly: Poly) -> List[Rational]:
        return list(reversed(poly.all_coeffs()))

    @property
    def num(self) -> List[Rational]:
        """
        The numerator coefficients in ascending order.
        """
        return self._ascending(self.numerator)

    @property
    def den(self) -> List[Rational]:
        """
        The denominator coefficients in ascending order.
        """
        return self._ascending(self.denominator)

    def expand(self, order: int) -> List[Rational]:
        """
        The coefficients of the power series of p/q up to z^order.
        """
        num = self.num + [Rational(0)] * (order + 1)
        den = self.den
        result = []
        for n in range(order + 1):
            value = num[n]
            for j in range(1, min(n, len(den) - 1) + 1):
                value -= den[j] * result[n - j]
            result.append(value)
        return result

    def series(self, order: int) -> TruncatedSeries:
        """
        The ordinary series of p/q truncated at z^order.
        """
        return TruncatedSeries([QQ.from_sympy(value) for value in self.expand(order)],
                               order=order, flavor=SeriesFlavor.ORDINARY)

    def to_dict(self) -> dict:
        result = {"num": [format_rational(QQ.from_sympy(c)) for c in self.num],
                  "den": [format_rational(QQ.from_sympy(c)) for c in self.den]}
        if self.certified_order is not None:
            result["certified_order"] = self.certified_order
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalFunction):
            return False
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __str__(self) -> str:
        return f"({self.numerator.as_expr()})/({self.denominator.as_expr()})"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"

def _fit_denominator(coefficients: List[Rational], degree: int) -> Union[List[Rational], None]:
    """
    Solves sum_{j=0}^{degree} q_j a_{n-j} = 0 for n = degree+1, ..., N
    with q_0 = 1. Free parameters are set to zero.
    """
    order = len(coefficients) - 1
    if degree == 0:
        return [Rational(1)]
    rows = []
    rhs = []
    for n in range(degree + 1, order + 1):
        rows.append([coefficients[n - j] for j in range(1, degree + 1)])
        rhs.append(-coefficients[n])
    if not rows:
        return [Rational(1)] + [Rational(0)] * degree
    try:
        solution, parameters = Matrix(rows).gauss_jordan_solve(Matrix(rhs))
    except ValueError:
        return None
    solution = solution.subs({parameter: 0 for parameter in parameters})
    return [Rational(1)] + list(solution)

def guess_rational(f: TruncatedSeries,
                   max_deg: Union[int, None] = None,
                   margin: int = DEFAULT_RATIONAL_MARGIN,
                   t_value=1) -> Union[RationalFunction, None]:
    """
    Finds a rational function p/q whose expansion agrees with `f`.

    Denominator degrees D = 0, 1, ..., max_deg are tried in turn, the
    numerator has degree at most D. For degree D the N - D equations of
    the recurrence determine the D unknowns of q with N - 2D equations to
    spare, and this surplus has to be at least `margin`.

    Args:
        f (TruncatedSeries): The series. Exponential series are converted
            to ordinary ones first.
        max_deg (int): The largest degree tried. Defaults to the largest
            degree the truncation order allows.
        margin (int): The number of spare equations required.
        t_value: The value substituted for the grading variable.

    Returns:
        Union[RationalFunction, None]: The rational function with the
            smallest degree, None if there is none up to `max_deg`.

    Raises:
        InsufficientOrderError: If N < 2*max_deg + margin.
    """
    coefficients = _rational_coefficients(f, t_value)
    order = len(coefficients) - 1
    if max_deg is None:
        max_deg = (order - margin) // 2
    if max_deg < 0 or order < 2 * max_deg + margin:
        errstr = (f"A series known to z^{order} cannot certify rational functions"
                  f" of degree {max_deg} with margin {margin}!")
        raise InsufficientOrderError(errstr)
    for degree in range(max_deg + 1):
        logger.debug(f"Trying a rational function of degree {degree}.")
        denominator = _fit_denominator(coefficients, degree)
        if denominator is None:
            continue
        numerator = [sum((denominator[j] * coefficients[n - j]
                          for j in range(min(n, degree) + 1)), Rational(0))
                     for n in range(degree + 1)]
        candidate = RationalFunction(sum(c * z**i for i, c in enumerate(numerator)),
                                     sum(c * z**i for i, c in enumerate(denominator)),
                                     certified_order=order)
        if candidate.expand(order) == coefficients:
            return candidate
    return None
