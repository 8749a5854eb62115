"""
Guessing and verifying algebraic equations Q(z, f(z)) = 0.

For fixed degrees in y and z the coefficients c_ij of
Q = sum c_ij z^i y^j enter Q(z, f) linearly, so every coefficient of z^n
gives one linear equation. A nonzero kernel element that leaves enough
equations to spare is accepted as a guess.
"""
from __future__ import annotations
import logging
from functools import reduce
from typing import List, Union

from sympy import Matrix, Poly, Rational, gcd, ilcm, igcd, parse_expr, symbols
from sympy.polys.domains import QQ

from .rational_guess import z
from ..series.truncated_series import TruncatedSeries, constant_part, format_rational
from ..opgen_exceptions import InsufficientOrderError

logger = logging.getLogger(__name__)

DEFAULT_ALGEBRAIC_MARGIN = 5

y = symbols("y")

def _coefficients(f: TruncatedSeries, t_value=1) -> List[Rational]:
    if f.is_weighted():
        f = f.specialize_t(t_value)
    return [QQ.to_sympy(constant_part(c)) for c in f.coefficients]

def _truncated_powers(coefficients: List[Rational], degree: int) -> List[List[Rational]]:
    """
    The coefficient lists of f^0, ..., f^degree modulo z^(N+1).
    """
    order = len(coefficients) - 1
    powers = [[Rational(1)] + [Rational(0)] * order]
    for _ in range(degree):
        previous = powers[-1]
        current = [Rational(0)] * (order + 1)
        for i, a in enumerate(previous):
            if a == 0:
                continue
            for j in range(order + 1 - i):
                current[i + j] += a * coefficients[j]
        powers.append(current)
    return powers

def _normalized(poly: Poly) -> Poly:
    """
    Scales a polynomial to integer coefficients with content 1, such that
    the leading coefficient of its highest power of y is positive.
    """
    coefficients = [Rational(c) for c in poly.coeffs()]
    denominator = reduce(ilcm, [c.q for c in coefficients], 1)
    integers = [int(c * denominator) for c in coefficients]
    content = reduce(igcd, integers, 0)
    scale = Rational(denominator, content)
    poly = Poly(poly.as_expr() * scale, z, y, domain="QQ")
    leading = Poly(poly.as_expr(), y, z).LC()
    if leading < 0:
        poly = Poly(-poly.as_expr(), z, y, domain="QQ")
    return poly

class AlgebraicEquation():
    """
    An equation Q(z, y) = 0 with a bivariate polynomial Q over QQ.

    Attributes:
        polynomial (Poly): Q in the generators z and y.
        certified_order (int): The order up to which Q(z, f) was found to
            vanish for the guessed series, None if it was never checked.
    """

    def __init__(self, polynomial, certified_order: Union[int, None] = None):
        polynomial = Poly(polynomial, z, y, domain="QQ")
        if polynomial.is_zero:
            errstr = "The polynomial of an algebraic equation cannot be zero!"
            raise ValueError(errstr)
        self.polynomial = _normalized(polynomial)
        self.certified_order = certified_order

    @classmethod
    def from_string(cls, text: str) -> AlgebraicEquation:
        """
        Reads Q from text like "y^3 - 6*y^2 + 6*y - 6*z".
        """
        expression = parse_expr(text.replace("^", "**"), local_dict={"z": z, "y": y})
        return cls(expression)

    @property
    def deg_y(self) -> int:
        return self.polynomial.degree(y)

    @property
    def deg_z(self) -> int:
        return self.polynomial.degree(z)

    def coefficient(self, i: int, j: int) -> Rational:
        """
        The coefficient of z^i y^j.
        """
        return self.polynomial.coeff_monomial(z**i * y**j)

    def coeffs(self) -> List[List[Rational]]:
        """
        The table whose entry [j][i] is the coefficient of z^i y^j.
        """
        return [[self.coefficient(i, j) for i in range(self.deg_z + 1)]
                for j in range(self.deg_y + 1)]

    def evaluate(self, f: TruncatedSeries, t_value=1) -> List[Rational]:
        """
        The coefficients of Q(z, f(z)) modulo z^(N+1).
        """
        coefficients = _coefficients(f, t_value)
        order = len(coefficients) - 1
        powers = _truncated_powers(coefficients, self.deg_y)
        result = [Rational(0)] * (order + 1)
        for (i, j), c in self.polynomial.terms():
            for n in range(i, order + 1):
                result[n] += c * powers[j][n - i]
        return result

    def to_dict(self) -> dict:
        result = {"deg_y": self.deg_y,
                  "deg_z": self.deg_z,
                  "coeffs": [[format_rational(QQ.from_sympy(c)) for c in row]
                             for row in self.coeffs()]}
        if self.certified_order is not None:
            result["certified_order"] = self.certified_order
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraicEquation):
            return False
        return self.polynomial == other.polynomial

    def __str__(self) -> str:
        expression = Poly(self.polynomial.as_expr(), y).as_expr()
        return f"{expression} = 0".replace("**", "^")

    def __repr__(self) -> str:
        return f"AlgebraicEquation({self})"

def verify_equation(f: TruncatedSeries, q: AlgebraicEquation, t_value=1) -> bool:
    """
    Whether Q(z, f(z)) vanishes modulo z^(N+1).
    """
    return all(value == 0 for value in q.evaluate(f, t_value))

def guess_algebraic(f: TruncatedSeries,
                    deg_y: int,
                    deg_z: int,
                    margin: int = DEFAULT_ALGEBRAIC_MARGIN,
                    t_value=1) -> Union[AlgebraicEquation, None]:
    """
    Finds an equation Q(z, f) = 0 with deg_y(Q) <= deg_y and
    deg_z(Q) <= deg_z.

    If the kernel of the linear system has more than one dimension, its
    elements are multiples of a common polynomial, which is returned.

    Args:
        f (TruncatedSeries): The series, used with the flavor it has.
        deg_y (int): The degree bound in y.
        deg_z (int): The degree bound in z.
        margin (int): The number of equations beyond the number of unknowns.
        t_value: The value substituted for the grading variable.

    Returns:
        Union[AlgebraicEquation, None]: The primitive equation, None if
            there is none with these degrees.

    Raises:
        InsufficientOrderError: If N + 1 < (deg_y+1)(deg_z+1) + margin.
    """
    coefficients = _coefficients(f, t_value)
    order = len(coefficients) - 1
    monomials = [(i, j) for j in range(deg_y + 1) for i in range(deg_z + 1)]
    if order + 1 < len(monomials) + margin:
        errstr = (f"A series known to z^{order} cannot certify an equation with"
                  f" {len(monomials)} unknown coefficients and margin {margin}!")
        raise InsufficientOrderError(errstr)
    logger.debug(f"Trying an algebraic equation with deg_y={deg_y}, deg_z={deg_z}.")
    powers = _truncated_powers(coefficients, deg_y)
    rows = [[powers[j][n - i] if n >= i else Rational(0) for i, j in monomials]
            for n in range(order + 1)]
    kernel = Matrix(rows).nullspace()
    if not kernel:
        return None
    candidates = [Poly(sum(c * z**i * y**j for c, (i, j) in zip(vector, monomials)),
                       z, y, domain="QQ")
                  for vector in kernel]
    common = reduce(gcd, candidates)
    if common.degree(y) < 1:
        return None
    equation = AlgebraicEquation(common, certified_order=order)
    if not verify_equation(f, equation, t_value):
        equation = AlgebraicEquation(candidates[0], certified_order=order)
    return equation

def search_algebraic(f: TruncatedSeries,
                     max_deg_y: int = 4,
                     max_deg_z: Union[int, None] = None,
                     margin: int = DEFAULT_ALGEBRAIC_MARGIN,
                     t_value=1,
                     deg_y: Union[int, None] = None) -> Union[AlgebraicEquation, None]:
    """
    Tries the ansatz degrees from small to large: deg_y from 1 upward and,
    for each of them, deg_z from 1 upward up to `max_deg_z`, which
    defaults to deg_y. A fixed `deg_y` restricts the search to it.

    Ansatzes that the truncation order cannot certify are skipped.
    """
    y_degrees = [deg_y] if deg_y is not None else range(1, max_deg_y + 1)
    for current_y in y_degrees:
        upper = current_y if max_deg_z is None else max_deg_z
        for current_z in range(1, upper + 1):
            try:
                equation = guess_algebraic(f, current_y, current_z,
                                           margin=margin, t_value=t_value)
            except InsufficientOrderError:
                logger.debug(f"Skipping deg_y={current_y}, deg_z={current_z}.")
                continue
            if equation is not None:
                return equation
    return None
