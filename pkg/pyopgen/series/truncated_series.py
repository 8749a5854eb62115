"""
Exact truncated power series in z.

The coefficients live in the polynomial ring QQ[t] of sympy, where t is the
grading variable counting generator weights. Series without grading simply
have constant coefficients. A series is tagged as ordinary or exponential;
an exponential series stores dim/n! at z^n.
"""
from __future__ import annotations
import json
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Union

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, ring

from ..opgen_exceptions import SeriesMismatchError

COEFFICIENT_RING, t = ring("t", QQ)

DEFAULT_ORDER = 12

class SeriesFlavor(Enum):
    """
    ORDINARY: The coefficient of z^n is dim P(n).
    EXPONENTIAL: The coefficient of z^n is dim P(n)/n!.
    """
    ORDINARY = "ordinary"
    EXPONENTIAL = "exponential"

def to_coefficient(value) -> PolyElement:
    """
    Converts integers, fractions, strings "p/q", sympy rationals and ring
    elements into an element of the coefficient ring.
    """
    if isinstance(value, PolyElement):
        if value.ring != COEFFICIENT_RING:
            errstr = f"The polynomial {value} is not in the coefficient ring QQ[t]!"
            raise ValueError(errstr)
        return value
    if isinstance(value, str):
        value = Fraction(value)
    if isinstance(value, Fraction):
        return COEFFICIENT_RING(QQ(value.numerator, value.denominator))
    return COEFFICIENT_RING(value)

def format_rational(value) -> str:
    """
    Writes a rational number as "p/q", or "p" for integers.
    """
    value = QQ.convert(value)
    numerator, denominator = int(value.numerator), int(value.denominator)
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"

def constant_part(coefficient: PolyElement):
    """
    The value of a coefficient at t = 0.
    """
    return coefficient.get(COEFFICIENT_RING.zero_monom, QQ.zero)

def evaluate_t(coefficient: PolyElement, value=1):
    """
    The value of a coefficient at t = value, as a rational number.
    """
    value = QQ.convert(to_coefficient(value).get(COEFFICIENT_RING.zero_monom, QQ.zero))
    result = QQ.zero
    for (exponent,), part in coefficient.items():
        result += part * value**exponent
    return result

def t_coefficients(coefficient: PolyElement) -> list:
    """
    The coefficients of a t-polynomial in ascending degree.
    """
    if not coefficient:
        return [QQ.zero]
    degree = coefficient.degree()
    return [coefficient.get((i,), QQ.zero) for i in range(degree + 1)]

def format_coefficient(coefficient: PolyElement) -> str:
    """
    A human readable form of a coefficient, e.g. "11/6" or "t^2 + 1/2*t".
    """
    if coefficient.is_ground:
        return format_rational(constant_part(coefficient))
    parts = []
    for exponent in range(coefficient.degree(), -1, -1):
        part = coefficient.get((exponent,), QQ.zero)
        if part == 0:
            continue
        magnitude = format_rational(abs(part))
        if exponent == 0:
            term = magnitude
        else:
            power = "t" if exponent == 1 else f"t^{exponent}"
            term = power if magnitude == "1" else f"{magnitude}*{power}"
        sign = "-" if part < 0 else "+"
        parts.append((sign, term))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, term in parts[1:]:
        text += f" {sign} {term}"
    return text

class TruncatedSeries():
    """
    A power series in z known up to and including z^N.

    Two series can only be combined if they have the same flavor and the
    same truncation order N.
    """

    def __init__(self,
                 coefficients: Iterable,
                 order: Union[int, None] = None,
                 flavor: Union[SeriesFlavor, str] = SeriesFlavor.ORDINARY):
        coefficients = [to_coefficient(value) for value in coefficients]
        if order is None:
            order = len(coefficients) - 1
        if order < 1:
            errstr = f"The truncation order has to be positive, not {order}!"
            raise ValueError(errstr)
        coefficients = coefficients[:order + 1]
        coefficients.extend([COEFFICIENT_RING.zero] * (order + 1 - len(coefficients)))
        self._coefficients = tuple(coefficients)
        self._order = order
        self._flavor = SeriesFlavor(flavor)

    @classmethod
    def zero(cls,
             order: int = DEFAULT_ORDER,
             flavor: Union[SeriesFlavor, str] = SeriesFlavor.ORDINARY) -> TruncatedSeries:
        """
        The zero series.
        """
        return cls([], order=order, flavor=flavor)

    @classmethod
    def monomial(cls,
                 power: int,
                 coefficient=1,
                 order: int = DEFAULT_ORDER,
                 flavor: Union[SeriesFlavor, str] = SeriesFlavor.ORDINARY) -> TruncatedSeries:
        """
        The series coefficient * z^power.
        """
        coefficients = [0] * (order + 1)
        if power <= order:
            coefficients[power] = coefficient
        return cls(coefficients, order=order, flavor=flavor)

    @classmethod
    def variable(cls,
                 order: int = DEFAULT_ORDER,
                 flavor: Union[SeriesFlavor, str] = SeriesFlavor.ORDINARY) -> TruncatedSeries:
        """
        The series z.
        """
        return cls.monomial(1, 1, order=order, flavor=flavor)

    @property
    def coefficients(self) -> List[PolyElement]:
        """
        The coefficients of z^0, ..., z^N.
        """
        return list(self._coefficients)

    @property
    def order(self) -> int:
        """
        The truncation order N.
        """
        return self._order

    @property
    def flavor(self) -> SeriesFlavor:
        """
        Whether the series is ordinary or exponential.
        """
        return self._flavor

    def __getitem__(self, index: int) -> PolyElement:
        return self._coefficients[index]

    def is_weighted(self) -> bool:
        """
        Whether some coefficient depends on t.
        """
        return any(not coefficient.is_ground for coefficient in self._coefficients)

    def valuation(self) -> Union[int, None]:
        """
        The index of the first nonzero coefficient, None for zero.
        """
        for index, coefficient in enumerate(self._coefficients):
            if coefficient:
                return index
        return None

    def check_compatible(self, other: TruncatedSeries):
        """
        Raises a SeriesMismatchError if `other` has another flavor or
        truncation order.
        """
        if self._flavor is not other.flavor:
            errstr = (f"Cannot combine an {self._flavor.value} series with an"
                      f" {other.flavor.value} series!")
            raise SeriesMismatchError(errstr)
        if self._order != other.order:
            errstr = (f"Cannot combine series truncated at z^{self._order} and"
                      f" z^{other.order}!")
            raise SeriesMismatchError(errstr)

    def _new(self, coefficients: Iterable) -> TruncatedSeries:
        return TruncatedSeries(coefficients, order=self._order, flavor=self._flavor)

    def __add__(self, other) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            constant = to_coefficient(other)
            return self._new([self._coefficients[0] + constant]
                             + list(self._coefficients[1:]))
        self.check_compatible(other)
        return self._new(a + b for a, b in zip(self._coefficients, other.coefficients))

    def __radd__(self, other) -> TruncatedSeries:
        return self.__add__(other)

    def __neg__(self) -> TruncatedSeries:
        return self._new(-a for a in self._coefficients)

    def __sub__(self, other) -> TruncatedSeries:
        return self + (-other)

    def __rsub__(self, other) -> TruncatedSeries:
        return (-self) + other

    def __mul__(self, other) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            scalar = to_coefficient(other)
            return self._new(a * scalar for a in self._coefficients)
        self.check_compatible(other)
        first = self._coefficients
        second = other.coefficients
        result = [COEFFICIENT_RING.zero] * (self._order + 1)
        for i, a in enumerate(first):
            if not a:
                continue
            for j in range(self._order + 1 - i):
                b = second[j]
                if b:
                    result[i + j] += a * b
        return self._new(result)

    def __rmul__(self, other) -> TruncatedSeries:
        return self.__mul__(other)

    def __pow__(self, exponent: int) -> TruncatedSeries:
        if exponent < 0:
            errstr = "Only non-negative powers of truncated series exist!"
            raise ValueError(errstr)
        result = self._new([1])
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return False
        return (self._flavor is other.flavor
                and self._order == other.order
                and all(a == b for a, b in zip(self._coefficients, other.coefficients)))

    __hash__ = None

    def truncate(self, order: int) -> TruncatedSeries:
        """
        The same series known up to a lower order.
        """
        if order > self._order:
            errstr = f"Cannot raise the truncation order from {self._order} to {order}!"
            raise ValueError(errstr)
        return TruncatedSeries(self._coefficients, order=order, flavor=self._flavor)

    def derivative(self) -> TruncatedSeries:
        """
        d/dz of the series. It is known up to z^(N-1).
        """
        coefficients = [self._coefficients[n] * n for n in range(1, self._order + 1)]
        return TruncatedSeries(coefficients, order=max(self._order - 1, 1),
                               flavor=self._flavor)

    def integral(self) -> TruncatedSeries:
        """
        The integral from 0 to z. It is known up to z^(N+1).
        """
        coefficients = [0] + [self._coefficients[n] * QQ(1, n + 1)
                              for n in range(self._order + 1)]
        return TruncatedSeries(coefficients, order=self._order + 1, flavor=self._flavor)

    def scaled_argument(self, factor) -> TruncatedSeries:
        """
        The series f(factor * z).
        """
        factor = to_coefficient(factor)
        return self._new(coefficient * factor**n
                         for n, coefficient in enumerate(self._coefficients))

    def specialize_t(self, value=1) -> TruncatedSeries:
        """
        Replaces the grading variable t by a rational number.
        """
        return self._new(evaluate_t(coefficient, value)
                         for coefficient in self._coefficients)

    def to_dict(self) -> dict:
        """
        A JSON compatible description. Constant coefficients are written as
        "p/q" strings, t-polynomials as arrays of such strings in ascending
        degree.
        """
        if self.is_weighted():
            coefficients = [[format_rational(part) for part in t_coefficients(c)]
                            for c in self._coefficients]
        else:
            coefficients = [format_rational(constant_part(c))
                            for c in self._coefficients]
        return {"flavor": self._flavor.value,
                "order": self._order,
                "coefficients": coefficients}

    def to_json(self, indent: Union[int, None] = None) -> str:
        """
        The series as a JSON string.
        """
        return json.dumps(self.to_dict(), indent=indent)

    def __str__(self) -> str:
        parts = []
        for n, coefficient in enumerate(self._coefficients):
            if not coefficient:
                continue
            power = "1" if n == 0 else ("z" if n == 1 else f"z^{n}")
            text = format_coefficient(coefficient)
            if not coefficient.is_ground:
                text = f"({text})"
            if n == 0:
                parts.append(text)
            elif text == "1":
                parts.append(power)
            elif text == "-1":
                parts.append(f"-{power}")
            else:
                parts.append(f"{text}*{power}")
        parts.append(f"O(z^{self._order + 1})")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"TruncatedSeries({self}, {self._flavor.value})"
