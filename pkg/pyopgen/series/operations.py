"""
Operations on truncated series: ring operations, the integral operator C,
composition, compositional reversion and the conversion between ordinary
and exponential series.
"""
from __future__ import annotations
from typing import List, Sequence

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement

from .truncated_series import (TruncatedSeries,
                               SeriesFlavor,
                               COEFFICIENT_RING,
                               constant_part)
from ..opgen_exceptions import (SeriesMismatchError,
                                SeriesDomainError,
                                NotInvertibleError)
from ..util import exact_factorial

def add(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """
    The sum f + g.
    """
    return f + g

def mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """
    The Cauchy product f * g truncated at the common order.
    """
    return f * g

def _check_exponential(f: TruncatedSeries):
    if f.flavor is not SeriesFlavor.EXPONENTIAL:
        errstr = "The operator C is only defined on exponential series!"
        raise SeriesMismatchError(errstr)

def c_op(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """
    The integral operator C(f, g)(z) = int_0^z f'(w) g(w) dw.

    The coefficient of z^n is (1/n) * sum_{k=1}^{n} k f_k g_{n-k}.
    """
    _check_exponential(f)
    f.check_compatible(g)
    result = [COEFFICIENT_RING.zero] * (f.order + 1)
    for n in range(1, f.order + 1):
        total = COEFFICIENT_RING.zero
        for k in range(1, n + 1):
            if f[k] and g[n - k]:
                total += f[k] * g[n - k] * k
        result[n] = total * QQ(1, n)
    return TruncatedSeries(result, order=f.order, flavor=f.flavor)

def c_multi(fs: Sequence[TruncatedSeries]) -> TruncatedSeries:
    """
    The nested operator C(f_1, C(f_2, ..., C(f_{m-1}, f_m)...)).

    A single series is returned unchanged.
    """
    if len(fs) == 0:
        errstr = "c_multi needs at least one series!"
        raise ValueError(errstr)
    result = fs[-1]
    for f in reversed(fs[:-1]):
        result = c_op(f, result)
    return result

def shuffle_number(sizes: Sequence[int]) -> int:
    """
    The number c(n_1, ..., n_m) of decompositions of {1, ..., n} into blocks
    of the given sizes with increasing minima, read off the operator C as
    n! [z^n] C(z^{n_1}/n_1!, ..., z^{n_m}/n_m!).
    """
    if any(size < 1 for size in sizes):
        errstr = f"All block sizes have to be positive, not {list(sizes)}!"
        raise ValueError(errstr)
    n = sum(sizes)
    fs = [TruncatedSeries.monomial(size, QQ(1, exact_factorial(size)),
                                   order=max(n, 1),
                                   flavor=SeriesFlavor.EXPONENTIAL)
          for size in sizes]
    coefficient = constant_part(c_multi(fs)[n])
    return int(coefficient * exact_factorial(n))

def compose(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """
    The composition f(g(z)) by Horner evaluation.

    Raises:
        SeriesDomainError: If g has a nonzero constant term.
    """
    f.check_compatible(g)
    if g[0]:
        errstr = "The inner series of a composition needs a zero constant term!"
        raise SeriesDomainError(errstr)
    coefficients = f.coefficients
    result = TruncatedSeries([coefficients[-1]], order=f.order, flavor=f.flavor)
    for coefficient in reversed(coefficients[:-1]):
        result = result * g + coefficient
    return result

def _inverse_of_linear_part(f: TruncatedSeries):
    linear = f[1]
    if not linear or not linear.is_ground:
        errstr = (f"The linear coefficient {linear} is not invertible,"
                  " so the series has no compositional inverse!")
        raise NotInvertibleError(errstr)
    return QQ.one / constant_part(linear)

def reversion(f: TruncatedSeries) -> TruncatedSeries:
    """
    The compositional inverse g of f, i.e. f(g(z)) = z up to the order.

    The coefficients of g are corrected one order at a time, the error of
    f(g) at z^n fixes g_n.

    Raises:
        SeriesDomainError: If f has a nonzero constant term.
        NotInvertibleError: If the linear coefficient is zero or depends on t.
    """
    if f[0]:
        errstr = "Only series with zero constant term have a compositional inverse!"
        raise SeriesDomainError(errstr)
    inverse = _inverse_of_linear_part(f)
    coefficients: List[PolyElement] = [COEFFICIENT_RING.zero] * (f.order + 1)
    coefficients[1] = COEFFICIENT_RING(inverse)
    for n in range(2, f.order + 1):
        g = TruncatedSeries(coefficients, order=f.order, flavor=f.flavor)
        error = compose(f, g)[n]
        coefficients[n] = -error * inverse
    return TruncatedSeries(coefficients, order=f.order, flavor=f.flavor)

def exp_to_ord(f: TruncatedSeries) -> TruncatedSeries:
    """
    Turns an exponential series into the ordinary series of the same
    sequence, multiplying the coefficient of z^n by n!.
    """
    if f.flavor is not SeriesFlavor.EXPONENTIAL:
        errstr = "exp_to_ord expects an exponential series!"
        raise SeriesMismatchError(errstr)
    return TruncatedSeries([c * exact_factorial(n) for n, c in enumerate(f.coefficients)],
                           order=f.order, flavor=SeriesFlavor.ORDINARY)

def ord_to_exp(f: TruncatedSeries) -> TruncatedSeries:
    """
    Turns an ordinary series into the exponential series of the same
    sequence, dividing the coefficient of z^n by n!.
    """
    if f.flavor is not SeriesFlavor.ORDINARY:
        errstr = "ord_to_exp expects an ordinary series!"
        raise SeriesMismatchError(errstr)
    return TruncatedSeries([c * QQ(1, exact_factorial(n))
                            for n, c in enumerate(f.coefficients)],
                           order=f.order, flavor=SeriesFlavor.EXPONENTIAL)

def _as_dimension(value, n: int) -> int:
    value = QQ.convert(value)
    if value.denominator != 1 or value < 0:
        errstr = (f"The value {value} at arity {n} is not a dimension,"
                  " the series is inconsistent!")
        raise SeriesDomainError(errstr)
    return int(value.numerator)

def weighted_dims(f: TruncatedSeries) -> List[PolyElement]:
    """
    The graded dimensions H_{P(n)}(t) for n = 1, ..., N.

    Raises:
        SeriesDomainError: If a t-coefficient is not a non-negative integer.
    """
    if f.flavor is SeriesFlavor.EXPONENTIAL:
        f = exp_to_ord(f)
    result = []
    for n in range(1, f.order + 1):
        for _, value in f[n].items():
            _as_dimension(value, n)
        result.append(f[n])
    return result

def dims(f: TruncatedSeries) -> List[int]:
    """
    The dimensions dim P(n) for n = 1, ..., N.

    Graded series are evaluated at t = 1.

    Raises:
        SeriesDomainError: If a value is not a non-negative integer.
    """
    if f.is_weighted():
        f = f.specialize_t(1)
    if f.flavor is SeriesFlavor.EXPONENTIAL:
        f = exp_to_ord(f)
    return [_as_dimension(constant_part(f[n]), n) for n in range(1, f.order + 1)]
