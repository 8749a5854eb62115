"""
Series that can be written down directly, without solving a system of
equations.
"""
from __future__ import annotations

from sympy.polys.domains import QQ

from .truncated_series import (TruncatedSeries,
                               SeriesFlavor,
                               DEFAULT_ORDER,
                               COEFFICIENT_RING,
                               t)
from .operations import compose, reversion
from ..monomials.generator import OperadKind
from ..util import exact_factorial

def exponential_series(order: int = DEFAULT_ORDER,
                       scale=1,
                       flavor: SeriesFlavor = SeriesFlavor.EXPONENTIAL) -> TruncatedSeries:
    """
    The series e^{scale*z} - 1.

    The flavor is only a tag, the coefficients are the Taylor coefficients
    scale^n/n! in any case.
    """
    scale = QQ.convert(scale)
    coefficients = [0] + [COEFFICIENT_RING(scale**n * QQ(1, exact_factorial(n)))
                          for n in range(1, order + 1)]
    return TruncatedSeries(coefficients, order=order, flavor=flavor)

def generator_series(p,
                     order: int = DEFAULT_ORDER,
                     weighted: bool = False) -> TruncatedSeries:
    """
    The series of the generators of a presentation.

    A non-symmetric presentation gives the ordinary series sum t^w z^k, a
    shuffle presentation the exponential series sum t^w z^k/k!, where every
    generator of arity k and weight w contributes one term.
    """
    exponential = p.kind is OperadKind.SHUFFLE
    flavor = SeriesFlavor.EXPONENTIAL if exponential else SeriesFlavor.ORDINARY
    coefficients = [COEFFICIENT_RING.zero] * (order + 1)
    for generator in p.generators:
        if generator.arity > order:
            continue
        coefficient = t**generator.weight if weighted else COEFFICIENT_RING.one
        if exponential:
            coefficient = coefficient * QQ(1, exact_factorial(generator.arity))
        coefficients[generator.arity] += coefficient
    return TruncatedSeries(coefficients, order=order, flavor=flavor)

def free_operad_series(p,
                       order: int = DEFAULT_ORDER,
                       weighted: bool = False) -> TruncatedSeries:
    """
    The series of the free operad on the generators of `p`, ignoring its
    relations. It is the compositional inverse of z minus the generator
    series.

    Raises:
        NotInvertibleError: If unary generators make the free operad
            infinite dimensional in arity one.
    """
    gens = generator_series(p, order=order, weighted=weighted)
    z = TruncatedSeries.variable(order=order, flavor=gens.flavor)
    return reversion(z - gens)

def koszul_dual_series(f: TruncatedSeries) -> TruncatedSeries:
    """
    The series -rev(f)(-z). For a Koszul operad with series f it is the
    series of the Koszul dual operad.
    """
    return -reversion(f).scaled_argument(-1)

def direct_sum(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """
    The series f + g - z of two operads glued along their units.
    """
    z = TruncatedSeries.variable(order=f.order, flavor=f.flavor)
    return f + g - z

def lie_bracket_inverse_series(upsilon: TruncatedSeries,
                               phi: TruncatedSeries) -> TruncatedSeries:
    """
    The compositional inverse of the series of an operad obtained from the
    Lie operad by adding the generators counted by `upsilon`, and the
    operations counted by `phi` applied to the brackets.

    It reads 1 - e^{-z} - upsilon(z) - phi(e^{-z} + z - 1). The
    Lie-admissible operad has upsilon = phi = z^2/2.
    """
    upsilon.check_compatible(phi)
    order = upsilon.order
    flavor = upsilon.flavor
    exp_minus = exponential_series(order, scale=-1, flavor=flavor)
    z = TruncatedSeries.variable(order=order, flavor=flavor)
    brackets = exp_minus + z
    return -exp_minus - upsilon - compose(phi, brackets)

def lie_bracket_series(upsilon: TruncatedSeries,
                       phi: TruncatedSeries) -> TruncatedSeries:
    """
    The series whose compositional inverse is
    `lie_bracket_inverse_series(upsilon, phi)`.
    """
    return reversion(lie_bracket_inverse_series(upsilon, phi))
