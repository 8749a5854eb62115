"""
Solving systems of equations as coefficient recursions.

All unknowns have zero constant term, so a term with at least two factors
only needs coefficients of lower arities. Terms with a single factor tie a
variable to another one in the same arity. They are evaluated in
topological order and a cycle among them means that the recursion is not
well founded.
"""
from __future__ import annotations
import logging
from typing import Dict, List

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement

from .eq_system import EqSystem, SeriesSolution, SystemKind, Term
from ..series.truncated_series import COEFFICIENT_RING, TruncatedSeries, t
from ..opgen_exceptions import IllFoundedSystemError

logger = logging.getLogger(__name__)

def _evaluation_order(s: EqSystem) -> List[str]:
    """
    Orders the unknowns such that every variable comes after the variables
    it equals up to a factor in the same arity.
    """
    depends: Dict[str, set] = {}
    for target, terms in s.equations.items():
        depends[target] = {term.factors[0] for term in terms
                           if len(term.factors) == 1
                           and term.factors[0] != s.ground_variable}
    order = []
    state = {}
    for start in s.equations:
        if start in state:
            continue
        stack = [(start, iter(sorted(depends[start])))]
        state[start] = "open"
        while stack:
            node, remaining = stack[-1]
            following = next(remaining, None)
            if following is None:
                stack.pop()
                state[node] = "closed"
                order.append(node)
                continue
            if state.get(following) == "open":
                errstr = (f"The variables {following} and {node} depend on each other"
                          " in the same arity, the recursion is not well founded!")
                raise IllFoundedSystemError(errstr)
            if following not in state:
                state[following] = "open"
                stack.append((following, iter(sorted(depends[following]))))
    return order

class _TermState():
    """
    The partial products (or nested C operators) of the factor suffixes of
    one term, known up to the current arity.
    """

    def __init__(self, term: Term, prefactor: PolyElement, n_max: int, c_form: bool):
        self.term = term
        self.prefactor = prefactor
        self.c_form = c_form
        self.suffixes = [[COEFFICIENT_RING.zero] * (n_max + 1)
                         for _ in term.factors[:-1]]

    def value(self, n: int, coefficients: Dict[str, List[PolyElement]]) -> PolyElement:
        """
        The coefficient of z^n of the term, computed from lower arities.

        A single factor term is read off the factor in the same arity.
        """
        factors = self.term.factors
        if len(factors) == 1:
            return self.prefactor * coefficients[factors[0]][n]
        for j in range(len(factors) - 2, -1, -1):
            first = coefficients[factors[j]]
            rest = (coefficients[factors[j + 1]] if j + 1 == len(factors) - 1
                    else self.suffixes[j + 1])
            total = COEFFICIENT_RING.zero
            for i in range(1, n):
                if first[i] and rest[n - i]:
                    if self.c_form:
                        total += first[i] * rest[n - i] * i
                    else:
                        total += first[i] * rest[n - i]
            if self.c_form:
                total = total * QQ(1, n)
            self.suffixes[j][n] = total
        return self.prefactor * self.suffixes[0][n]

def solve_coefficients(s: EqSystem, n_max: int, weighted: bool = False) -> SeriesSolution:
    """
    Computes the coefficients of all unknowns up to z^n_max.

    Products are Cauchy convolutions, C operators use
    [z^n] C(f, g) = 1/n sum k f_k g_{n-k} and symmetrized terms are divided
    by their divisor.

    Args:
        s (EqSystem): The system.
        n_max (int): The truncation order.
        weighted (bool): Whether the powers of t in the terms are kept.
            Otherwise t is set to 1.

    Returns:
        SeriesSolution: The series of all variables, including the ground
            variable, and the total series.

    Raises:
        IllFoundedSystemError: If single factor terms form a cycle.
    """
    if n_max < 1:
        errstr = f"The truncation order has to be positive, not {n_max}!"
        raise ValueError(errstr)
    order = _evaluation_order(s)
    c_form = s.kind is SystemKind.SHUFFLE_C
    coefficients: Dict[str, List[PolyElement]] = {
        variable.id: [COEFFICIENT_RING.zero] * (n_max + 1) for variable in s.variables}
    coefficients[s.ground_variable][1] = COEFFICIENT_RING.one
    states: Dict[str, List[_TermState]] = {}
    for target, terms in s.equations.items():
        states[target] = []
        for term in terms:
            prefactor = COEFFICIENT_RING(term.sign) * QQ(1, term.divisor)
            if weighted:
                prefactor = prefactor * t**term.t_exp
            states[target].append(_TermState(term, prefactor, n_max, c_form))
    for n in range(1, n_max + 1):
        for target in order:
            total = COEFFICIENT_RING.zero
            for state in states[target]:
                total += state.value(n, coefficients)
            coefficients[target][n] = total
    flavor = s.flavor
    series = {id: TruncatedSeries(values, order=n_max, flavor=flavor)
              for id, values in coefficients.items()}
    total = TruncatedSeries.zero(order=n_max, flavor=flavor)
    for id in s.reported:
        total = total + series[id] * s.variable(id).multiplicity
    logger.debug(f"Solved {len(order)} unknowns up to z^{n_max}.")
    return SeriesSolution(series, total, weighted=weighted)
