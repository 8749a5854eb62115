"""
Writing systems of equations as text, as JSON or as a system of ordinary
differential equations.

Differentiating y_i = sum C(f_1, ..., f_k) with C(f, g)' = f' g gives
y_i' = sum f_1' C(f_2, ..., f_k). The nested operators C(f_2, ..., f_k)
with more than one argument become ghost variables h_1, h_2, ..., each with
its own differential equation.
"""
from __future__ import annotations
import json
from typing import Dict, List, Tuple, Union

from .eq_system import EqSystem, EmitFormat, SeriesSolution, SystemKind, Term
from ..series.truncated_series import TruncatedSeries, t
from ..series.operations import c_multi
from ..opgen_exceptions import EmitFormatError

GROUND_NAME = "z"

def _name(s: EqSystem, id: str) -> str:
    return GROUND_NAME if id == s.ground_variable else id

def _product_text(names: List[str]) -> str:
    powers: Dict[str, int] = {}
    for name in names:
        powers[name] = powers.get(name, 0) + 1
    return "*".join(name if power == 1 else f"{name}^{power}"
                    for name, power in powers.items())

def _term_text(s: EqSystem, term: Term, weighted: bool) -> Tuple[str, str]:
    """
    The sign and the unsigned text of a term.
    """
    names = [_name(s, factor) for factor in term.factors]
    if s.kind is SystemKind.SHUFFLE_C and len(names) > 1:
        body = f"C({', '.join(names)})"
    else:
        body = _product_text(names)
    prefix = ""
    if term.divisor != 1:
        prefix += f"1/{term.divisor}*"
    if weighted and term.t_exp > 0:
        prefix += "t*" if term.t_exp == 1 else f"t^{term.t_exp}*"
    return ("-" if term.sign < 0 else "+"), prefix + body

def _sum_text(parts: List[Tuple[str, str]]) -> str:
    if not parts:
        return "0"
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text

def equation_text(s: EqSystem, target: str, weighted: bool = False) -> str:
    """
    The equation of one variable, e.g. "y_mu = z^2 + z*y_mu".
    """
    parts = [_term_text(s, term, weighted) for term in s.equations[target]]
    return f"{target} = {_sum_text(parts)}"

def _text(s: EqSystem, weighted: bool) -> str:
    lines = [f"# {s.kind.value} system, {GROUND_NAME} = {s.ground_variable}"]
    for variable in s.variables:
        if variable.id == s.ground_variable:
            continue
        line = f"# {variable.id}: {variable.descriptor}"
        if variable.multiplicity != 1:
            line += f" (multiplicity {variable.multiplicity})"
        if len(variable.members) > 1:
            line += f" [{len(variable.members)} stumps]"
        lines.append(line)
    lines.extend(equation_text(s, target, weighted) for target in s.equations)
    total = " + ".join(_name(s, id) if s.variable(id).multiplicity == 1
                       else f"{s.variable(id).multiplicity}*{_name(s, id)}"
                       for id in s.reported)
    lines.append(f"total = {total}")
    return "\n".join(lines) + "\n"

class OdeTerm():
    """
    The term sign * t^t_exp * derivative' * other of a differential
    equation. `other` is None if the derivative stands alone.
    """

    def __init__(self, sign: int, t_exp: int, derivative: str, other: Union[str, None]):
        self.sign = sign
        self.t_exp = t_exp
        self.derivative = derivative
        self.other = other

class OdeSystem():
    """
    A shuffle system in differential form.

    Attributes:
        equations (Dict[str, List[OdeTerm]]): The right hand sides of
            var' = ..., for the unknowns and the ghost variables.
        ghosts (Dict[str, Tuple[str, ...]]): Every ghost variable with the
            arguments of the operator C it stands for.
    """

    def __init__(self, s: EqSystem):
        if s.kind is not SystemKind.SHUFFLE_C:
            errstr = (f"Only shuffle-C systems have a differential form, not"
                      f" {s.kind.value} systems!")
            raise EmitFormatError(errstr)
        self.system = s
        self.ghosts: Dict[str, Tuple[str, ...]] = {}
        self._ghost_of: Dict[Tuple[str, ...], str] = {}
        self.equations: Dict[str, List[OdeTerm]] = {}
        for target, terms in s.equations.items():
            self.equations[target] = [self._differentiate(term.sign, term.t_exp,
                                                          term.factors)
                                      for term in terms]

    def _argument(self, factors: Tuple[str, ...]) -> str:
        if len(factors) == 1:
            return factors[0]
        if factors not in self._ghost_of:
            name = f"h{len(self.ghosts) + 1}"
            self._ghost_of[factors] = name
            self.ghosts[name] = factors
            self.equations[name] = [self._differentiate(1, 0, factors)]
        return self._ghost_of[factors]

    def _differentiate(self, sign: int, t_exp: int, factors: Tuple[str, ...]) -> OdeTerm:
        if len(factors) == 1:
            return OdeTerm(sign, t_exp, factors[0], None)
        return OdeTerm(sign, t_exp, factors[0], self._argument(factors[1:]))

    def _factor_text(self, id: str) -> str:
        return _name(self.system, id)

    def to_text(self, weighted: bool = False) -> str:
        """
        The differential equations, the ghost definitions and the initial
        conditions.
        """
        ground = self.system.ground_variable
        lines = [f"{GROUND_NAME}' = 1"]
        for target, terms in self.equations.items():
            parts = []
            for term in terms:
                factors = []
                if term.derivative != ground:
                    factors.append(f"{term.derivative}'")
                if term.other is not None:
                    factors.append(self._factor_text(term.other))
                body = "*".join(factors) if factors else "1"
                if weighted and term.t_exp > 0:
                    power = "t" if term.t_exp == 1 else f"t^{term.t_exp}"
                    body = f"{power}*{body}"
                parts.append(("-" if term.sign < 0 else "+", body))
            lines.append(f"{target}' = {_sum_text(parts)}")
        for ghost, factors in self.ghosts.items():
            names = ", ".join(self._factor_text(factor) for factor in factors)
            lines.append(f"{ghost} = C({names})")
        for target in self.equations:
            lines.append(f"{target}(0) = 0")
        return "\n".join(lines) + "\n"

    def residuals(self, solution: SeriesSolution) -> Dict[str, TruncatedSeries]:
        """
        Evaluates var' - (right hand side) on a solution, for the unknowns
        and the ghosts. All residuals vanish up to z^(N-1) if the solution
        solves the system.
        """
        series = dict(solution.series)
        for ghost, factors in self.ghosts.items():
            series[ghost] = c_multi([series[factor] for factor in factors])
        result = {}
        for target, terms in self.equations.items():
            residual = series[target].derivative()
            for term in terms:
                value = series[term.derivative].derivative()
                if term.other is not None:
                    value = value * series[term.other].truncate(value.order)
                if solution.weighted:
                    value = value * t**term.t_exp
                residual = residual - value * term.sign
            result[target] = residual
        return result

def ode_system(s: EqSystem) -> OdeSystem:
    """
    The differential form of a shuffle-C system.

    Raises:
        EmitFormatError: If `s` is not a shuffle-C system.
    """
    return OdeSystem(s)

def emit_system(s: EqSystem,
                fmt: Union[EmitFormat, str] = EmitFormat.TEXT,
                weighted: bool = False) -> str:
    """
    Writes a system in one of the output formats.

    Args:
        s (EqSystem): The system.
        fmt (EmitFormat): Text, JSON or the differential form.
        weighted (bool): Whether powers of t are written in the text forms.

    Raises:
        EmitFormatError: If the differential form is requested for a system
            that is not a shuffle-C system.
    """
    fmt = EmitFormat(fmt)
    if fmt is EmitFormat.JSON:
        return json.dumps(s.to_dict(), indent=2)
    if fmt is EmitFormat.ODE:
        return ode_system(s).to_text(weighted)
    return _text(s, weighted)
