"""
Systems of equations for generating series of monomial operads.

Every equation reads y_i = sum of terms, where a term is a signed product
(or nested C operator) of unknowns, multiplied by a power of the grading
variable t and divided by an integer. The ground variable stands for the
identity and is fixed to z.
"""
from __future__ import annotations
import json
from enum import Enum
from typing import Dict, List, Tuple, Union

from ..series.truncated_series import TruncatedSeries, SeriesFlavor
from ..series.operations import dims as series_dims

class SystemKind(Enum):
    """
    NONSYM_PRODUCT: Ordinary series, terms are products.
    SHUFFLE_C: Exponential series, terms are nested C operators.
    SYMMETRIC_ALGEBRAIC: Exponential series, terms are products divided by
        a symmetrization factor.
    """
    NONSYM_PRODUCT = "nonsym-product"
    SHUFFLE_C = "shuffle-C"
    SYMMETRIC_ALGEBRAIC = "symmetric-algebraic"

    def flavor(self) -> SeriesFlavor:
        """
        The flavor of the series solving a system of this kind.
        """
        if self is SystemKind.NONSYM_PRODUCT:
            return SeriesFlavor.ORDINARY
        return SeriesFlavor.EXPONENTIAL

class SystemEngine(Enum):
    """
    The construction used to obtain a system for a presentation.
    """
    STUMP = "stump"
    INCL_EXCL = "incl-excl"
    SYMMETRIC = "symmetric"

class EmitFormat(Enum):
    """
    The output formats of a system.
    """
    TEXT = "text"
    JSON = "json"
    ODE = "ode"

class Term():
    """
    The term sign * t^t_exp / divisor * F(factors), where F is the product
    of the factors or the nested operator C(f_1, C(f_2, ...)), depending on
    the kind of the system.
    """
    __slots__ = ("_sign", "_t_exp", "_factors", "_divisor")

    def __init__(self,
                 sign: int,
                 t_exp: int,
                 factors: List[str],
                 divisor: int = 1):
        if sign not in (1, -1):
            errstr = f"The sign of a term has to be +1 or -1, not {sign}!"
            raise ValueError(errstr)
        if t_exp < 0:
            errstr = f"The exponent of t cannot be negative, but is {t_exp}!"
            raise ValueError(errstr)
        if divisor < 1:
            errstr = f"The divisor of a term has to be positive, not {divisor}!"
            raise ValueError(errstr)
        if len(factors) == 0:
            errstr = "A term needs at least one factor!"
            raise ValueError(errstr)
        self._sign = sign
        self._t_exp = t_exp
        self._factors = tuple(factors)
        self._divisor = divisor

    @property
    def sign(self) -> int:
        return self._sign

    @property
    def t_exp(self) -> int:
        return self._t_exp

    @property
    def factors(self) -> Tuple[str, ...]:
        return self._factors

    @property
    def divisor(self) -> int:
        return self._divisor

    def to_dict(self) -> dict:
        return {"sign": self._sign,
                "t_exp": self._t_exp,
                "factors": list(self._factors),
                "divisor": self._divisor}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Term):
            return False
        return ((self._sign, self._t_exp, self._factors, self._divisor)
                == (other.sign, other.t_exp, other.factors, other.divisor))

    def __hash__(self) -> int:
        return hash((self._sign, self._t_exp, self._factors, self._divisor))

    def __repr__(self) -> str:
        return (f"Term({self._sign:+d}, t^{self._t_exp},"
                f" {list(self._factors)}, /{self._divisor})")

class Variable():
    """
    An unknown series of a system.

    Attributes:
        id (str): The name used in equations.
        descriptor (str): What the variable counts, e.g. the encoding of a
            stump or of a monomial of the inclusion-exclusion set.
        multiplicity (int): How often the variable enters the total series.
        members (List[str]): For merged variables the encodings of all
            stumps that were merged.
    """

    def __init__(self,
                 id: str,
                 descriptor: str,
                 multiplicity: int = 1,
                 members: Union[List[str], None] = None):
        self.id = id
        self.descriptor = descriptor
        self.multiplicity = multiplicity
        self.members = [descriptor] if members is None else list(members)

    def to_dict(self) -> dict:
        return {"id": self.id,
                "descriptor": self.descriptor,
                "multiplicity": self.multiplicity,
                "members": list(self.members)}

    def __repr__(self) -> str:
        return f"Variable({self.id!r}, {self.descriptor!r}, m={self.multiplicity})"

class EqSystem():
    """
    A system of equations y_i = sum of terms, one for every unknown.

    The ground variable has no equation, it is the series z. The total
    series of the operad is the sum of the reported variables, each taken
    with its multiplicity.
    """

    def __init__(self,
                 kind: Union[SystemKind, str],
                 variables: List[Variable],
                 equations: Dict[str, List[Term]],
                 ground_variable: str,
                 reported: Union[List[str], None] = None):
        self.kind = SystemKind(kind)
        self.variables = list(variables)
        self._variable_table = {variable.id: variable for variable in self.variables}
        if len(self._variable_table) != len(self.variables):
            errstr = "Variable identifiers of a system have to be unique!"
            raise ValueError(errstr)
        if ground_variable not in self._variable_table:
            errstr = f"The ground variable {ground_variable!r} is not a variable!"
            raise ValueError(errstr)
        for target, terms in equations.items():
            if target not in self._variable_table or target == ground_variable:
                errstr = f"There cannot be an equation for {target!r}!"
                raise ValueError(errstr)
            for term in terms:
                for factor in term.factors:
                    if factor not in self._variable_table:
                        errstr = f"The term {term} uses the unknown variable {factor!r}!"
                        raise ValueError(errstr)
        self.equations = {variable.id: list(equations.get(variable.id, []))
                          for variable in self.variables
                          if variable.id != ground_variable}
        self.ground_variable = ground_variable
        if reported is None:
            reported = [variable.id for variable in self.variables]
        self.reported = list(reported)

    def variable(self, id: str) -> Variable:
        """
        Finds a variable by its identifier.
        """
        return self._variable_table[id]

    @property
    def unknowns(self) -> List[str]:
        """
        The identifiers of all variables except the ground variable.
        """
        return [variable.id for variable in self.variables
                if variable.id != self.ground_variable]

    @property
    def flavor(self) -> SeriesFlavor:
        """
        The flavor of the series solving the system.
        """
        return self.kind.flavor()

    def num_terms(self) -> int:
        """
        The total number of terms of all equations.
        """
        return sum(len(terms) for terms in self.equations.values())

    def to_dict(self) -> dict:
        """
        A JSON compatible description of the system.
        """
        return {"kind": self.kind.value,
                "ground": self.ground_variable,
                "reported": list(self.reported),
                "variables": [variable.to_dict() for variable in self.variables],
                "equations": [{"target": target,
                               "terms": [term.to_dict() for term in terms]}
                              for target, terms in self.equations.items()]}

    def __repr__(self) -> str:
        return (f"EqSystem({self.kind.value}, {len(self.variables)} variables,"
                f" {self.num_terms()} terms)")

class SeriesSolution():
    """
    The series solving a system, one per variable, and the total series.
    """

    def __init__(self,
                 series: Dict[str, TruncatedSeries],
                 total: TruncatedSeries,
                 weighted: bool = False):
        self.series = dict(series)
        self.total = total
        self.weighted = weighted

    def __getitem__(self, id: str) -> TruncatedSeries:
        return self.series[id]

    def dims(self) -> List[int]:
        """
        The dimensions dim P(n) for n = 1, ..., N read off the total.
        """
        return series_dims(self.total)

    def to_dict(self) -> dict:
        return {"total": self.total.to_dict(),
                "dims": self.dims(),
                "variables": {id: series.to_dict()
                              for id, series in self.series.items()}}

    def to_json(self, indent: Union[int, None] = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)
